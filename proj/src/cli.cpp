#include "valence/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "valence/constructions.hpp"
#include "valence/error.hpp"
#include "valence/finite_monoid.hpp"
#include "valence/grammar.hpp"
#include "valence/interchange.hpp"
#include "valence/io.hpp"
#include "valence/simulate.hpp"

namespace valence::cli {

  namespace {

    struct Options {
      std::string                command;
      std::string                mode;  // convert / transform target
      std::string                input;
      std::string                other;
      std::string                word;
      std::size_t                bound = 8;
      std::optional<std::size_t> budget;
      std::optional<std::size_t> stack_depth;
      std::size_t                coeff = kDefaultCoefficientBound;
      std::size_t                steps = 24;
      std::string                output;
      std::string                format = "text";
      std::string                factors;
      std::size_t                k       = 2;
      std::size_t                n       = 2;
      std::size_t                max_ell = 6;
      std::string                ideal;
      std::string                via;
      std::string                strategy = "all";

      Budgets budgets() const {
        Budgets b;
        b.epsilon           = budget;
        b.stack_depth       = stack_depth;
        b.coefficient_bound = coeff;
        return b;
      }
    };

    class UsageError : public Error {
     public:
      using Error::Error;
    };

    int exit_code(Verdict v) {
      switch (v) {
        case Verdict::Yes:
          return kYes;
        case Verdict::No:
          return kNo;
        case Verdict::Undetermined:
          return kUndetermined;
      }
      return kUndetermined;
    }

    std::vector<std::string> split(std::string const& s, std::string const& seps) {
      std::vector<std::string> out;
      std::string              cur;
      for (char c : s) {
        if (seps.find(c) != std::string::npos) {
          out.push_back(cur);
          cur.clear();
        } else {
          cur += c;
        }
      }
      out.push_back(cur);
      return out;
    }

    SpecDocument need_input(Options const& o, std::string const& path) {
      if (path.empty()) {
        throw UsageError(o.command + " needs --input");
      }
      return load_spec(path);
    }

    MonoidDescriptor const& monoid_of(SpecDocument const& doc) {
      return std::visit(
          [](auto const& p) -> MonoidDescriptor const& {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, MonoidDescriptor>) {
              return p;
            } else if constexpr (std::is_same_v<T, RationalMonoidAutomaton>) {
              return p.core.monoid;
            } else {
              return p.monoid;
            }
          },
          doc.payload);
    }

    std::string alphabet_of(SpecDocument const& doc) {
      switch (doc.kind()) {
        case DocumentKind::Nfa:
          return std::get<ValenceNFA>(doc.payload).alphabet;
        case DocumentKind::Rma:
          return std::get<RationalMonoidAutomaton>(doc.payload).core.alphabet;
        case DocumentKind::Pda:
          return std::get<ValencePDA>(doc.payload).alphabet;
        case DocumentKind::Grammar:
          return std::get<ValenceGrammar>(doc.payload).terminals;
        case DocumentKind::Monoid:
          break;
      }
      throw UsageError("a monoid document has no language");
    }

    RationalMonoidAutomaton as_rma(SpecDocument const& doc) {
      if (auto m = std::get_if<RationalMonoidAutomaton>(&doc.payload)) {
        return *m;
      }
      if (auto m = std::get_if<ValenceNFA>(&doc.payload)) {
        return RationalMonoidAutomaton{*m};
      }
      throw UsageError(std::string("expected an nfa or rma document, got ")
                       + to_string(doc.kind()));
    }

    FiniteTable finite_table_of(SpecDocument const& doc) {
      auto const& desc = monoid_of(doc);
      if (desc.is<FiniteTable>()) {
        return desc.as<FiniteTable>();
      }
      if (!is_finite(desc)) {
        throw UnsupportedError("expected a finite monoid, got " + describe(desc));
      }
      return cayley_table(desc);
    }

    DerivationStrategy strategy_of(Options const& o) {
      if (o.strategy == "all") {
        return DerivationStrategy::AllOrders;
      }
      if (o.strategy == "leftmost") {
        return DerivationStrategy::Leftmost;
      }
      throw UsageError("--strategy must be 'all' or 'leftmost'");
    }

    // Verdict for every word of length <= bound over `alphabet`; symbols
    // outside the document's own alphabet are rejected.
    LanguageSample sample_language(SpecDocument const& doc,
                                   std::string const&  alphabet,
                                   Options const&      o) {
      auto const budgets = o.budgets();
      auto const own     = alphabet_of(doc);
      auto       inside  = [&own](Word const& w) {
        return std::all_of(w.begin(), w.end(), [&](Symbol c) {
          return own.find(c) != std::string::npos;
        });
      };
      switch (doc.kind()) {
        case DocumentKind::Grammar: {
          auto const& g = std::get<ValenceGrammar>(doc.payload);
          DeriveOptions opts;
          opts.max_steps       = o.steps;
          opts.strategy        = strategy_of(o);
          opts.max_word_length = o.bound;
          auto           lang  = derive_language(g, opts);
          LanguageSample out;
          out.words = lang.words;
          if (lang.truncated) {
            for (auto const& w : words_up_to(alphabet, o.bound)) {
              if (!lang.words.count(w) && inside(w)) {
                out.undetermined.insert(w);
              }
            }
          }
          return out;
        }
        case DocumentKind::Pda: {
          auto const& p = std::get<ValencePDA>(doc.payload);
          return enumerate_with(alphabet, o.bound, [&](Word const& w) {
            return inside(w) ? pda_accepts(p, w, budgets) : Verdict::No;
          });
        }
        default: {
          auto const      m = as_rma(doc);
          TargetCondition cond(m, o.coeff);
          return enumerate_with(alphabet, o.bound, [&](Word const& w) {
            return inside(w) ? rma_accepts(m, cond, w, budgets) : Verdict::No;
          });
        }
      }
    }

    std::string merged_alphabet(std::string a, std::string const& b) {
      a += b;
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
      return a;
    }

    Json words_json(std::set<Word> const& words) {
      std::vector<Word> v(words.begin(), words.end());
      std::sort(v.begin(), v.end(), [](Word const& x, Word const& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
      });
      return v;
    }

    std::string show(Word const& w) {
      return w.empty() ? "ε" : w;
    }

    std::string element_name(FiniteTable const& t, std::size_t i) {
      return t.names.empty() ? std::to_string(i) : t.names[i];
    }

    Json index_set_json(FiniteTable const& t, IndexSet const& s) {
      Json j = Json::array();
      for (auto i : s) {
        j.push_back(element_name(t, i));
      }
      return j;
    }

    Json structure_json(FiniteTable const& t, StructureReport const& r) {
      auto sets = [&](std::vector<IndexSet> const& v) {
        Json j = Json::array();
        for (auto const& s : v) {
          j.push_back(index_set_json(t, s));
        }
        return j;
      };
      Json groups = Json::array();
      for (auto const& g : r.maximal_subgroups) {
        groups.push_back({{"idempotent", element_name(t, g.idempotent)},
                          {"elements", index_set_json(t, g.elements)}});
      }
      return Json{
          {"size", r.size},
          {"zero", r.zero ? Json(element_name(t, *r.zero)) : Json()},
          {"commutative", r.commutative},
          {"group", r.group},
          {"idempotents", index_set_json(t, r.idempotents)},
          {"ideals", sets(r.ideals)},
          {"ideals_complete", r.ideals_complete},
          {"proper_ideals", sets(r.proper_ideals)},
          {"proper_ideal_union", index_set_json(t, r.proper_ideal_union)},
          {"simple", r.simple},
          {"zero_simple", r.zero_simple},
          {"completely_simple", r.completely_simple},
          {"completely_zero_simple", r.completely_zero_simple},
          {"primitive_idempotents", index_set_json(t, r.primitive_idempotents)},
          {"r_classes", sets(r.r_classes)},
          {"l_classes", sets(r.l_classes)},
          {"h_classes", sets(r.h_classes)},
          {"maximal_subgroups", groups}};
    }

    Json witness_json(RationalMonoidAutomaton const& m, InterchangeWitness const& w) {
      auto const& desc = m.core.monoid;
      Json        blocks_products = Json::array();
      for (auto const& x : w.block_products) {
        blocks_products.push_back(to_string(desc, x));
      }
      return Json{{"boundary_state", m.core.states[w.boundary_state]},
                  {"lambda", w.lambda},
                  {"blocks", w.blocks},
                  {"mu", w.mu},
                  {"sigma", cycle_notation(w.sigma)},
                  {"permuted_word", w.permuted_word},
                  {"lambda_product", to_string(desc, w.lambda_product)},
                  {"block_products", blocks_products},
                  {"mu_product", to_string(desc, w.mu_product)},
                  {"original_product", to_string(desc, w.original_product)},
                  {"permuted_product", to_string(desc, w.permuted_product)},
                  {"permuted_verdict", to_string(w.permuted_verdict)}};
    }

    IndexSet parse_ideal(FiniteTable const& t, std::string const& spec) {
      if (spec.empty()) {
        throw UsageError("--ideal is required (comma-separated elements)");
      }
      IndexSet out;
      for (auto const& item : split(spec, ",")) {
        auto it = std::find(t.names.begin(), t.names.end(), item);
        if (it != t.names.end()) {
          out.push_back(static_cast<std::size_t>(it - t.names.begin()));
          continue;
        }
        try {
          std::size_t used = 0;
          auto        i    = std::stoul(item, &used);
          if (used == item.size() && i < t.size) {
            out.push_back(i);
            continue;
          }
        } catch (std::exception const&) {
        }
        throw UsageError("unknown ideal element '" + item + "'");
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // Commands. Each fills `report` and returns the verdict.
    ////////////////////////////////////////////////////////////////////////

    struct Context {
      Options const& o;
      Json&          report;
      std::ostream&  text;  // human-readable lines (format text)
      SearchStats    stats;
    };

    Verdict cmd_member(Context& c) {
      auto const& o   = c.o;
      auto        doc = need_input(o, o.input);
      Verdict     v   = Verdict::Undetermined;
      auto const  b   = o.budgets();
      switch (doc.kind()) {
        case DocumentKind::Pda:
          v = pda_accepts(std::get<ValencePDA>(doc.payload), o.word, b, &c.stats);
          break;
        case DocumentKind::Grammar: {
          auto const& g = std::get<ValenceGrammar>(doc.payload);
          if (is_right_linear(g)) {
            v = nfa_accepts(rightlinear_to_nfa(g), o.word, b, &c.stats);
            break;
          }
          check_word(g.terminals, o.word);
          DeriveOptions opts;
          opts.max_steps       = o.steps;
          opts.strategy        = strategy_of(o);
          opts.max_word_length = o.word.size();
          v = derive_language(g, opts).words.count(o.word) ? Verdict::Yes
                                                          : Verdict::Undetermined;
          break;
        }
        case DocumentKind::Monoid:
          throw UsageError("member needs a machine or grammar");
        default:
          v = rma_accepts(as_rma(doc), o.word, b, &c.stats);
      }
      c.report["word"] = o.word;
      c.text << show(o.word) << ": " << to_string(v) << "\n";
      return v;
    }

    Verdict cmd_enumerate(Context& c) {
      auto doc    = need_input(c.o, c.o.input);
      auto sample = sample_language(doc, alphabet_of(doc), c.o);
      c.report["words"]        = words_json(sample.words);
      c.report["undetermined"] = words_json(sample.undetermined);
      c.report["bound"]        = c.o.bound;
      for (auto const& w : words_json(sample.words)) {
        c.text << show(w.get<std::string>()) << "\n";
      }
      for (auto const& w : words_json(sample.undetermined)) {
        c.text << show(w.get<std::string>()) << " (undetermined)\n";
      }
      return sample.any_undetermined() ? Verdict::Undetermined : Verdict::Yes;
    }

    SpecDocument convert(SpecDocument const& doc,
                         std::string const&  mode,
                         Options const&      o) {
      SpecDocument out;
      out.name = doc.name.empty() ? "" : doc.name + " (" + mode + ")";
      auto kind_error = [&] {
        return UsageError("convert " + mode + " does not accept a "
                          + to_string(doc.kind()) + " document");
      };
      if (mode == "pda-to-nfa") {
        if (doc.kind() != DocumentKind::Pda) {
          throw kind_error();
        }
        out.payload = pda_to_valence_nfa(std::get<ValencePDA>(doc.payload));
      } else if (mode == "nfa-to-pda") {
        if (doc.kind() != DocumentKind::Nfa) {
          throw kind_error();
        }
        out.payload = valence_nfa_to_pda(std::get<ValenceNFA>(doc.payload));
      } else if (mode == "rma-to-nfa") {
        out.payload = finite_rational_to_nfa(as_rma(doc));
      } else if (mode == "regular-to-rma") {
        if (doc.kind() != DocumentKind::Nfa) {
          throw kind_error();
        }
        out.payload = regular_to_rma(std::get<ValenceNFA>(doc.payload));
      } else if (mode == "grammar-to-nfa") {
        if (doc.kind() != DocumentKind::Grammar) {
          throw kind_error();
        }
        out.payload = rightlinear_to_nfa(std::get<ValenceGrammar>(doc.payload));
      } else if (mode == "nfa-to-grammar") {
        if (doc.kind() != DocumentKind::Nfa) {
          throw kind_error();
        }
        out.payload = nfa_to_rightlinear(std::get<ValenceNFA>(doc.payload));
      } else if (mode == "rees") {
        if (doc.kind() != DocumentKind::Grammar) {
          throw kind_error();
        }
        auto const& g = std::get<ValenceGrammar>(doc.payload);
        if (!g.monoid.is<FiniteTable>()) {
          throw UnsupportedError("rees needs a grammar over a finite_table monoid");
        }
        out.payload
            = rees_transform(g, parse_ideal(g.monoid.as<FiniteTable>(), o.ideal));
      } else if (mode == "zero-eliminate") {
        if (doc.kind() != DocumentKind::Grammar) {
          throw kind_error();
        }
        out.payload = zero_eliminate(std::get<ValenceGrammar>(doc.payload));
      } else {
        throw UsageError("unknown conversion '" + mode + "'");
      }
      return out;
    }

    void emit_document(Context& c, SpecDocument const& doc) {
      if (!c.o.output.empty()) {
        save_spec(doc, c.o.output);
        c.report["output"] = c.o.output;
        c.text << "wrote " << c.o.output << "\n";
      } else {
        c.report["document"] = to_json(doc);
        c.text << dump_spec(doc);
      }
    }

    Verdict cmd_convert(Context& c) {
      auto doc = need_input(c.o, c.o.input);
      if (c.o.mode.empty()) {
        throw UsageError("convert needs a mode, e.g. 'convert pda-to-nfa'");
      }
      emit_document(c, convert(doc, c.o.mode, c.o));
      return Verdict::Yes;
    }

    Verdict cmd_verify_equal(Context& c) {
      auto const& o   = c.o;
      auto        lhs = need_input(o, o.input);
      SpecDocument rhs;
      if (!o.via.empty()) {
        rhs = convert(lhs, o.via, o);
      } else {
        rhs = need_input(o, o.other);
      }
      auto alphabet = merged_alphabet(alphabet_of(lhs), alphabet_of(rhs));
      auto a        = sample_language(lhs, alphabet, o);
      auto b        = sample_language(rhs, alphabet, o);
      std::set<Word> only_left, only_right, unsure;
      for (auto const& w : a.words) {
        if (b.undetermined.count(w)) {
          unsure.insert(w);
        } else if (!b.words.count(w)) {
          only_left.insert(w);
        }
      }
      for (auto const& w : b.words) {
        if (a.undetermined.count(w)) {
          unsure.insert(w);
        } else if (!a.words.count(w)) {
          only_right.insert(w);
        }
      }
      for (auto const& w : a.undetermined) {
        if (b.undetermined.count(w)) {
          unsure.insert(w);
        }
      }
      c.report["bound"]        = o.bound;
      c.report["only_left"]    = words_json(only_left);
      c.report["only_right"]   = words_json(only_right);
      c.report["undetermined"] = words_json(unsure);
      c.report["left_count"]   = a.words.size();
      c.report["right_count"]  = b.words.size();
      for (auto const& w : only_left) {
        c.text << "< " << show(w) << "\n";
      }
      for (auto const& w : only_right) {
        c.text << "> " << show(w) << "\n";
      }
      for (auto const& w : unsure) {
        c.text << "? " << show(w) << "\n";
      }
      Verdict v = !only_left.empty() || !only_right.empty() ? Verdict::No
                  : unsure.empty()                          ? Verdict::Yes
                                                            : Verdict::Undetermined;
      c.text << (v == Verdict::Yes ? "equal" : v == Verdict::No ? "different"
                                                                : "undetermined")
             << " up to length " << o.bound << " (" << a.words.size() << " / "
             << b.words.size() << " words)\n";
      return v;
    }

    Verdict cmd_classify(Context& c) {
      auto doc   = need_input(c.o, c.o.input);
      auto table = finite_table_of(doc);
      auto r     = classify_finite_monoid(table);
      c.report["structure"] = structure_json(table, r);
      c.text << c.report["structure"].dump(2) << "\n";
      return Verdict::Yes;
    }

    Verdict cmd_permutable(Context& c) {
      auto doc   = need_input(c.o, c.o.input);
      auto table = finite_table_of(doc);
      bool ok    = check_permutability(table, c.o.n);
      c.report["n"] = c.o.n;
      c.text << (ok ? "permutable" : "not permutable") << " at n=" << c.o.n << "\n";
      return ok ? Verdict::Yes : Verdict::No;
    }

    Verdict cmd_interchange(Context& c) {
      auto const& o   = c.o;
      auto        m   = as_rma(need_input(o, o.input));
      auto        fac = o.factors.empty() ? std::vector<Word>{}
                                          : split(o.factors, ",|");
      if (fac.empty()) {
        for (Symbol s : o.word) {
          fac.emplace_back(1, s);
        }
      }
      try {
        auto w = interchange_witness(m, o.word, fac, o.k, o.budgets());
        c.report["witnesses"].push_back(witness_json(m, w));
        c.text << "state " << m.core.states[w.boundary_state] << ": "
               << show(w.lambda);
        for (auto const& b : w.blocks) {
          c.text << " | " << b;
        }
        c.text << " | " << show(w.mu) << "\nsigma " << cycle_notation(w.sigma)
               << " -> " << w.permuted_word << " ("
               << to_string(w.permuted_verdict) << ")\n";
        return Verdict::Yes;
      } catch (SearchError const& e) {
        c.report["message"] = e.what();
        c.text << e.what() << "\n";
        return Verdict::Undetermined;
      }
    }

    Verdict cmd_falsify(Context& c) {
      auto m = as_rma(need_input(c.o, c.o.input));
      auto r = l1star_falsify(m, c.o.max_ell, c.o.budgets());
      c.report["ells_tried"] = r.ells_tried;
      c.report["notes"]      = r.notes;
      if (r.counterexample) {
        auto const& ce = *r.counterexample;
        Json        j{{"kind", to_string(ce.kind)}, {"ell", ce.ell}, {"word", ce.word}};
        if (ce.witness) {
          j["witness"] = witness_json(m, *ce.witness);
        }
        c.report["counterexamples"].push_back(j);
        c.text << to_string(ce.kind) << " at ell=" << ce.ell << ": " << ce.word
               << (ce.kind == L1StarCounterexample::Kind::MissingWord
                       ? " is in L1* but rejected\n"
                       : " is accepted but not in L1*\n");
        if (ce.witness) {
          c.text << "sigma " << cycle_notation(ce.witness->sigma)
                 << " on blocks";
          for (auto const& b : ce.witness->blocks) {
            c.text << " " << b;
          }
          c.text << "\n";
        }
      } else {
        for (auto const& n : r.notes) {
          c.text << n << "\n";
        }
        c.text << "no counterexample up to ell=" << c.o.max_ell << "\n";
      }
      return r.verdict();
    }

    Verdict cmd_transform(Context& c) {
      auto const& o   = c.o;
      auto        doc = need_input(o, o.input);
      if (o.mode == "rees" || o.mode == "zero-eliminate") {
        emit_document(c, convert(doc, o.mode, o));
        return Verdict::Yes;
      }
      if (o.mode == "ideal-union") {
        auto table = finite_table_of(doc);
        auto r     = ideal_union_quotient(table);
        c.report["ideal_union"] = index_set_json(table, r.ideal_union);
        c.report["simple"]      = r.simple;
        c.report["null_square"] = r.null_square;
        c.report["zero_simple"] = r.zero_simple;
        c.text << (r.simple ? "simple: no proper ideals\n"
                            : "quotient by the union of proper ideals\n")
               << "null square: " << (r.null_square ? "yes" : "no")
               << ", 0-simple: " << (r.zero_simple ? "yes" : "no") << "\n";
        emit_document(c, SpecDocument{doc.name, "", r.descriptor});
        return Verdict::Yes;
      }
      if (o.mode == "submonoid") {
        if (doc.kind() != DocumentKind::Grammar) {
          throw UsageError("transform submonoid needs a grammar");
        }
        auto const& g    = std::get<ValenceGrammar>(doc.payload);
        auto        gens = generated_submonoid(g);
        Json        j    = Json::array();
        c.text << "generators:";
        for (auto const& x : gens) {
          j.push_back(to_json(g.monoid, x));
          c.text << " " << to_string(g.monoid, x);
        }
        c.text << "\n";
        c.report["generators"] = j;
        try {
          emit_document(c, SpecDocument{doc.name, "", restrict_to_submonoid(g)});
        } catch (ResourceError const& e) {
          c.report["message"] = e.what();
          c.text << "submonoid not finite within the enumeration limit\n";
        }
        return Verdict::Yes;
      }
      throw UsageError("unknown transform '" + o.mode + "'");
    }

  }  // namespace

  int run_command(std::vector<std::string> const& args,
                  std::ostream&                   out,
                  std::ostream&                   err) {
    Options  o;
    CLI::App app{"Valence automata and grammars", "valence"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub) {
      sub->add_option("--input,-i", o.input, "Input document");
      sub->add_option("--output,-o", o.output, "Write the produced document here");
      sub->add_option("--format", o.format, "Report format")
          ->check(CLI::IsMember({"json", "text"}));
      sub->add_option("--bound", o.bound, "Maximum word length (default 8)");
      sub->add_option("--budget", o.budget, "ε-move budget per computation");
      sub->add_option("--stack-depth", o.stack_depth, "PDA stack height bound");
      sub->add_option("--coeff", o.coeff, "Semilinear coefficient bound (default 64)");
      sub->add_option("--steps", o.steps, "Derivation step bound (default 24)");
      sub->add_option("--strategy", o.strategy, "Derivation order: all | leftmost");
    };

    struct Command {
      char const* name;
      char const* help;
      Verdict (*run)(Context&);
    };
    Command const commands[] = {
        {"member", "Decide membership of --word", cmd_member},
        {"enumerate", "List accepted words up to --bound", cmd_enumerate},
        {"convert", "Translate a document", cmd_convert},
        {"verify-equal", "Compare two languages up to --bound", cmd_verify_equal},
        {"classify", "Structure report of a finite monoid", cmd_classify},
        {"permutable", "Check the permutation property P_n", cmd_permutable},
        {"interchange", "Interchange witness for --word", cmd_interchange},
        {"falsify-l1star", "Search for evidence against L1*", cmd_falsify},
        {"transform", "Monoid and grammar transformations", cmd_transform},
    };
    Command const* chosen = nullptr;
    for (auto const& cmd : commands) {
      auto* sub = app.add_subcommand(cmd.name, cmd.help);
      common(sub);
      sub->callback([&o, &chosen, &cmd] {
        o.command = cmd.name;
        chosen    = &cmd;
      });
      std::string const name = cmd.name;
      if (name == "convert" || name == "transform") {
        sub->add_option("mode", o.mode, "Conversion or transform name");
        sub->add_option("--ideal", o.ideal, "Comma-separated ideal elements");
      }
      if (name == "member" || name == "interchange") {
        sub->add_option("--word,-w", o.word, "Input word");
      }
      if (name == "verify-equal") {
        sub->add_option("--other", o.other, "Second document");
        sub->add_option("--via", o.via, "Compare against this conversion of --input");
        sub->add_option("--ideal", o.ideal, "Ideal for --via rees");
      }
      if (name == "interchange") {
        sub->add_option("--factors", o.factors, "Factors separated by ',' or '|'");
        sub->add_option("--k", o.k, "Number of loops to permute (default 2)");
      }
      if (name == "permutable") {
        sub->add_option("--n", o.n, "Tuple length (default 2)");
      }
      if (name == "falsify-l1star") {
        sub->add_option("--max-ell", o.max_ell, "Largest ell tried (default 6)");
      }
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return kUsage;
    }
    if (chosen == nullptr) {
      err << "no command given\n";
      return kUsage;
    }

    Json report{{"command", o.command},
                {"witnesses", Json::array()},
                {"counterexamples", Json::array()}};
    std::ostringstream text;
    Context            ctx{o, report, text, {}};
    auto const         start = std::chrono::steady_clock::now();
    Verdict            v;
    try {
      v = chosen->run(ctx);
    } catch (UsageError const& e) {
      err << "valence " << o.command << ": " << e.what() << "\n";
      return kUsage;
    } catch (ParseError const& e) {
      err << "valence " << o.command << ": " << e.what() << "\n";
      return kDataError;
    } catch (Error const& e) {
      err << "valence " << o.command << ": " << e.what() << "\n";
      return kDataError;
    }
    double elapsed = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    report["verdict"] = to_string(v);
    report["stats"]   = {{"explored", ctx.stats.explored}, {"elapsed", elapsed}};
    if (o.format == "json") {
      out << report.dump(2) << "\n";
    } else {
      out << text.str();
    }
    return exit_code(v);
  }

}  // namespace valence::cli

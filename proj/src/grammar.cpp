#include "valence/grammar.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "valence/error.hpp"

namespace valence {

  namespace {

    struct FormKey {
      Word          form;
      MonoidElement reg;
      bool          marked;

      bool operator==(FormKey const&) const = default;
    };

    struct FormKeyHash {
      std::size_t operator()(FormKey const& k) const noexcept {
        std::size_t h = std::hash<Word>{}(k.form);
        h ^= hash_value(k.reg) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h ^ static_cast<std::size_t>(k.marked);
      }
    };

    bool contains(std::string const& s, Symbol c) {
      return s.find(c) != std::string::npos;
    }

    FiniteTable const& table_of(ValenceGrammar const& g, char const* what) {
      if (!g.monoid.is<FiniteTable>()) {
        throw UnsupportedError(std::string(what) + " needs a finite table, got "
                               + describe(g.monoid));
      }
      return g.monoid.as<FiniteTable>();
    }

  }  // namespace

  void validate(ValenceGrammar const& g) {
    validate(g.monoid);
    std::set<Symbol> n(g.nonterminals.begin(), g.nonterminals.end());
    std::set<Symbol> t(g.terminals.begin(), g.terminals.end());
    if (n.size() != g.nonterminals.size() || t.size() != g.terminals.size()) {
      throw StructuralError("grammar symbols must be listed once");
    }
    for (Symbol c : g.terminals) {
      if (n.count(c)) {
        throw StructuralError(std::string("symbol '") + c
                              + "' is both terminal and nonterminal");
      }
    }
    if (!n.count(g.start)) {
      throw StructuralError(std::string("start symbol '") + g.start
                            + "' is not a nonterminal");
    }
    for (std::size_t i = 0; i < g.rules.size(); ++i) {
      auto const& r = g.rules[i];
      if (!n.count(r.lhs)) {
        throw StructuralError("rule " + std::to_string(i)
                              + " has a terminal left-hand side");
      }
      for (Symbol c : r.rhs) {
        if (!n.count(c) && !t.count(c)) {
          throw AlphabetError("rule " + std::to_string(i) + " uses unknown symbol '"
                              + std::string(1, c) + "'");
        }
      }
      check_element(g.monoid, r.valence, "valence of rule " + std::to_string(i));
    }
  }

  DerivedLanguage derive_language(ValenceGrammar const& g,
                                  DeriveOptions const&  options) {
    auto const&                            desc = g.monoid;
    std::map<Symbol, std::vector<std::size_t>> by_lhs;
    std::vector<bool>                      marked(g.rules.size(), false);
    for (std::size_t i = 0; i < g.rules.size(); ++i) {
      by_lhs[g.rules[i].lhs].push_back(i);
      marked[i] = options.marked && options.marked(g.rules[i]);
    }
    auto is_nonterminal = [&](Symbol c) { return contains(g.nonterminals, c); };

    DerivedLanguage                             out;
    std::unordered_set<FormKey, FormKeyHash>    seen;
    std::vector<FormKey>                        frontier{
        FormKey{Word(1, g.start), identity(desc), false}};
    seen.insert(frontier.front());

    for (std::size_t step = 0; !frontier.empty(); ++step) {
      std::vector<FormKey> next;
      for (auto const& key : frontier) {
        std::size_t open = std::count_if(
            key.form.begin(), key.form.end(), is_nonterminal);
        if (open == 0) {
          if (is_identity(desc, key.reg)) {
            out.words.insert(key.form);
            if (key.marked) {
              out.marked_words.insert(key.form);
            }
          }
          continue;
        }
        // Every remaining nonterminal needs at least one more step.
        if (step + open > options.max_steps) {
          continue;
        }
        for (std::size_t pos = 0; pos < key.form.size(); ++pos) {
          Symbol c = key.form[pos];
          if (!is_nonterminal(c)) {
            continue;
          }
          auto it = by_lhs.find(c);
          if (it != by_lhs.end()) {
            for (auto ri : it->second) {
              auto const& rule = g.rules[ri];
              FormKey     child{key.form.substr(0, pos) + rule.rhs
                                + key.form.substr(pos + 1),
                            mul(desc, key.reg, rule.valence),
                            key.marked || marked[ri]};
              if (is_dead_end(desc, child.reg)) {
                continue;
              }
              if (options.max_word_length) {
                auto terminals = child.form.size()
                                 - std::count_if(child.form.begin(),
                                                 child.form.end(),
                                                 is_nonterminal);
                if (terminals > *options.max_word_length) {
                  continue;
                }
              }
              if (seen.count(child)) {
                continue;
              }
              if (seen.size() >= options.max_forms) {
                out.truncated = true;
                continue;
              }
              seen.insert(child);
              next.push_back(std::move(child));
            }
          }
          if (options.strategy == DerivationStrategy::Leftmost) {
            break;
          }
        }
      }
      frontier = std::move(next);
    }
    return out;
  }

  ValenceGrammar rees_transform(ValenceGrammar const& g, IndexSet const& ideal) {
    auto const& table    = table_of(g, "rees_transform");
    auto        quotient = rees_quotient(table, ideal);
    auto const& rq       = quotient.as<ReesQuotient>();
    ValenceGrammar out{quotient, g.nonterminals, g.terminals, {}, g.start};
    for (auto const& r : g.rules) {
      auto i = r.valence.as<TableIndex>().index;
      if (std::binary_search(rq.ideal.begin(), rq.ideal.end(), i)) {
        continue;
      }
      out.rules.push_back(
          ValenceRule{r.lhs, r.rhs, MonoidElement::index(rq.class_of[i])});
    }
    return out;
  }

  ValenceGrammar zero_eliminate(ValenceGrammar const& g) {
    if (!g.monoid.is<ZeroAdjoined>()) {
      throw UnsupportedError("zero_eliminate needs a monoid M^0, got "
                             + describe(g.monoid));
    }
    ValenceGrammar out{
        *g.monoid.as<ZeroAdjoined>().base, g.nonterminals, g.terminals, {}, g.start};
    for (auto const& r : g.rules) {
      if (r.valence.is<Zero>()) {
        continue;
      }
      out.rules.push_back(
          ValenceRule{r.lhs, r.rhs, *r.valence.as<Lifted>().inner});
    }
    return out;
  }

  std::vector<MonoidElement> generated_submonoid(ValenceGrammar const& g) {
    std::vector<MonoidElement> out;
    for (auto const& r : g.rules) {
      if (std::find(out.begin(), out.end(), r.valence) == out.end()) {
        out.push_back(r.valence);
      }
    }
    return out;
  }

  ValenceGrammar restrict_to_submonoid(ValenceGrammar const& g,
                                       std::size_t           limit) {
    auto sub = submonoid_closure(g.monoid, generated_submonoid(g), limit);
    std::map<MonoidElement, std::size_t> index;
    for (std::size_t i = 0; i < sub.elements.size(); ++i) {
      index.emplace(sub.elements[i], i);
    }
    ValenceGrammar out{sub.table, g.nonterminals, g.terminals, {}, g.start};
    for (auto const& r : g.rules) {
      out.rules.push_back(
          ValenceRule{r.lhs, r.rhs, MonoidElement::index(index.at(r.valence))});
    }
    return out;
  }

  bool is_right_linear(ValenceGrammar const& g) {
    for (auto const& r : g.rules) {
      for (std::size_t i = 0; i < r.rhs.size(); ++i) {
        if (contains(g.nonterminals, r.rhs[i]) && i + 1 != r.rhs.size()) {
          return false;
        }
      }
    }
    return true;
  }

  ValenceNFA rightlinear_to_nfa(ValenceGrammar const& g) {
    validate(g);
    if (!is_right_linear(g)) {
      throw StructuralError("grammar is not right-linear");
    }
    ValenceNFA out;
    out.monoid   = g.monoid;
    out.alphabet = g.terminals;
    std::sort(out.alphabet.begin(), out.alphabet.end());
    std::map<Symbol, StateId> state;
    for (Symbol n : g.nonterminals) {
      state[n] = out.states.size();
      out.states.push_back(std::string(1, n));
    }
    StateId const accept = out.states.size();
    out.states.push_back("accept");
    out.initial   = state.at(g.start);
    out.accepting = {accept};
    auto const one = identity(g.monoid);

    for (std::size_t i = 0; i < g.rules.size(); ++i) {
      auto const& r    = g.rules[i];
      Word        u    = r.rhs;
      StateId     last = accept;
      if (!u.empty() && contains(g.nonterminals, u.back())) {
        last = state.at(u.back());
        u.pop_back();
      }
      if (u.empty()) {
        out.transitions.push_back(
            NfaTransition{state.at(r.lhs), std::nullopt, last, r.valence});
        continue;
      }
      StateId cur = state.at(r.lhs);
      for (std::size_t j = 0; j < u.size(); ++j) {
        StateId next = last;
        if (j + 1 < u.size()) {
          next = out.states.size();
          out.states.push_back(std::string(1, r.lhs) + "." + std::to_string(i)
                               + "." + std::to_string(j + 1));
        }
        out.transitions.push_back(
            NfaTransition{cur, u[j], next, j == 0 ? r.valence : one});
        cur = next;
      }
    }
    return out;
  }

  ValenceGrammar nfa_to_rightlinear(ValenceNFA const& m) {
    std::string pool;
    for (char c = 'A'; c <= 'Z'; ++c) {
      pool += c;
    }
    for (char c = 'a'; c <= 'z'; ++c) {
      pool += c;
    }
    for (char c = '0'; c <= '9'; ++c) {
      pool += c;
    }
    pool.erase(std::remove_if(pool.begin(),
                              pool.end(),
                              [&](char c) { return contains(m.alphabet, c); }),
               pool.end());
    if (m.states.size() > pool.size()) {
      throw ResourceError("nfa_to_rightlinear: " + std::to_string(m.states.size())
                          + " states but only " + std::to_string(pool.size())
                          + " nonterminal symbols");
    }
    // The initial state takes S when available.
    auto s = pool.find('S');
    if (s != std::string::npos) {
      pool.erase(s, 1);
      pool.insert(pool.begin(), 'S');
    }
    std::string names(m.states.size(), ' ');
    names[m.initial] = pool[0];
    for (std::size_t q = 0, next = 1; q < m.states.size(); ++q) {
      if (q != m.initial) {
        names[q] = pool[next++];
      }
    }
    ValenceGrammar out{m.monoid, names, m.alphabet, {}, names[m.initial]};
    for (auto const& t : m.transitions) {
      Word rhs;
      if (t.symbol) {
        rhs += *t.symbol;
      }
      rhs += names[t.to];
      out.rules.push_back(ValenceRule{names[t.from], rhs, t.valence});
    }
    for (auto q : m.accepting) {
      out.rules.push_back(ValenceRule{names[q], "", identity(m.monoid)});
    }
    return out;
  }

  IdealUnionQuotient ideal_union_quotient(FiniteTable const& table) {
    auto               report = classify_finite_monoid(table);
    IdealUnionQuotient out;
    if (report.proper_ideal_union.empty()) {
      out.descriptor  = table;
      out.simple      = true;
      out.zero_simple = report.zero_simple;
      return out;
    }
    out.ideal_union    = report.proper_ideal_union;
    out.descriptor     = rees_quotient(table, out.ideal_union);
    auto const& q      = out.descriptor.as<ReesQuotient>().quotient;
    auto const  zero   = out.descriptor.as<ReesQuotient>().ideal_class;
    out.null_square    = true;
    for (std::size_t x = 0; x < q.size; ++x) {
      for (std::size_t y = 0; y < q.size; ++y) {
        if (x != q.identity && y != q.identity && q.at(x, y) != zero) {
          out.null_square = false;
        }
      }
    }
    out.zero_simple = classify_finite_monoid(q).zero_simple;
    return out;
  }

}  // namespace valence

#include "valence/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "valence/error.hpp"
#include "valence/finite_monoid.hpp"

namespace valence {

  namespace {

    template <typename... Ts>
    struct overloaded : Ts... {
      using Ts::operator()...;
    };
    template <typename... Ts>
    overloaded(Ts...) -> overloaded<Ts...>;

    [[noreturn]] void fail(std::string const& path, std::string const& msg) {
      throw SemanticError((path.empty() ? std::string("document") : path) + ": "
                          + msg);
    }

    std::string child(std::string const& path, std::string const& key) {
      return path.empty() ? key : path + "." + key;
    }

    std::string child(std::string const& path, std::size_t i) {
      return path + "[" + std::to_string(i) + "]";
    }

    Json const& field(Json const& j, std::string const& path, char const* key) {
      if (!j.is_object()) {
        fail(path, "expected an object");
      }
      auto it = j.find(key);
      if (it == j.end()) {
        fail(path, std::string("missing field '") + key + "'");
      }
      return *it;
    }

    Json const* optional_field(Json const& j, char const* key) {
      auto it = j.find(key);
      return it == j.end() || it->is_null() ? nullptr : &*it;
    }

    std::string get_string(Json const& j, std::string const& path) {
      if (!j.is_string()) {
        fail(path, "expected a string");
      }
      return j.get<std::string>();
    }

    std::int64_t get_int(Json const& j, std::string const& path) {
      if (!j.is_number_integer()) {
        fail(path, "expected an integer");
      }
      return j.get<std::int64_t>();
    }

    std::size_t get_index(Json const& j, std::string const& path) {
      auto v = get_int(j, path);
      if (v < 0) {
        fail(path, "expected a nonnegative integer");
      }
      return static_cast<std::size_t>(v);
    }

    Json const& get_array(Json const& j, std::string const& path) {
      if (!j.is_array()) {
        fail(path, "expected an array");
      }
      return j;
    }

    OptSymbol get_symbol(Json const& j, std::string const& path) {
      if (j.is_null()) {
        return std::nullopt;
      }
      auto s = get_string(j, path);
      if (s.empty()) {
        return std::nullopt;
      }
      if (s.size() != 1) {
        fail(path, "symbols are single characters (\"\" for none)");
      }
      return s[0];
    }

    // Runs f, turning library errors into SemanticError at `path`.
    template <typename F>
    auto checked(std::string const& path, F&& f) -> decltype(f()) {
      try {
        return f();
      } catch (SemanticError const&) {
        throw;
      } catch (Error const& e) {
        fail(path, e.what());
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // Descriptors
    ////////////////////////////////////////////////////////////////////////

    std::size_t table_element(FiniteTable const& t,
                              Json const&        j,
                              std::string const& path) {
      if (j.is_string()) {
        auto name = j.get<std::string>();
        for (std::size_t i = 0; i < t.names.size(); ++i) {
          if (t.names[i] == name) {
            return i;
          }
        }
        fail(path, "unknown element name '" + name + "'");
      }
      auto i = get_index(j, path);
      if (i >= t.size) {
        fail(path, "element index " + std::to_string(i) + " out of range");
      }
      return i;
    }

    FiniteTable parse_table(Json const& j, std::string const& path) {
      FiniteTable t;
      auto const& rows = get_array(field(j, path, "table"), child(path, "table"));
      t.size           = rows.size();
      if (t.size == 0) {
        fail(child(path, "table"), "table must be nonempty");
      }
      t.table.clear();
      for (std::size_t r = 0; r < rows.size(); ++r) {
        auto rp = child(child(path, "table"), r);
        get_array(rows[r], rp);
        if (rows[r].size() != t.size) {
          fail(rp, "row length differs from the number of rows");
        }
        for (std::size_t c = 0; c < t.size; ++c) {
          t.table.push_back(get_index(rows[r][c], child(rp, c)));
        }
      }
      if (auto n = optional_field(j, "names")) {
        get_array(*n, child(path, "names"));
        for (std::size_t i = 0; i < n->size(); ++i) {
          t.names.push_back(get_string((*n)[i], child(child(path, "names"), i)));
        }
      }
      t.identity = 0;
      if (auto id = optional_field(j, "identity")) {
        t.identity = table_element(t, *id, child(path, "identity"));
      }
      if (auto z = optional_field(j, "zero")) {
        t.zero = table_element(t, *z, child(path, "zero"));
      }
      return t;
    }

    MonoidDescriptor parse_descriptor(Json const& j, std::string const& path) {
      auto type = get_string(field(j, path, "type"), child(path, "type"));
      MonoidDescriptor d;
      if (type == "free_abelian") {
        d = FreeAbelian{get_index(field(j, path, "rank"), child(path, "rank"))};
      } else if (type == "bicyclic") {
        d = Bicyclic{};
      } else if (type == "polycyclic") {
        d = Polycyclic{
            get_string(field(j, path, "alphabet"), child(path, "alphabet"))};
      } else if (type == "finite_table") {
        d = parse_table(j, path);
      } else if (type == "cyclic") {
        d = checked(path, [&] {
          return cyclic_group(get_index(field(j, path, "n"), child(path, "n")));
        });
      } else if (type == "nilpotent") {
        d = checked(path, [&] {
          return nilpotent_monoid(get_index(field(j, path, "k"), child(path, "k")));
        });
      } else if (type == "transformation") {
        auto degree = get_index(field(j, path, "degree"), child(path, "degree"));
        std::vector<std::vector<std::size_t>> gens;
        auto gp = child(path, "generators");
        for (std::size_t i = 0; i < get_array(field(j, path, "generators"), gp).size();
             ++i) {
          auto const& g = j["generators"][i];
          gens.emplace_back();
          for (std::size_t x = 0; x < get_array(g, child(gp, i)).size(); ++x) {
            gens.back().push_back(get_index(g[x], child(child(gp, i), x)));
          }
        }
        d = checked(path, [&] { return transformation_monoid(degree, gens); });
      } else if (type == "product") {
        d = MonoidDescriptor::product(
            parse_descriptor(field(j, path, "left"), child(path, "left")),
            parse_descriptor(field(j, path, "right"), child(path, "right")));
      } else if (type == "zero_adjoined") {
        d = MonoidDescriptor::zero_adjoined(
            parse_descriptor(field(j, path, "base"), child(path, "base")));
      } else if (type == "rees_quotient") {
        auto base = parse_descriptor(field(j, path, "base"), child(path, "base"));
        if (!base.is<FiniteTable>()) {
          fail(child(path, "base"), "Rees quotients need a finite_table base");
        }
        auto const& t  = base.as<FiniteTable>();
        auto const& jl = get_array(field(j, path, "ideal"), child(path, "ideal"));
        IndexSet    ideal;
        for (std::size_t i = 0; i < jl.size(); ++i) {
          ideal.push_back(table_element(t, jl[i], child(child(path, "ideal"), i)));
        }
        d = checked(child(path, "ideal"), [&] { return rees_quotient(t, ideal); });
      } else {
        fail(child(path, "type"), "unknown monoid type '" + type + "'");
      }
      checked(path, [&] { validate(d); });
      return d;
    }

    ////////////////////////////////////////////////////////////////////////
    // Elements
    ////////////////////////////////////////////////////////////////////////

    MonoidElement parse_element(MonoidDescriptor const& desc,
                                Json const&             j,
                                std::string const&      path);

    MonoidElement parse_element_unchecked(MonoidDescriptor const& desc,
                                          Json const&             j,
                                          std::string const&      path) {
      return std::visit(
          overloaded{
              [&](FreeAbelian const&) -> MonoidElement {
                IntVector v;
                for (std::size_t i = 0; i < get_array(j, path).size(); ++i) {
                  v.push_back(get_int(j[i], child(path, i)));
                }
                return v;
              },
              [&](Bicyclic const&) -> MonoidElement {
                if (!get_array(j, path).is_array() || j.size() != 2) {
                  fail(path, "bicyclic elements are [pops, pushes]");
                }
                return BicyclicPair{get_index(j[0], child(path, 0)),
                                    get_index(j[1], child(path, 1))};
              },
              [&](Polycyclic const&) -> MonoidElement {
                if (j.is_string() && j.get<std::string>() == "zero") {
                  return Zero{};
                }
                if (!j.is_object()) {
                  fail(path, "polycyclic elements are {\"pop\", \"push\"} or \"zero\"");
                }
                PopPush pp;
                if (auto p = optional_field(j, "pop")) {
                  pp.pop = get_string(*p, child(path, "pop"));
                }
                if (auto p = optional_field(j, "push")) {
                  pp.push = get_string(*p, child(path, "push"));
                }
                return pp;
              },
              [&](FiniteTable const& t) -> MonoidElement {
                return TableIndex{table_element(t, j, path)};
              },
              [&](ReesQuotient const& r) -> MonoidElement {
                return TableIndex{r.class_of[table_element(r.base, j, path)]};
              },
              [&](Product const& p) -> MonoidElement {
                if (!j.is_array() || j.size() != 2) {
                  fail(path, "product elements are [left, right]");
                }
                return ElementPair{parse_element(*p.left, j[0], child(path, 0)),
                                   parse_element(*p.right, j[1], child(path, 1))};
              },
              [&](ZeroAdjoined const& z) -> MonoidElement {
                if (j.is_string() && j.get<std::string>() == "zero") {
                  return Zero{};
                }
                return Lifted{parse_element(
                    *z.base, field(j, path, "lift"), child(path, "lift"))};
              }},
          desc.value);
    }

    MonoidElement parse_element(MonoidDescriptor const& desc,
                                Json const&             j,
                                std::string const&      path) {
      auto e = parse_element_unchecked(desc, j, path);
      checked(path, [&] { check_element(desc, e); });
      return e;
    }

    RationalExpr parse_expr(MonoidDescriptor const& desc,
                            Json const&             j,
                            std::string const&      path) {
      if (j.is_string()) {
        auto s = j.get<std::string>();
        if (s == "one") {
          return RationalExpr::one();
        }
        if (s == "empty") {
          return RationalExpr::empty();
        }
        fail(path, "unknown expression '" + s + "'");
      }
      if (!j.is_object() || j.size() != 1) {
        fail(path, "expressions are \"one\", \"empty\" or a one-key object");
      }
      auto const& [key, value] = *j.items().begin();
      auto sub                 = child(path, key);
      if (key == "atom") {
        return RationalExpr::atom(parse_element(desc, value, sub));
      }
      if (key == "star") {
        return RationalExpr::star(parse_expr(desc, value, sub));
      }
      if (key == "union" || key == "concat") {
        std::vector<RationalExpr> items;
        for (std::size_t i = 0; i < get_array(value, sub).size(); ++i) {
          items.push_back(parse_expr(desc, value[i], child(sub, i)));
        }
        return key == "union" ? RationalExpr::unite(std::move(items))
                              : RationalExpr::concat(std::move(items));
      }
      fail(path, "unknown expression operator '" + key + "'");
    }

    ////////////////////////////////////////////////////////////////////////
    // Machines
    ////////////////////////////////////////////////////////////////////////

    std::vector<std::string> parse_states(Json const& j, std::string const& path) {
      std::vector<std::string> out;
      if (j.is_number_integer()) {
        for (std::size_t i = 0, n = get_index(j, path); i < n; ++i) {
          out.push_back("q" + std::to_string(i));
        }
        return out;
      }
      for (std::size_t i = 0; i < get_array(j, path).size(); ++i) {
        out.push_back(get_string(j[i], child(path, i)));
      }
      return out;
    }

    StateId state_ref(std::vector<std::string> const& states,
                      Json const&                     j,
                      std::string const&              path) {
      if (j.is_string()) {
        auto name = j.get<std::string>();
        for (std::size_t i = 0; i < states.size(); ++i) {
          if (states[i] == name) {
            return i;
          }
        }
        fail(path, "unknown state '" + name + "'");
      }
      auto i = get_index(j, path);
      if (i >= states.size()) {
        fail(path, "state index out of range");
      }
      return i;
    }

    std::vector<StateId> state_list(std::vector<std::string> const& states,
                                    Json const&                     j,
                                    std::string const&              path) {
      std::vector<StateId> out;
      for (std::size_t i = 0; i < get_array(j, path).size(); ++i) {
        out.push_back(state_ref(states, j[i], child(path, i)));
      }
      return out;
    }

    MonoidElement valence_of(MonoidDescriptor const& desc,
                             Json const&             t,
                             std::string const&      path) {
      if (auto v = optional_field(t, "valence")) {
        return parse_element(desc, *v, child(path, "valence"));
      }
      return identity(desc);
    }

    template <typename Machine>
    void parse_common(Machine& m, Json const& j) {
      m.monoid   = parse_descriptor(field(j, "", "monoid"), "monoid");
      m.states   = parse_states(field(j, "", "states"), "states");
      m.alphabet = get_string(field(j, "", "alphabet"), "alphabet");
      m.initial  = 0;
      if (auto i = optional_field(j, "initial")) {
        m.initial = state_ref(m.states, *i, "initial");
      }
      if (auto a = optional_field(j, "accepting")) {
        m.accepting = state_list(m.states, *a, "accepting");
      }
    }

    void check_symbol_in(std::string const& alphabet,
                         OptSymbol const&   s,
                         std::string const& path,
                         char const*        what) {
      if (s && alphabet.find(*s) == std::string::npos) {
        fail(path, std::string("unknown ") + what + " '" + *s + "'");
      }
    }

    ValenceNFA parse_nfa(Json const& j) {
      ValenceNFA m;
      parse_common(m, j);
      auto const& ts = get_array(field(j, "", "transitions"), "transitions");
      for (std::size_t i = 0; i < ts.size(); ++i) {
        auto        p = child("transitions", i);
        auto const& t = ts[i];
        NfaTransition tr;
        tr.from   = state_ref(m.states, field(t, p, "from"), child(p, "from"));
        tr.to     = state_ref(m.states, field(t, p, "to"), child(p, "to"));
        tr.symbol = t.contains("symbol")
                        ? get_symbol(t["symbol"], child(p, "symbol"))
                        : std::nullopt;
        check_symbol_in(m.alphabet, tr.symbol, child(p, "symbol"), "input symbol");
        tr.valence = valence_of(m.monoid, t, p);
        m.transitions.push_back(std::move(tr));
      }
      checked("", [&] { validate(m); });
      return m;
    }

    ValencePDA parse_pda(Json const& j) {
      ValencePDA p;
      parse_common(p, j);
      p.stack_alphabet
          = get_string(field(j, "", "stack_alphabet"), "stack_alphabet");
      auto const& ts = get_array(field(j, "", "transitions"), "transitions");
      for (std::size_t i = 0; i < ts.size(); ++i) {
        auto          path = child("transitions", i);
        auto const&   t    = ts[i];
        PdaTransition tr;
        tr.from = state_ref(p.states, field(t, path, "from"), child(path, "from"));
        tr.to   = state_ref(p.states, field(t, path, "to"), child(path, "to"));
        auto sym = [&](char const* key) -> OptSymbol {
          return t.contains(key) ? get_symbol(t[key], child(path, key))
                                 : std::nullopt;
        };
        tr.symbol = sym("symbol");
        tr.pop    = sym("pop");
        tr.push   = sym("push");
        check_symbol_in(p.alphabet, tr.symbol, child(path, "symbol"), "input symbol");
        check_symbol_in(p.stack_alphabet, tr.pop, child(path, "pop"), "stack symbol");
        check_symbol_in(p.stack_alphabet, tr.push, child(path, "push"), "stack symbol");
        tr.valence = valence_of(p.monoid, t, path);
        p.transitions.push_back(std::move(tr));
      }
      checked("", [&] { validate(p); });
      return p;
    }

    ValenceGrammar parse_grammar(Json const& j) {
      ValenceGrammar g;
      g.monoid = parse_descriptor(field(j, "", "monoid"), "monoid");
      g.nonterminals
          = get_string(field(j, "", "nonterminals"), "nonterminals");
      g.terminals = get_string(field(j, "", "terminals"), "terminals");
      auto start  = get_symbol(field(j, "", "start"), "start");
      if (!start) {
        fail("start", "start symbol must be nonempty");
      }
      g.start        = *start;
      auto const& rs = get_array(field(j, "", "rules"), "rules");
      for (std::size_t i = 0; i < rs.size(); ++i) {
        auto path = child("rules", i);
        auto lhs  = get_symbol(field(rs[i], path, "lhs"), child(path, "lhs"));
        if (!lhs) {
          fail(child(path, "lhs"), "left-hand side must be a nonterminal");
        }
        auto rhs = rs[i].contains("rhs")
                       ? get_string(rs[i]["rhs"], child(path, "rhs"))
                       : std::string();
        g.rules.push_back(
            ValenceRule{*lhs, std::move(rhs), valence_of(g.monoid, rs[i], path)});
      }
      checked("", [&] { validate(g); });
      return g;
    }

    std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                    std::size_t      byte) {
      std::size_t line = 1, col = 1;
      for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      return {line, col};
    }

    ////////////////////////////////////////////////////////////////////////
    // Writing
    ////////////////////////////////////////////////////////////////////////

    Json table_json(FiniteTable const& t) {
      Json rows = Json::array();
      for (std::size_t r = 0; r < t.size; ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < t.size; ++c) {
          row.push_back(t.at(r, c));
        }
        rows.push_back(std::move(row));
      }
      Json j{{"type", "finite_table"}, {"table", rows}, {"identity", t.identity}};
      if (t.zero) {
        j["zero"] = *t.zero;
      }
      if (!t.names.empty()) {
        j["names"] = t.names;
      }
      return j;
    }

    Json table_element_json(FiniteTable const& t, std::size_t i) {
      return t.names.empty() ? Json(i) : Json(t.names[i]);
    }

    Json symbol_json(OptSymbol const& s) {
      return s ? std::string(1, *s) : std::string();
    }

    template <typename Machine>
    Json machine_common(Machine const& m) {
      Json j;
      j["monoid"]   = to_json(m.monoid);
      j["states"]   = m.states;
      j["alphabet"] = m.alphabet;
      j["initial"]  = m.states[m.initial];
      Json acc      = Json::array();
      for (auto q : m.accepting) {
        acc.push_back(m.states[q]);
      }
      j["accepting"] = acc;
      return j;
    }

    Json nfa_json(ValenceNFA const& m) {
      Json j  = machine_common(m);
      Json ts = Json::array();
      for (auto const& t : m.transitions) {
        ts.push_back({{"from", m.states[t.from]},
                      {"symbol", symbol_json(t.symbol)},
                      {"to", m.states[t.to]},
                      {"valence", to_json(m.monoid, t.valence)}});
      }
      j["transitions"] = ts;
      return j;
    }

  }  // namespace

  char const* to_string(DocumentKind k) noexcept {
    switch (k) {
      case DocumentKind::Monoid:
        return "monoid";
      case DocumentKind::Nfa:
        return "nfa";
      case DocumentKind::Rma:
        return "rma";
      case DocumentKind::Pda:
        return "pda";
      case DocumentKind::Grammar:
        return "grammar";
    }
    return "?";
  }

  DocumentKind document_kind_from_string(std::string const& s) {
    for (auto k : {DocumentKind::Monoid,
                   DocumentKind::Nfa,
                   DocumentKind::Rma,
                   DocumentKind::Pda,
                   DocumentKind::Grammar}) {
      if (s == to_string(k)) {
        return k;
      }
    }
    fail("kind", "unknown document kind '" + s + "'");
  }

  SpecDocument parse_spec(std::string_view text) {
    Json j;
    try {
      j = Json::parse(text.begin(), text.end());
    } catch (Json::parse_error const& e) {
      auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
      throw ParseError("syntax error at line " + std::to_string(line)
                           + ", column " + std::to_string(col),
                       line,
                       col);
    }
    try {
      if (!j.is_object()) {
        fail("", "top level must be an object");
      }
      SpecDocument doc;
      if (auto n = optional_field(j, "name")) {
        doc.name = get_string(*n, "name");
      }
      if (auto c = optional_field(j, "comment")) {
        doc.comment = get_string(*c, "comment");
      }
      switch (document_kind_from_string(get_string(field(j, "", "kind"), "kind"))) {
        case DocumentKind::Monoid:
          doc.payload = parse_descriptor(field(j, "", "monoid"), "monoid");
          break;
        case DocumentKind::Nfa:
          doc.payload = parse_nfa(j);
          break;
        case DocumentKind::Rma: {
          RationalMonoidAutomaton m{parse_nfa(j)};
          if (auto e = optional_field(j, "initial_set")) {
            m.initial_set = parse_expr(m.core.monoid, *e, "initial_set");
          }
          if (auto e = optional_field(j, "terminal_set")) {
            m.terminal_set = parse_expr(m.core.monoid, *e, "terminal_set");
          }
          checked("", [&] { validate(m); });
          doc.payload = std::move(m);
          break;
        }
        case DocumentKind::Pda:
          doc.payload = parse_pda(j);
          break;
        case DocumentKind::Grammar:
          doc.payload = parse_grammar(j);
          break;
      }
      return doc;
    } catch (Json::exception const& e) {
      throw SemanticError(std::string("document: ") + e.what());
    }
  }

  SpecDocument load_spec(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_spec(ss.str());
  }

  Json to_json(MonoidDescriptor const& desc) {
    return std::visit(
        overloaded{
            [](FreeAbelian const& m) {
              return Json{{"type", "free_abelian"}, {"rank", m.rank}};
            },
            [](Bicyclic const&) { return Json{{"type", "bicyclic"}}; },
            [](Polycyclic const& m) {
              return Json{{"type", "polycyclic"}, {"alphabet", m.alphabet}};
            },
            [](FiniteTable const& t) { return table_json(t); },
            [](Product const& p) {
              return Json{{"type", "product"},
                          {"left", to_json(*p.left)},
                          {"right", to_json(*p.right)}};
            },
            [](ReesQuotient const& r) {
              Json ideal = Json::array();
              for (auto i : r.ideal) {
                ideal.push_back(table_element_json(r.base, i));
              }
              return Json{{"type", "rees_quotient"},
                          {"base", table_json(r.base)},
                          {"ideal", ideal}};
            },
            [](ZeroAdjoined const& z) {
              return Json{{"type", "zero_adjoined"}, {"base", to_json(*z.base)}};
            }},
        desc.value);
  }

  Json to_json(MonoidDescriptor const& desc, MonoidElement const& e) {
    return std::visit(
        overloaded{
            [&](FreeAbelian const&) { return Json(e.as<IntVector>()); },
            [&](Bicyclic const&) {
              auto const& p = e.as<BicyclicPair>();
              return Json::array({p.pops, p.pushes});
            },
            [&](Polycyclic const&) {
              if (e.is<Zero>()) {
                return Json("zero");
              }
              auto const& p = e.as<PopPush>();
              return Json{{"pop", p.pop}, {"push", p.push}};
            },
            [&](FiniteTable const& t) {
              return table_element_json(t, e.as<TableIndex>().index);
            },
            [&](ReesQuotient const& r) {
              return table_element_json(
                  r.base, r.representative[e.as<TableIndex>().index]);
            },
            [&](Product const& p) {
              auto const& pair = e.as<ElementPair>();
              return Json::array(
                  {to_json(*p.left, *pair.left), to_json(*p.right, *pair.right)});
            },
            [&](ZeroAdjoined const& z) {
              if (e.is<Zero>()) {
                return Json("zero");
              }
              return Json{{"lift", to_json(*z.base, *e.as<Lifted>().inner)}};
            }},
        desc.value);
  }

  Json to_json(MonoidDescriptor const& desc, RationalExpr const& e) {
    return std::visit(
        overloaded{
            [&](ExprAtom const& a) { return Json{{"atom", to_json(desc, a.element)}}; },
            [&](ExprUnion const& u) {
              Json items = Json::array();
              for (auto const& i : u.items) {
                items.push_back(to_json(desc, i));
              }
              return Json{{"union", items}};
            },
            [&](ExprConcat const& c) {
              Json items = Json::array();
              for (auto const& i : c.items) {
                items.push_back(to_json(desc, i));
              }
              return Json{{"concat", items}};
            },
            [&](ExprStar const& s) { return Json{{"star", to_json(desc, *s.child)}}; },
            [&](ExprEmpty const&) { return Json("empty"); },
            [&](ExprOne const&) { return Json("one"); }},
        e.value);
  }

  Json to_json(SpecDocument const& doc) {
    Json j = std::visit(
        overloaded{
            [](MonoidDescriptor const& d) { return Json{{"monoid", to_json(d)}}; },
            [](ValenceNFA const& m) { return nfa_json(m); },
            [](RationalMonoidAutomaton const& m) {
              Json j            = nfa_json(m.core);
              j["initial_set"]  = to_json(m.core.monoid, m.initial_set);
              j["terminal_set"] = to_json(m.core.monoid, m.terminal_set);
              return j;
            },
            [](ValencePDA const& p) {
              Json j             = machine_common(p);
              j["stack_alphabet"] = p.stack_alphabet;
              Json ts            = Json::array();
              for (auto const& t : p.transitions) {
                ts.push_back({{"from", p.states[t.from]},
                              {"symbol", symbol_json(t.symbol)},
                              {"pop", symbol_json(t.pop)},
                              {"to", p.states[t.to]},
                              {"push", symbol_json(t.push)},
                              {"valence", to_json(p.monoid, t.valence)}});
              }
              j["transitions"] = ts;
              return j;
            },
            [](ValenceGrammar const& g) {
              Json rules = Json::array();
              for (auto const& r : g.rules) {
                rules.push_back({{"lhs", std::string(1, r.lhs)},
                                 {"rhs", r.rhs},
                                 {"valence", to_json(g.monoid, r.valence)}});
              }
              return Json{{"monoid", to_json(g.monoid)},
                          {"nonterminals", g.nonterminals},
                          {"terminals", g.terminals},
                          {"start", std::string(1, g.start)},
                          {"rules", rules}};
            }},
        doc.payload);
    j["kind"] = to_string(doc.kind());
    if (!doc.name.empty()) {
      j["name"] = doc.name;
    }
    if (!doc.comment.empty()) {
      j["comment"] = doc.comment;
    }
    return j;
  }

  std::string dump_spec(SpecDocument const& doc) {
    return to_json(doc).dump(2) + "\n";
  }

  void save_spec(SpecDocument const& doc, std::string const& path) {
    std::ofstream out(path);
    if (!out) {
      throw Error("cannot write " + path);
    }
    out << dump_spec(doc);
  }

  MonoidDescriptor descriptor_from_json(Json const& j) {
    return parse_descriptor(j, "monoid");
  }

  MonoidElement element_from_json(MonoidDescriptor const& desc, Json const& j) {
    return parse_element(desc, j, "element");
  }

  RationalExpr expr_from_json(MonoidDescriptor const& desc, Json const& j) {
    return parse_expr(desc, j, "expression");
  }

}  // namespace valence

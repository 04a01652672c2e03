#include "valence/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "valence/error.hpp"
#include "valence/rational.hpp"

namespace valence {

  ValenceNFA finite_rational_to_nfa(RationalMonoidAutomaton const& m) {
    auto const& core = m.core;
    auto const& desc = core.monoid;
    if (!is_finite(desc)) {
      throw UnsupportedError("finite_rational_to_nfa needs a finite monoid, got "
                             + describe(desc));
    }
    auto const elements = finite_elements(desc);
    std::map<MonoidElement, std::size_t> index;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      index.emplace(elements[i], i);
    }
    auto const    n       = elements.size();
    auto const    one     = identity(trivial_monoid());
    auto const    initial = eval_rational_finite(desc, m.initial_set);
    auto const    final   = eval_rational_finite(desc, m.terminal_set);
    auto          state   = [n](StateId q, std::size_t x) { return q * n + x; };

    ValenceNFA out;
    out.monoid   = trivial_monoid();
    out.alphabet = core.alphabet;
    for (auto const& q : core.states) {
      for (auto const& x : elements) {
        out.states.push_back("(" + q + "," + to_string(desc, x) + ")");
      }
    }
    for (auto const& t : core.transitions) {
      for (std::size_t x = 0; x < n; ++x) {
        auto y = index.at(mul(desc, elements[x], t.valence));
        out.transitions.push_back(
            NfaTransition{state(t.from, x), t.symbol, state(t.to, y), one});
      }
    }
    for (auto q : core.accepting) {
      for (auto const& x : final) {
        out.accepting.push_back(state(q, index.at(x)));
      }
    }
    if (initial == ElementSet{identity(desc)}) {
      out.initial = state(core.initial, index.at(identity(desc)));
    } else {
      out.initial = out.states.size();
      out.states.push_back("start");
      for (auto const& x0 : initial) {
        out.transitions.push_back(NfaTransition{
            out.initial, std::nullopt, state(core.initial, index.at(x0)), one});
      }
    }
    std::sort(out.accepting.begin(), out.accepting.end());
    out.accepting.erase(std::unique(out.accepting.begin(), out.accepting.end()),
                        out.accepting.end());
    return out;
  }

  RationalMonoidAutomaton regular_to_rma(ValenceNFA const& nfa,
                                         MonoidDescriptor  target) {
    validate(target);
    RationalMonoidAutomaton out;
    out.core        = nfa;
    out.core.monoid = target;
    for (auto& t : out.core.transitions) {
      if (!is_identity(nfa.monoid, t.valence)) {
        throw StructuralError("regular_to_rma expects valences equal to 1");
      }
      t.valence = identity(target);
    }
    return out;
  }

  RationalMonoidAutomaton regular_to_rma(ValenceNFA const& nfa) {
    return regular_to_rma(nfa, trivial_monoid());
  }

  RationalMonoidAutomaton build_anbn_rma(MonoidDescriptor const& desc,
                                         MonoidElement const&    x,
                                         MonoidElement const&    x_inv,
                                         MonoidElement const&    e) {
    validate(desc);
    check_element(desc, x, "x");
    check_element(desc, x_inv, "x_inv");
    check_element(desc, e, "e");
    if (mul(desc, x, x_inv) != e || mul(desc, x_inv, x) != e) {
      throw AlgebraError("x * x_inv = x_inv * x = e does not hold: x * x_inv = "
                         + to_string(desc, mul(desc, x, x_inv))
                         + ", x_inv * x = "
                         + to_string(desc, mul(desc, x_inv, x)));
    }
    if (is_periodic(desc, x)) {
      throw AlgebraError("x = " + to_string(desc, x) + " is periodic");
    }
    RationalMonoidAutomaton out;
    out.core = make_nfa(desc,
                        2,
                        "ab",
                        {NfaTransition{0, 'a', 0, x},
                         NfaTransition{0, 'b', 1, x_inv},
                         NfaTransition{1, 'b', 1, x_inv}},
                        0,
                        {1});
    out.initial_set  = RationalExpr::atom(e);
    out.terminal_set = RationalExpr::atom(e);
    return out;
  }

  ValenceNFA pda_to_valence_nfa(ValencePDA const& p) {
    ValenceNFA out;
    out.monoid   = MonoidDescriptor::product(p2(), p.monoid);
    out.states   = p.states;
    out.alphabet = p.alphabet;
    out.initial  = p.initial;
    out.accepting = p.accepting;
    for (auto const& t : p.transitions) {
      MonoidElement stack = PopPush{};
      if (t.pop || t.push) {
        PopPush pp{t.pop ? Word(1, *t.pop) : Word{},
                   t.push ? Word(1, *t.push) : Word{}};
        stack = embed_polycyclic_into_p2(p.stack_alphabet, pp);
      }
      out.transitions.push_back(NfaTransition{
          t.from, t.symbol, t.to, MonoidElement::pair(stack, t.valence)});
    }
    return out;
  }

  ValencePDA valence_nfa_to_pda(ValenceNFA const& m) {
    if (!m.monoid.is<Product>()
        || !m.monoid.as<Product>().left->is<Polycyclic>()) {
      throw StructuralError(
          "valence_nfa_to_pda expects a monoid Polycyclic(X) x M, got "
          + describe(m.monoid));
    }
    auto const& prod  = m.monoid.as<Product>();
    auto const& right = *prod.right;
    auto const  one   = identity(right);

    ValencePDA out;
    out.monoid         = right;
    out.states         = m.states;
    out.alphabet       = m.alphabet;
    out.stack_alphabet = prod.left->as<Polycyclic>().alphabet;
    out.initial        = m.initial;
    out.accepting      = m.accepting;

    std::set<std::string> names(m.states.begin(), m.states.end());
    auto fresh = [&](std::string base) {
      auto name = base;
      for (int i = 1; names.count(name); ++i) {
        name = base + "'" + std::to_string(i);
      }
      names.insert(name);
      out.states.push_back(name);
      return out.states.size() - 1;
    };

    for (std::size_t i = 0; i < m.transitions.size(); ++i) {
      auto const& t = m.transitions[i];
      if (!t.valence.is<ElementPair>()) {
        throw StructuralError("valence of transition " + std::to_string(i)
                              + " is not a pair");
      }
      auto const& stack = *t.valence.as<ElementPair>().left;
      auto const& val   = *t.valence.as<ElementPair>().right;
      if (stack.is<Zero>()) {
        continue;
      }
      if (!stack.is<PopPush>()) {
        throw StructuralError("polycyclic part of transition "
                              + std::to_string(i) + " is malformed");
      }
      auto const& [pop, push] = stack.as<PopPush>();
      // One stack operation per link: pops from the top (end of `pop`)
      // down, then pushes in order.
      std::vector<std::pair<OptSymbol, OptSymbol>> ops;
      for (auto it = pop.rbegin(); it != pop.rend(); ++it) {
        ops.emplace_back(*it, std::nullopt);
      }
      for (Symbol y : push) {
        ops.emplace_back(std::nullopt, y);
      }
      if (ops.empty()) {
        out.transitions.push_back(PdaTransition{
            t.from, t.symbol, std::nullopt, t.to, std::nullopt, val});
        continue;
      }
      StateId cur = t.from;
      for (std::size_t j = 0; j < ops.size(); ++j) {
        StateId next = fresh(m.states[t.from] + "~" + std::to_string(i) + "."
                             + std::to_string(j + 1));
        out.transitions.push_back(PdaTransition{cur,
                                                j == 0 ? t.symbol : std::nullopt,
                                                ops[j].first,
                                                next,
                                                ops[j].second,
                                                j == 0 ? val : one});
        cur = next;
      }
      out.transitions.push_back(
          PdaTransition{cur, std::nullopt, std::nullopt, t.to, std::nullopt, one});
    }
    validate(out);
    return out;
  }

}  // namespace valence

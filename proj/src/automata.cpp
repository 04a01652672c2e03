#include "valence/automata.hpp"

#include <algorithm>
#include <set>

#include "valence/error.hpp"

namespace valence {

  namespace {

    void check_alphabet(std::string const& alphabet, char const* what) {
      std::set<Symbol> seen(alphabet.begin(), alphabet.end());
      if (seen.size() != alphabet.size()) {
        throw StructuralError(std::string(what) + " has repeated symbols");
      }
    }

    void check_states(std::vector<std::string> const& states,
                      StateId                         initial,
                      std::vector<StateId> const&     accepting) {
      if (states.empty()) {
        throw StructuralError("machine needs at least one state");
      }
      std::set<std::string> names(states.begin(), states.end());
      if (names.size() != states.size()) {
        throw StructuralError("state names must be distinct");
      }
      if (initial >= states.size()) {
        throw StructuralError("initial state out of range");
      }
      for (auto q : accepting) {
        if (q >= states.size()) {
          throw StructuralError("accepting state out of range");
        }
      }
    }

    void check_symbol(std::string const& alphabet,
                      OptSymbol const&   s,
                      char const*        what) {
      if (s && alphabet.find(*s) == std::string::npos) {
        throw AlphabetError(std::string(what) + " '" + *s
                            + "' is not in the declared alphabet");
      }
    }

    std::string sorted_unique(std::string s) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      return s;
    }

    std::vector<StateId> sorted_unique(std::vector<StateId> v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      return v;
    }

    std::vector<std::string> default_names(std::size_t n) {
      std::vector<std::string> out;
      for (std::size_t i = 0; i < n; ++i) {
        out.push_back("q" + std::to_string(i));
      }
      return out;
    }

  }  // namespace

  void validate(ValenceNFA const& m) {
    validate(m.monoid);
    check_states(m.states, m.initial, m.accepting);
    check_alphabet(m.alphabet, "input alphabet");
    for (std::size_t i = 0; i < m.transitions.size(); ++i) {
      auto const& t = m.transitions[i];
      if (t.from >= m.states.size() || t.to >= m.states.size()) {
        throw StructuralError("transition " + std::to_string(i)
                              + " refers to an unknown state");
      }
      check_symbol(m.alphabet, t.symbol, "transition symbol");
      check_element(
          m.monoid, t.valence, "valence of transition " + std::to_string(i));
    }
  }

  void validate(RationalMonoidAutomaton const& m) {
    validate(m.core);
    validate(m.core.monoid, m.initial_set);
    validate(m.core.monoid, m.terminal_set);
  }

  void validate(ValencePDA const& p) {
    validate(p.monoid);
    check_states(p.states, p.initial, p.accepting);
    check_alphabet(p.alphabet, "input alphabet");
    check_alphabet(p.stack_alphabet, "stack alphabet");
    for (std::size_t i = 0; i < p.transitions.size(); ++i) {
      auto const& t = p.transitions[i];
      if (t.from >= p.states.size() || t.to >= p.states.size()) {
        throw StructuralError("transition " + std::to_string(i)
                              + " refers to an unknown state");
      }
      check_symbol(p.alphabet, t.symbol, "transition symbol");
      check_symbol(p.stack_alphabet, t.pop, "stack symbol");
      check_symbol(p.stack_alphabet, t.push, "stack symbol");
      check_element(
          p.monoid, t.valence, "valence of transition " + std::to_string(i));
    }
  }

  ValenceNFA make_nfa(MonoidDescriptor           monoid,
                      std::size_t                state_count,
                      std::string                alphabet,
                      std::vector<NfaTransition> transitions,
                      StateId                    initial,
                      std::vector<StateId>       accepting) {
    ValenceNFA m{std::move(monoid),
                 default_names(state_count),
                 sorted_unique(std::move(alphabet)),
                 std::move(transitions),
                 initial,
                 sorted_unique(std::move(accepting))};
    validate(m);
    return m;
  }

  ValencePDA make_pda(MonoidDescriptor           monoid,
                      std::size_t                state_count,
                      std::string                alphabet,
                      std::string                stack_alphabet,
                      std::vector<PdaTransition> transitions,
                      StateId                    initial,
                      std::vector<StateId>       accepting) {
    ValencePDA p{std::move(monoid),
                 default_names(state_count),
                 sorted_unique(std::move(alphabet)),
                 sorted_unique(std::move(stack_alphabet)),
                 std::move(transitions),
                 initial,
                 sorted_unique(std::move(accepting))};
    validate(p);
    return p;
  }

  void check_word(std::string const& alphabet, Word const& w) {
    for (Symbol s : w) {
      if (alphabet.find(s) == std::string::npos) {
        throw AlphabetError(std::string("input symbol '") + s
                            + "' is not in the machine alphabet");
      }
    }
  }

  std::size_t default_epsilon_budget(std::size_t word_length,
                                     std::size_t state_count) {
    return 4 * (word_length + 1) * std::max<std::size_t>(state_count, 1);
  }

}  // namespace valence

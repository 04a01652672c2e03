#ifndef VALENCE_AUTOMATA_HPP_
#define VALENCE_AUTOMATA_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "valence/monoid.hpp"
#include "valence/rational.hpp"
#include "valence/semilinear.hpp"
#include "valence/verdict.hpp"

namespace valence {

  using StateId = std::size_t;

  // nullopt is the empty word ε.
  using OptSymbol = std::optional<Symbol>;

  struct NfaTransition {
    StateId       from = 0;
    OptSymbol     symbol;
    StateId       to = 0;
    MonoidElement valence;

    bool operator==(NfaTransition const&) const = default;
  };

  // Valence automaton (M-automaton): accepts w if some computation spelling
  // w ends in an accepting state with register 1.
  struct ValenceNFA {
    MonoidDescriptor           monoid;
    std::vector<std::string>   states;  // StateId = position
    std::string                alphabet;
    std::vector<NfaTransition> transitions;
    StateId                    initial = 0;
    std::vector<StateId>       accepting;

    bool operator==(ValenceNFA const&) const = default;
  };

  // M-automaton with rational targets: accepts w if x0 * x ∈ terminal_set for
  // some x0 ∈ initial_set, x the register after a computation spelling w.
  struct RationalMonoidAutomaton {
    ValenceNFA   core;
    RationalExpr initial_set  = RationalExpr::one();
    RationalExpr terminal_set = RationalExpr::one();

    bool operator==(RationalMonoidAutomaton const&) const = default;
  };

  struct PdaTransition {
    StateId       from = 0;
    OptSymbol     symbol;
    OptSymbol     pop;
    StateId       to = 0;
    OptSymbol     push;
    MonoidElement valence;

    bool operator==(PdaTransition const&) const = default;
  };

  // Valence pushdown automaton. Acceptance: accepting state, empty stack and
  // register 1. The stack top is the last symbol of the stack word.
  struct ValencePDA {
    MonoidDescriptor           monoid;
    std::vector<std::string>   states;
    std::string                alphabet;
    std::string                stack_alphabet;
    std::vector<PdaTransition> transitions;
    StateId                    initial = 0;
    std::vector<StateId>       accepting;

    bool operator==(ValencePDA const&) const = default;
  };

  void validate(ValenceNFA const& m);
  void validate(RationalMonoidAutomaton const& m);
  void validate(ValencePDA const& p);

  // Builders name states q0, q1, ..., sort/deduplicate the alphabet and
  // accepting set, and validate the result.
  ValenceNFA make_nfa(MonoidDescriptor           monoid,
                      std::size_t                state_count,
                      std::string                alphabet,
                      std::vector<NfaTransition> transitions,
                      StateId                    initial,
                      std::vector<StateId>       accepting);

  ValencePDA make_pda(MonoidDescriptor           monoid,
                      std::size_t                state_count,
                      std::string                alphabet,
                      std::string                stack_alphabet,
                      std::vector<PdaTransition> transitions,
                      StateId                    initial,
                      std::vector<StateId>       accepting);

  // Throws AlphabetError naming the first symbol of w outside `alphabet`.
  void check_word(std::string const& alphabet, Word const& w);

  ////////////////////////////////////////////////////////////////////////
  // Budgets
  ////////////////////////////////////////////////////////////////////////

  struct Budgets {
    // Total ε-moves along one computation; default 4 * (|w| + 1) * |Q|.
    // Finite monoids ignore it (exact saturation).
    std::optional<std::size_t> epsilon;
    // Maximum PDA stack height; unset means bounded only by `epsilon`.
    std::optional<std::size_t> stack_depth;
    std::size_t                coefficient_bound = kDefaultCoefficientBound;
    // Hard cap on distinct configurations explored by one search.
    std::size_t max_configurations = 2'000'000;
  };

  std::size_t default_epsilon_budget(std::size_t word_length,
                                     std::size_t state_count);

  struct SearchStats {
    std::uint64_t explored = 0;
  };

}  // namespace valence

#endif  // VALENCE_AUTOMATA_HPP_

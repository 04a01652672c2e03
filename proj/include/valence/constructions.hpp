#ifndef VALENCE_CONSTRUCTIONS_HPP_
#define VALENCE_CONSTRUCTIONS_HPP_

#include "valence/automata.hpp"
#include "valence/monoid.hpp"

namespace valence {

  // Classical NFA (over the trivial monoid) on states Q x M accepting the
  // language of a rational monoid automaton over a finite monoid. State
  // (q, m) has index q * |M| + m, m ranging over finite_elements(). When I0
  // is not {1} a fresh start state is added with ε-moves to each (q0, x0).
  ValenceNFA finite_rational_to_nfa(RationalMonoidAutomaton const& m);

  // Wraps a machine whose valences are all 1 as a rational monoid automaton
  // over `target` with I0 = I1 = {1}.
  RationalMonoidAutomaton regular_to_rma(ValenceNFA const& nfa,
                                         MonoidDescriptor  target);
  RationalMonoidAutomaton regular_to_rma(ValenceNFA const& nfa);

  // The two-state machine q0 -a/x-> q0 -b/x_inv-> q1 -b/x_inv-> q1 with
  // I0 = I1 = {e}. Throws AlgebraError unless x x_inv = x_inv x = e and x
  // is not periodic.
  RationalMonoidAutomaton build_anbn_rma(MonoidDescriptor const& desc,
                                         MonoidElement const&    x,
                                         MonoidElement const&    x_inv,
                                         MonoidElement const&    e);

  // Valence NFA over P_2 x M: each PDA move (q, σ, pop a) -> (q', push b, m)
  // becomes q -σ-> q' with valence <embed(Q_a P_b), m>.
  ValenceNFA pda_to_valence_nfa(ValencePDA const& p);

  // Inverse direction for machines over Polycyclic(X) x M. Zero-valenced
  // moves are dropped; a move popping x1..xn and pushing y1..yo becomes a
  // chain through n + o fresh states, the first link reading σ with the M
  // component, the rest ε with valence 1, then an ε-link to the target.
  // Pops follow the stack: Q[ab] pops b first.
  ValencePDA valence_nfa_to_pda(ValenceNFA const& m);

}  // namespace valence

#endif  // VALENCE_CONSTRUCTIONS_HPP_

// Reference implementations used to cross-check the library. Each one is
// written from the definitions, independently of the code it checks.

#ifndef VALENCE_TESTS_ORACLES_HPP_
#define VALENCE_TESTS_ORACLES_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "valence/automata.hpp"
#include "valence/grammar.hpp"
#include "valence/monoid.hpp"
#include "valence/rational.hpp"

namespace oracle {

  using valence::MonoidDescriptor;
  using valence::MonoidElement;
  using valence::Word;

  // A polycyclic element as a partial map on stack words (top = last
  // letter): Q[u]P[v] removes the suffix u, then appends v.
  std::optional<Word> apply_stack_map(MonoidElement const& e, Word const& s);

  // All words over `alphabet` of length <= n.
  std::vector<Word> all_words(std::string const& alphabet, std::size_t n);

  // Do two polycyclic elements act identically on every stack of length
  // <= depth?
  bool same_stack_map(MonoidElement const& x,
                      MonoidElement const& y,
                      std::string const&   alphabet,
                      std::size_t          depth);

  // Classical NFA acceptance (valences ignored) by subset simulation with
  // ε-closures.
  bool subset_accepts(valence::ValenceNFA const& m, Word const& w);

  // Context-free membership for a grammar, valences ignored. Span table
  // filled to a fixpoint so ε- and unit rules are handled.
  bool cyk_accepts(valence::ValenceGrammar const& g, Word const& w);

  // Register arithmetic over Z^m by exhaustive path enumeration: every
  // register value reachable in an accepting state after reading w, with at
  // most `max_eps` ε-moves.
  std::set<MonoidElement> path_registers(valence::ValenceNFA const& m,
                                         Word const&                w,
                                         std::size_t                max_eps);

  // Elements of a finite monoid denoted by e, with each star unrolled to at
  // most `unroll` factors.
  std::set<MonoidElement> unrolled_subset(MonoidDescriptor const&      desc,
                                          valence::RationalExpr const& e,
                                          std::size_t                  unroll);

  // Direct PDA simulation over the trivial monoid by breadth-first search
  // on (state, position, stack), stack height capped at `max_stack`.
  bool pda_accepts_trivial(valence::ValencePDA const& p,
                           Word const&                w,
                           std::size_t                max_stack);

}  // namespace oracle

#endif  // VALENCE_TESTS_ORACLES_HPP_

// Seeded random instances for property tests.

#ifndef VALENCE_TESTS_GENERATORS_HPP_
#define VALENCE_TESTS_GENERATORS_HPP_

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "valence/automata.hpp"
#include "valence/grammar.hpp"
#include "valence/monoid.hpp"
#include "valence/rational.hpp"

namespace gen {

  using Rng = std::mt19937_64;
  using namespace valence;

  std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);
  bool        coin(Rng& rng, double p);

  // Transformation monoids on 2 or 3 points, cyclic groups and nilpotent
  // monoids with at most max_size elements.
  FiniteTable random_finite_monoid(Rng& rng, std::size_t max_size);

  // Every associative table on {0..n-1} with identity 0.
  std::vector<FiniteTable> all_monoid_tables(std::size_t n);

  // Small named monoids, one of each shape the transforms care about.
  struct NamedTable {
    std::string name;
    FiniteTable table;
  };
  std::vector<NamedTable> finite_monoid_zoo();

  // Descriptors of every class, for algebraic law checks.
  std::vector<std::pair<std::string, MonoidDescriptor>> descriptor_zoo();

  MonoidElement random_element(MonoidDescriptor const& desc, Rng& rng);

  RationalExpr random_expr(MonoidDescriptor const& desc,
                           Rng&                    rng,
                           std::size_t             depth,
                           bool                    allow_star);

  ValenceNFA random_nfa(Rng&                    rng,
                        MonoidDescriptor const& desc,
                        std::size_t             max_states,
                        std::string const&      alphabet,
                        double                  eps_prob);

  RationalMonoidAutomaton random_rma(Rng&                    rng,
                                     MonoidDescriptor const& desc,
                                     std::size_t             max_states);

  // Over the trivial monoid, without ε- or unit rules.
  ValenceGrammar random_cf_grammar(Rng& rng);

  // Nonterminals SAB, terminals ab, arbitrary right-hand sides of length
  // <= 3 and random valences.
  ValenceGrammar random_valence_grammar(Rng& rng, MonoidDescriptor const& desc);

}  // namespace gen

#endif  // VALENCE_TESTS_GENERATORS_HPP_

#ifndef VALENCE_FINITE_MONOID_HPP_
#define VALENCE_FINITE_MONOID_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "valence/monoid.hpp"

namespace valence {

  using IndexSet = std::vector<std::size_t>;  // sorted, distinct

  ////////////////////////////////////////////////////////////////////////
  // Table constructors
  ////////////////////////////////////////////////////////////////////////

  // Z_n under addition mod n; index i denotes i.
  FiniteTable cyclic_group(std::size_t n);

  // {1, a, a^2, ..., a^{k-1}, 0} with a^k = 0; k = 2 gives {1, a, 0}.
  FiniteTable nilpotent_monoid(std::size_t k);

  // Monoid of maps on {0, ..., degree - 1} generated by `generators`,
  // composed left to right: (f * g)(x) = g(f(x)). Index 0 is the identity
  // map. Throws ResourceError if the closure exceeds `limit` elements.
  FiniteTable transformation_monoid(
      std::size_t                                  degree,
      std::vector<std::vector<std::size_t>> const& generators,
      std::size_t                                  limit = 4096);

  // Closure of `generators` inside a finite or infinite descriptor, as a
  // table on the closure (index 0 = identity). Throws ResourceError if the
  // closure exceeds `limit` elements.
  struct SubmonoidTable {
    FiniteTable                table;
    std::vector<MonoidElement> elements;  // table index -> element of desc
  };
  SubmonoidTable submonoid_closure(MonoidDescriptor const&            desc,
                                   std::vector<MonoidElement> const& generators,
                                   std::size_t limit = 4096);

  ////////////////////////////////////////////////////////////////////////
  // Permutation property
  ////////////////////////////////////////////////////////////////////////

  inline constexpr std::uint64_t kDefaultTupleLimit = 1'000'000;

  // True iff for every n-tuple there is a non-identity permutation with the
  // same product. Brute force over size^n tuples; throws ResourceError when
  // size^n exceeds `tuple_limit`.
  bool check_permutability(FiniteTable const& table,
                           std::size_t        n,
                           std::uint64_t      tuple_limit = kDefaultTupleLimit);

  ////////////////////////////////////////////////////////////////////////
  // Structure analysis
  ////////////////////////////////////////////////////////////////////////

  struct MaximalSubgroup {
    std::size_t idempotent;
    IndexSet    elements;  // the H-class of the idempotent
  };

  struct StructureReport {
    std::size_t                size = 0;
    std::optional<std::size_t> zero;  // detected from the table
    bool                       commutative = false;
    bool                       group       = false;
    IndexSet                   idempotents;
    std::vector<IndexSet>      principal_ideals;  // M a M, one per element
    std::vector<IndexSet>      ideals;            // every ideal, sorted
    bool                       ideals_complete = true;
    std::vector<IndexSet>      proper_ideals;
    IndexSet                   proper_ideal_union;
    bool                       simple                 = false;
    bool                       zero_simple            = false;
    bool                       completely_simple      = false;
    bool                       completely_zero_simple = false;
    IndexSet                   primitive_idempotents;
    std::vector<IndexSet>      r_classes;
    std::vector<IndexSet>      l_classes;
    std::vector<IndexSet>      h_classes;
    std::vector<MaximalSubgroup> maximal_subgroups;
  };

  // Ideals beyond this count are not enumerated (ideals_complete = false);
  // the proper-ideal union is always exact.
  inline constexpr std::size_t kIdealEnumerationLimit = 4096;

  StructureReport classify_finite_monoid(FiniteTable const& table);

  // S^1 I S^1 ⊆ I for a nonempty I.
  bool is_ideal(FiniteTable const& table, IndexSet const& subset);

  // Rees quotient table / ideal. Throws InvalidIdealError if `ideal` is
  // empty, not an ideal, or contains the identity.
  MonoidDescriptor rees_quotient(FiniteTable const& table, IndexSet ideal);

}  // namespace valence

#endif  // VALENCE_FINITE_MONOID_HPP_

#ifndef VALENCE_SEMILINEAR_HPP_
#define VALENCE_SEMILINEAR_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "valence/monoid.hpp"
#include "valence/rational.hpp"
#include "valence/verdict.hpp"

namespace valence {

  // { base + sum c_i periods[i] : c_i in N }
  struct LinearSet {
    IntVector              base;
    std::vector<IntVector> periods;

    bool operator==(LinearSet const&) const = default;
  };

  // Finite union of linear sets of a common rank; no components = empty set.
  struct SemilinearSet {
    std::size_t            rank = 1;
    std::vector<LinearSet> components;

    bool operator==(SemilinearSet const&) const = default;
  };

  inline constexpr std::size_t kDefaultCoefficientBound = 64;

  // Throws StructuralError if some vector has the wrong rank.
  void validate(SemilinearSet const& s);

  // {0}
  SemilinearSet semilinear_zero(std::size_t rank);

  // Structural translation of a rational expression over Z^rank. Relies on
  // commutativity: concatenation is a sumset and (A ∪ B)* = A* + B*.
  SemilinearSet rational_to_semilinear(std::size_t rank, RationalExpr const& e);

  struct SemilinearMembership {
    Verdict                    verdict = Verdict::No;
    std::size_t                component = 0;  // valid when verdict == Yes
    std::vector<std::uint64_t> coefficients;   // valid when verdict == Yes
  };

  // Searches coefficients c in N^k with v = base + sum c_i p_i. Yes carries
  // the witness; No is only returned when the search region was provably
  // sufficient (no coefficient loop was cut by `coefficient_bound`).
  SemilinearMembership semilinear_member(
      SemilinearSet const& s,
      IntVector const&     v,
      std::size_t          coefficient_bound = kDefaultCoefficientBound);

  SemilinearSet semilinear_negate(SemilinearSet const& s);
  SemilinearSet semilinear_sum(SemilinearSet const& s, SemilinearSet const& t);
  SemilinearSet semilinear_union(SemilinearSet const& s, SemilinearSet const& t);

}  // namespace valence

#endif  // VALENCE_SEMILINEAR_HPP_

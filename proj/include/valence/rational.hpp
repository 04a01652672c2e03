#ifndef VALENCE_RATIONAL_HPP_
#define VALENCE_RATIONAL_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <type_traits>
#include <variant>
#include <vector>

#include "valence/box.hpp"
#include "valence/monoid.hpp"

namespace valence {

  class RationalExpr;

  struct ExprAtom {
    MonoidElement element;
    bool          operator==(ExprAtom const&) const = default;
  };
  struct ExprUnion {
    std::vector<RationalExpr> items;
    bool                      operator==(ExprUnion const&) const = default;
  };
  struct ExprConcat {
    std::vector<RationalExpr> items;
    bool                      operator==(ExprConcat const&) const = default;
  };
  struct ExprStar {
    Box<RationalExpr> child;
    bool              operator==(ExprStar const&) const = default;
  };
  struct ExprEmpty {
    bool operator==(ExprEmpty const&) const = default;
  };
  // {1}
  struct ExprOne {
    bool operator==(ExprOne const&) const = default;
  };

  // Rational subset of a monoid, as an expression tree.
  class RationalExpr {
   public:
    using Variant = std::
        variant<ExprAtom, ExprUnion, ExprConcat, ExprStar, ExprEmpty, ExprOne>;

    RationalExpr() : value(ExprOne{}) {}
    template <typename T>
      requires(!std::is_same_v<std::remove_cvref_t<T>, RationalExpr>)
    RationalExpr(T v)  // NOLINT(runtime/explicit)
        : value(std::move(v)) {}

    static RationalExpr atom(MonoidElement e) {
      return ExprAtom{std::move(e)};
    }
    static RationalExpr unite(std::vector<RationalExpr> items) {
      return ExprUnion{std::move(items)};
    }
    static RationalExpr concat(std::vector<RationalExpr> items) {
      return ExprConcat{std::move(items)};
    }
    static RationalExpr star(RationalExpr child) {
      return ExprStar{std::move(child)};
    }
    static RationalExpr empty() {
      return ExprEmpty{};
    }
    static RationalExpr one() {
      return ExprOne{};
    }

    template <typename T>
    bool is() const noexcept {
      return std::holds_alternative<T>(value);
    }
    template <typename T>
    T const& as() const {
      return std::get<T>(value);
    }

    bool operator==(RationalExpr const&) const = default;

    Variant value;
  };

  using ElementSet = std::set<MonoidElement>;

  bool contains_star(RationalExpr const& e);

  // Checks atoms against the descriptor, and rejects Star unless the
  // descriptor is finite or free abelian (StructuralError / UnsupportedError).
  void validate(MonoidDescriptor const& desc, RationalExpr const& e);

  // Exact subset denoted by e in a finite monoid; Star is a least fixpoint.
  ElementSet eval_rational_finite(MonoidDescriptor const& desc,
                                  RationalExpr const&     e);

  // Star-free expressions denote finite subsets of any monoid. Returns
  // nullopt if e contains a Star.
  std::optional<ElementSet> eval_star_free(MonoidDescriptor const& desc,
                                           RationalExpr const&     e);

  // True if e denotes exactly {1} syntactically after evaluation of its
  // star-free part (One, Atom(1), Concat of those, ...).
  bool denotes_identity_only(MonoidDescriptor const& desc,
                             RationalExpr const&     e);

}  // namespace valence

#endif  // VALENCE_RATIONAL_HPP_

#include "valence/rational.hpp"

#include "valence/error.hpp"

namespace valence {

  namespace {

    template <typename... Ts>
    struct overloaded : Ts... {
      using Ts::operator()...;
    };
    template <typename... Ts>
    overloaded(Ts...) -> overloaded<Ts...>;

    ElementSet product_set(MonoidDescriptor const& desc,
                           ElementSet const&       a,
                           ElementSet const&       b) {
      ElementSet out;
      for (auto const& x : a) {
        for (auto const& y : b) {
          out.insert(mul(desc, x, y));
        }
      }
      return out;
    }

  }  // namespace

  bool contains_star(RationalExpr const& e) {
    return std::visit(
        overloaded{[](ExprStar const&) { return true; },
                   [](ExprUnion const& u) {
                     for (auto const& i : u.items) {
                       if (contains_star(i)) {
                         return true;
                       }
                     }
                     return false;
                   },
                   [](ExprConcat const& c) {
                     for (auto const& i : c.items) {
                       if (contains_star(i)) {
                         return true;
                       }
                     }
                     return false;
                   },
                   [](auto const&) { return false; }},
        e.value);
  }

  void validate(MonoidDescriptor const& desc, RationalExpr const& e) {
    std::visit(overloaded{[&](ExprAtom const& a) {
                            check_element(desc, a.element, "expression atom");
                          },
                          [&](ExprUnion const& u) {
                            for (auto const& i : u.items) {
                              validate(desc, i);
                            }
                          },
                          [&](ExprConcat const& c) {
                            for (auto const& i : c.items) {
                              validate(desc, i);
                            }
                          },
                          [&](ExprStar const& s) {
                            if (!is_finite(desc) && !desc.is<FreeAbelian>()) {
                              throw UnsupportedError(
                                  "Kleene star in a target set is only "
                                  "supported over finite or free abelian "
                                  "monoids, not "
                                  + describe(desc));
                            }
                            validate(desc, *s.child);
                          },
                          [](auto const&) {}},
               e.value);
  }

  ElementSet eval_rational_finite(MonoidDescriptor const& desc,
                                  RationalExpr const&     e) {
    if (!is_finite(desc)) {
      throw UnsupportedError("eval_rational_finite needs a finite monoid, got "
                             + describe(desc));
    }
    return std::visit(
        overloaded{[&](ExprAtom const& a) {
                     check_element(desc, a.element, "expression atom");
                     return ElementSet{a.element};
                   },
                   [&](ExprUnion const& u) {
                     ElementSet out;
                     for (auto const& i : u.items) {
                       out.merge(eval_rational_finite(desc, i));
                     }
                     return out;
                   },
                   [&](ExprConcat const& c) {
                     ElementSet out{identity(desc)};
                     for (auto const& i : c.items) {
                       out = product_set(desc, out, eval_rational_finite(desc, i));
                     }
                     return out;
                   },
                   [&](ExprStar const& s) {
                     auto       base = eval_rational_finite(desc, *s.child);
                     ElementSet out{identity(desc)};
                     while (true) {
                       auto next = product_set(desc, out, base);
                       next.insert(out.begin(), out.end());
                       if (next.size() == out.size()) {
                         return out;
                       }
                       out = std::move(next);
                     }
                   },
                   [](ExprEmpty const&) { return ElementSet{}; },
                   [&](ExprOne const&) { return ElementSet{identity(desc)}; }},
        e.value);
  }

  std::optional<ElementSet> eval_star_free(MonoidDescriptor const& desc,
                                           RationalExpr const&     e) {
    if (contains_star(e)) {
      return std::nullopt;
    }
    return std::visit(
        overloaded{[&](ExprAtom const& a) -> std::optional<ElementSet> {
                     check_element(desc, a.element, "expression atom");
                     return ElementSet{a.element};
                   },
                   [&](ExprUnion const& u) -> std::optional<ElementSet> {
                     ElementSet out;
                     for (auto const& i : u.items) {
                       out.merge(*eval_star_free(desc, i));
                     }
                     return out;
                   },
                   [&](ExprConcat const& c) -> std::optional<ElementSet> {
                     ElementSet out{identity(desc)};
                     for (auto const& i : c.items) {
                       out = product_set(desc, out, *eval_star_free(desc, i));
                     }
                     return out;
                   },
                   [](ExprEmpty const&) -> std::optional<ElementSet> {
                     return ElementSet{};
                   },
                   [&](auto const&) -> std::optional<ElementSet> {
                     return ElementSet{identity(desc)};
                   }},
        e.value);
  }

  bool denotes_identity_only(MonoidDescriptor const& desc,
                             RationalExpr const&     e) {
    auto s = eval_star_free(desc, e);
    return s && s->size() == 1 && is_identity(desc, *s->begin());
  }

}  // namespace valence

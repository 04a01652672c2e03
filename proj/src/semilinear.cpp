#include "valence/semilinear.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "valence/error.hpp"

namespace valence {

  namespace {

    template <typename... Ts>
    struct overloaded : Ts... {
      using Ts::operator()...;
    };
    template <typename... Ts>
    overloaded(Ts...) -> overloaded<Ts...>;

    bool is_zero_vector(IntVector const& v) {
      return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
    }

    IntVector add(IntVector a, IntVector const& b) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] += b[i];
      }
      return a;
    }

    void check_rank(std::size_t rank, IntVector const& v, char const* what) {
      if (v.size() != rank) {
        throw StructuralError(std::string(what) + " has length "
                              + std::to_string(v.size()) + ", expected rank "
                              + std::to_string(rank));
      }
    }

    // Drops zero periods and repeats, keeping first occurrences in order.
    LinearSet normalized(LinearSet l) {
      std::vector<IntVector> periods;
      std::set<IntVector>    seen;
      for (auto& p : l.periods) {
        if (!is_zero_vector(p) && seen.insert(p).second) {
          periods.push_back(std::move(p));
        }
      }
      l.periods = std::move(periods);
      return l;
    }

    SemilinearSet deduplicated(SemilinearSet s) {
      std::vector<LinearSet> out;
      for (auto& c : s.components) {
        auto n = normalized(std::move(c));
        if (std::find(out.begin(), out.end(), n) == out.end()) {
          out.push_back(std::move(n));
        }
      }
      s.components = std::move(out);
      return s;
    }

    SemilinearSet star_of(SemilinearSet const& s) {
      auto out = semilinear_zero(s.rank);
      for (auto const& c : s.components) {
        SemilinearSet piece{s.rank, {LinearSet{IntVector(s.rank, 0), {}}}};
        LinearSet     loop = c;
        loop.periods.push_back(c.base);
        piece.components.push_back(std::move(loop));
        out = semilinear_sum(out, piece);
      }
      return deduplicated(std::move(out));
    }

    // Depth-first coefficient search with memoised failures.
    class CoefficientSearch {
     public:
      CoefficientSearch(std::vector<IntVector> const& periods,
                        std::size_t                   bound)
          : periods_(periods), bound_(bound), rank_(0) {
        if (!periods.empty()) {
          rank_ = periods[0].size();
        }
        // remaining_sign_[i][j]: sign information of periods i.. in coord j.
        remaining_nonneg_.assign(periods.size() + 1,
                                 std::vector<bool>(rank_, true));
        remaining_nonpos_.assign(periods.size() + 1,
                                 std::vector<bool>(rank_, true));
        for (std::size_t i = periods.size(); i-- > 0;) {
          for (std::size_t j = 0; j < rank_; ++j) {
            remaining_nonneg_[i][j]
                = remaining_nonneg_[i + 1][j] && periods[i][j] >= 0;
            remaining_nonpos_[i][j]
                = remaining_nonpos_[i + 1][j] && periods[i][j] <= 0;
          }
        }
      }

      bool run(IntVector const& target) {
        coefficients_.assign(periods_.size(), 0);
        return search(0, target);
      }

      bool truncated() const noexcept {
        return truncated_;
      }

      std::vector<std::uint64_t> const& coefficients() const noexcept {
        return coefficients_;
      }

     private:
      static constexpr std::size_t kNodeLimit = 2'000'000;

      // Can the periods from index i onward still sum to r?
      bool feasible(std::size_t i, IntVector const& r) const {
        for (std::size_t j = 0; j < r.size(); ++j) {
          if (remaining_nonneg_[i][j] && r[j] < 0) {
            return false;
          }
          if (remaining_nonpos_[i][j] && r[j] > 0) {
            return false;
          }
        }
        return true;
      }

      // Will increasing the coefficient of period i keep r infeasible for
      // the periods after i?
      bool hopeless(std::size_t i, IntVector const& r) const {
        auto const& p = periods_[i];
        for (std::size_t j = 0; j < r.size(); ++j) {
          if (remaining_nonneg_[i + 1][j] && p[j] > 0 && r[j] < 0) {
            return true;
          }
          if (remaining_nonpos_[i + 1][j] && p[j] < 0 && r[j] > 0) {
            return true;
          }
        }
        return false;
      }

      bool search(std::size_t i, IntVector const& r) {
        if (i == periods_.size()) {
          return is_zero_vector(r);
        }
        if (!feasible(i, r)) {
          return false;
        }
        auto key = std::make_pair(i, r);
        if (failed_.count(key)) {
          return false;
        }
        if (++nodes_ > kNodeLimit) {
          truncated_ = true;
          return false;
        }
        IntVector cur = r;
        for (std::uint64_t c = 0;; ++c) {
          if (c > bound_) {
            truncated_ = true;
            break;
          }
          if (c > 0 && hopeless(i, cur)) {
            break;
          }
          coefficients_[i] = c;
          if (search(i + 1, cur)) {
            return true;
          }
          for (std::size_t j = 0; j < cur.size(); ++j) {
            cur[j] -= periods_[i][j];
          }
        }
        coefficients_[i] = 0;
        failed_.insert(std::move(key));
        return false;
      }

      std::vector<IntVector> const&                 periods_;
      std::size_t                                   bound_;
      std::size_t                                   rank_;
      std::vector<std::vector<bool>>                remaining_nonneg_;
      std::vector<std::vector<bool>>                remaining_nonpos_;
      std::set<std::pair<std::size_t, IntVector>>   failed_;
      std::vector<std::uint64_t>                    coefficients_;
      std::size_t                                   nodes_     = 0;
      bool                                          truncated_ = false;
    };

  }  // namespace

  void validate(SemilinearSet const& s) {
    if (s.rank == 0) {
      throw StructuralError("semilinear rank must be positive");
    }
    for (auto const& c : s.components) {
      check_rank(s.rank, c.base, "linear set base");
      for (auto const& p : c.periods) {
        check_rank(s.rank, p, "linear set period");
      }
    }
  }

  SemilinearSet semilinear_zero(std::size_t rank) {
    return SemilinearSet{rank, {LinearSet{IntVector(rank, 0), {}}}};
  }

  SemilinearSet rational_to_semilinear(std::size_t rank, RationalExpr const& e) {
    return std::visit(
        overloaded{
            [&](ExprAtom const& a) {
              if (!a.element.is<IntVector>()) {
                throw StructuralError("semilinear atoms must be vectors");
              }
              check_rank(rank, a.element.as<IntVector>(), "atom");
              return SemilinearSet{rank,
                                   {LinearSet{a.element.as<IntVector>(), {}}}};
            },
            [&](ExprUnion const& u) {
              SemilinearSet out{rank, {}};
              for (auto const& i : u.items) {
                out = semilinear_union(out, rational_to_semilinear(rank, i));
              }
              return deduplicated(std::move(out));
            },
            [&](ExprConcat const& c) {
              auto out = semilinear_zero(rank);
              for (auto const& i : c.items) {
                out = semilinear_sum(out, rational_to_semilinear(rank, i));
              }
              return deduplicated(std::move(out));
            },
            [&](ExprStar const& s) {
              return star_of(rational_to_semilinear(rank, *s.child));
            },
            [&](ExprEmpty const&) { return SemilinearSet{rank, {}}; },
            [&](ExprOne const&) { return semilinear_zero(rank); }},
        e.value);
  }

  SemilinearMembership semilinear_member(SemilinearSet const& s,
                                         IntVector const&     v,
                                         std::size_t coefficient_bound) {
    validate(s);
    check_rank(s.rank, v, "query vector");
    bool truncated = false;
    for (std::size_t ci = 0; ci < s.components.size(); ++ci) {
      auto const& c = s.components[ci];
      IntVector   target(v.size());
      for (std::size_t j = 0; j < v.size(); ++j) {
        target[j] = v[j] - c.base[j];
      }
      // Zero periods contribute nothing and would make the loop unbounded.
      std::vector<IntVector> periods;
      for (auto const& p : c.periods) {
        if (!is_zero_vector(p)) {
          periods.push_back(p);
        }
      }
      CoefficientSearch search(periods, coefficient_bound);
      if (search.run(target)) {
        SemilinearMembership out{Verdict::Yes, ci, {}};
        // Report coefficients against the original period list.
        std::size_t k = 0;
        for (auto const& p : c.periods) {
          out.coefficients.push_back(is_zero_vector(p) ? 0
                                                       : search.coefficients()[k++]);
        }
        return out;
      }
      truncated = truncated || search.truncated();
    }
    return {truncated ? Verdict::Undetermined : Verdict::No, 0, {}};
  }

  SemilinearSet semilinear_negate(SemilinearSet const& s) {
    SemilinearSet out{s.rank, {}};
    auto          neg = [](IntVector v) {
      for (auto& x : v) {
        x = -x;
      }
      return v;
    };
    for (auto const& c : s.components) {
      LinearSet l{neg(c.base), {}};
      for (auto const& p : c.periods) {
        l.periods.push_back(neg(p));
      }
      out.components.push_back(std::move(l));
    }
    return out;
  }

  SemilinearSet semilinear_sum(SemilinearSet const& s, SemilinearSet const& t) {
    if (s.rank != t.rank) {
      throw StructuralError("semilinear sum of different ranks");
    }
    SemilinearSet out{s.rank, {}};
    for (auto const& a : s.components) {
      for (auto const& b : t.components) {
        LinearSet l{add(a.base, b.base), a.periods};
        l.periods.insert(l.periods.end(), b.periods.begin(), b.periods.end());
        out.components.push_back(normalized(std::move(l)));
      }
    }
    return out;
  }

  SemilinearSet semilinear_union(SemilinearSet const& s, SemilinearSet const& t) {
    if (s.rank != t.rank) {
      throw StructuralError("semilinear union of different ranks");
    }
    SemilinearSet out = s;
    out.components.insert(
        out.components.end(), t.components.begin(), t.components.end());
    return out;
  }

}  // namespace valence

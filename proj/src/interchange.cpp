#include "valence/interchange.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "valence/error.hpp"
#include "valence/simulate.hpp"

namespace valence {

  namespace {

    struct Config {
      StateId       state;
      std::size_t   pos;
      MonoidElement reg;

      bool operator==(Config const&) const = default;
    };

    struct ConfigHash {
      std::size_t operator()(Config const& c) const noexcept {
        std::size_t h = hash_value(c.reg);
        h ^= c.state + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= c.pos + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
      }
    };

    constexpr std::size_t kRunLimit    = 10'000;
    constexpr std::size_t kWindowLimit = 256;

    // Depth-first enumeration of accepting computations as transition
    // index sequences. Subtrees without an accepting run are memoised by
    // configuration and the ε-count they failed with.
    class RunSearch {
     public:
      enum class Outcome { None, Found, Stop };

      RunSearch(RationalMonoidAutomaton const&                   m,
                TargetCondition const&                           cond,
                Word const&                                      w,
                Budgets const&                                   budgets,
                std::function<bool(std::vector<std::size_t> const&)> on_run)
          : m_(m),
            cond_(cond),
            w_(w),
            eps_budget_(budgets.epsilon.value_or(
                default_epsilon_budget(w.size(), m.core.states.size()))),
            node_limit_(budgets.max_configurations),
            on_run_(std::move(on_run)),
            out_(m.core.states.size()),
            accepting_(m.core.states.size(), false) {
        for (std::size_t i = 0; i < m.core.transitions.size(); ++i) {
          out_[m.core.transitions[i].from].push_back(i);
        }
        for (auto q : m.core.accepting) {
          accepting_[q] = true;
        }
      }

      void run() {
        dfs(m_.core.initial, 0, identity(m_.core.monoid), 0);
      }

      std::size_t runs() const noexcept {
        return runs_;
      }

     private:
      Outcome dfs(StateId q, std::size_t pos, MonoidElement reg, std::size_t eps) {
        if (++nodes_ > node_limit_) {
          return Outcome::Stop;
        }
        auto const& desc = m_.core.monoid;
        Config      key{q, pos, reg};
        auto        it = failed_.find(key);
        if (it != failed_.end() && it->second <= eps) {
          return Outcome::None;
        }
        Outcome result = Outcome::None;
        if (pos == w_.size() && accepting_[q]
            && cond_.test(reg) == Verdict::Yes) {
          result = Outcome::Found;
          if (on_run_(path_) || ++runs_ >= kRunLimit) {
            return Outcome::Stop;
          }
        }
        for (auto i : out_[q]) {
          auto const& t = m_.core.transitions[i];
          std::size_t next_pos = pos, next_eps = eps;
          if (t.symbol) {
            if (pos >= w_.size() || w_[pos] != *t.symbol) {
              continue;
            }
            ++next_pos;
          } else if (++next_eps > eps_budget_) {
            continue;
          }
          auto next = mul(desc, reg, t.valence);
          if (cond_.identity_only() && is_dead_end(desc, next)) {
            continue;
          }
          path_.push_back(i);
          auto r = dfs(t.to, next_pos, std::move(next), next_eps);
          path_.pop_back();
          if (r == Outcome::Stop) {
            return r;
          }
          if (r == Outcome::Found) {
            result = r;
          }
        }
        if (result == Outcome::None) {
          auto [slot, fresh] = failed_.try_emplace(std::move(key), eps);
          if (!fresh) {
            slot->second = std::min(slot->second, eps);
          }
        }
        return result;
      }

      RationalMonoidAutomaton const&                        m_;
      TargetCondition const&                                cond_;
      Word const&                                           w_;
      std::size_t                                           eps_budget_;
      std::size_t                                           node_limit_;
      std::function<bool(std::vector<std::size_t> const&)> on_run_;
      std::vector<std::vector<std::size_t>>                 out_;
      std::vector<bool>                                     accepting_;
      std::vector<std::size_t>                              path_;
      std::unordered_map<Config, std::size_t, ConfigHash>   failed_;
      std::size_t                                           nodes_ = 0;
      std::size_t                                           runs_  = 0;
    };

    // Non-identity permutations of 0..k-1: transpositions first, then the
    // rest of S_k in lexicographic order when k <= 6.
    std::vector<std::vector<std::size_t>> candidate_permutations(std::size_t k) {
      std::vector<std::vector<std::size_t>> out;
      std::vector<std::size_t>              id(k);
      std::iota(id.begin(), id.end(), 0);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          auto s = id;
          std::swap(s[i], s[j]);
          out.push_back(std::move(s));
        }
      }
      if (k <= 6) {
        auto s = id;
        while (std::next_permutation(s.begin(), s.end())) {
          std::size_t moved = 0;
          for (std::size_t i = 0; i < k; ++i) {
            moved += s[i] != i;
          }
          if (moved > 2) {
            out.push_back(s);
          }
        }
      }
      return out;
    }

    // Calls f on each increasing (k+1)-subset of `occ` until f returns true
    // or `limit` subsets were tried.
    template <typename F>
    bool for_each_window(std::vector<std::size_t> const& occ,
                         std::size_t                     size,
                         std::size_t&                    budget,
                         F&&                             f) {
      std::vector<std::size_t> idx(size);
      std::iota(idx.begin(), idx.end(), 0);
      while (budget > 0) {
        --budget;
        std::vector<std::size_t> window;
        for (auto i : idx) {
          window.push_back(occ[i]);
        }
        if (f(window)) {
          return true;
        }
        std::size_t i = size;
        while (i > 0 && idx[i - 1] == occ.size() - size + i - 1) {
          --i;
        }
        if (i == 0) {
          return false;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < size; ++j) {
          idx[j] = idx[j - 1] + 1;
        }
      }
      return false;
    }

  }  // namespace

  std::string cycle_notation(std::vector<std::size_t> const& sigma) {
    std::string       out;
    std::vector<bool> seen(sigma.size(), false);
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      if (seen[i] || sigma[i] == i) {
        continue;
      }
      out += "(";
      for (std::size_t j = i; !seen[j]; j = sigma[j]) {
        seen[j] = true;
        if (j != i) {
          out += " ";
        }
        out += std::to_string(j + 1);
      }
      out += ")";
    }
    return out.empty() ? "()" : out;
  }

  Word permuted(InterchangeWitness const& w) {
    Word out = w.lambda;
    for (auto i : w.sigma) {
      out += w.blocks[i];
    }
    return out + w.mu;
  }

  InterchangeWitness interchange_witness(RationalMonoidAutomaton const& m,
                                         Word const&                    w,
                                         std::vector<Word> const& factorization,
                                         std::size_t              k,
                                         Budgets const&           budgets) {
    if (k < 2) {
      throw StructuralError("interchange needs k >= 2");
    }
    Word joined;
    for (auto const& f : factorization) {
      if (f.empty()) {
        throw StructuralError("factorization contains an empty factor");
      }
      joined += f;
    }
    if (joined != w) {
      throw StructuralError("factorization does not concatenate to the word");
    }
    check_word(m.core.alphabet, w);

    std::vector<std::size_t> boundaries{0};
    for (auto const& f : factorization) {
      boundaries.push_back(boundaries.back() + f.size());
    }
    auto const& desc  = m.core.monoid;
    auto const  perms = candidate_permutations(k);
    TargetCondition cond(m, budgets.coefficient_bound);

    bool                              repeated = false;
    std::optional<InterchangeWitness> found;

    auto product = [&](std::vector<std::size_t> const& run,
                       std::size_t                     from,
                       std::size_t                     to) {
      auto x = identity(desc);
      for (std::size_t t = from; t < to; ++t) {
        x = mul(desc, x, m.core.transitions[run[t]].valence);
      }
      return x;
    };

    auto try_run = [&](std::vector<std::size_t> const& run) {
      // Step index at which the run first sits at each boundary position.
      std::vector<std::size_t> at(boundaries.size());
      std::vector<StateId>     state_at(boundaries.size());
      std::size_t              pos = 0, b = 0;
      StateId                  q   = m.core.initial;
      for (std::size_t t = 0;; ++t) {
        while (b < boundaries.size() && boundaries[b] == pos) {
          at[b]       = t;
          state_at[b] = q;
          ++b;
        }
        if (t == run.size()) {
          break;
        }
        auto const& tr = m.core.transitions[run[t]];
        pos += tr.symbol ? 1 : 0;
        q = tr.to;
      }
      std::size_t budget = kWindowLimit;
      for (StateId s = 0; s < m.core.states.size(); ++s) {
        std::vector<std::size_t> occ;
        for (std::size_t j = 0; j < boundaries.size(); ++j) {
          if (state_at[j] == s) {
            occ.push_back(j);
          }
        }
        if (occ.size() < k + 1) {
          continue;
        }
        repeated = true;
        auto hit = for_each_window(occ, k + 1, budget, [&](auto const& win) {
          InterchangeWitness wit;
          wit.boundary_state = s;
          wit.lambda         = w.substr(0, boundaries[win[0]]);
          wit.mu             = w.substr(boundaries[win[k]]);
          wit.lambda_product = product(run, 0, at[win[0]]);
          wit.mu_product     = product(run, at[win[k]], run.size());
          for (std::size_t i = 0; i < k; ++i) {
            auto from = boundaries[win[i]], to = boundaries[win[i + 1]];
            wit.blocks.push_back(w.substr(from, to - from));
            wit.block_products.push_back(product(run, at[win[i]], at[win[i + 1]]));
          }
          auto const middle = product_of(desc, wit.block_products);
          for (auto const& sigma : perms) {
            std::vector<MonoidElement> reordered;
            for (auto i : sigma) {
              reordered.push_back(wit.block_products[i]);
            }
            if (product_of(desc, reordered) != middle) {
              continue;
            }
            wit.sigma         = sigma;
            wit.permuted_word = permuted(wit);
            std::vector<MonoidElement> full{wit.lambda_product};
            full.insert(full.end(), wit.block_products.begin(), wit.block_products.end());
            full.push_back(wit.mu_product);
            wit.original_product = product_of(desc, full);
            std::copy(reordered.begin(), reordered.end(), full.begin() + 1);
            wit.permuted_product = product_of(desc, full);
            wit.permuted_verdict
                = rma_accepts(m, cond, wit.permuted_word, budgets);
            found = std::move(wit);
            return true;
          }
          return false;
        });
        if (hit || budget == 0) {
          return hit;
        }
      }
      return false;
    };

    RunSearch search(m, cond, w, budgets, try_run);
    search.run();
    if (found) {
      return *found;
    }
    if (search.runs() == 0) {
      throw SearchError("no successful computation found within budget");
    }
    if (!repeated) {
      throw SearchError("no repeated boundary state: no state occurs at "
                        + std::to_string(k + 1) + " factor boundaries");
    }
    throw SearchError("no non-identity permutation of " + std::to_string(k)
                      + " loops preserves the register");
  }

  InterchangeWitness interchange_witness(ValenceNFA const&        m,
                                         Word const&              w,
                                         std::vector<Word> const& factorization,
                                         std::size_t              k,
                                         Budgets const&           budgets) {
    return interchange_witness(
        RationalMonoidAutomaton{m}, w, factorization, k, budgets);
  }

  bool in_l1star(Word const& w) {
    std::size_t i = 0;
    while (i < w.size()) {
      std::size_t a = 0, b = 0;
      while (i < w.size() && w[i] == 'a') {
        ++a, ++i;
      }
      while (i < w.size() && w[i] == 'b') {
        ++b, ++i;
      }
      if (a == 0 || a != b) {
        return false;
      }
    }
    return true;
  }

  Word l1star_word(std::size_t ell) {
    Word out;
    for (std::size_t n = 1; n <= ell; ++n) {
      out += Word(n, 'a') + Word(n, 'b');
    }
    return out;
  }

  std::vector<Word> l1star_factorization(std::size_t ell) {
    std::vector<Word> out{"a"};
    for (std::size_t i = 2; i <= ell; ++i) {
      out.push_back(Word(i - 1, 'b') + Word(i, 'a'));
    }
    out.push_back(Word(ell, 'b'));
    return out;
  }

  L1StarReport l1star_falsify(RationalMonoidAutomaton const& candidate,
                              std::size_t                    max_ell,
                              Budgets const&                 budgets) {
    auto const& desc = candidate.core.monoid;
    if (!desc.is<FreeAbelian>() && !is_finite(desc)) {
      throw UnsupportedError("l1star_falsify supports Z^m and finite monoids, got "
                             + describe(desc));
    }
    std::size_t const k
        = is_commutative(desc) ? 2 : finite_elements(desc).size() + 1;
    auto const&     alphabet = candidate.core.alphabet;
    bool const      has_ab   = alphabet.find('a') != std::string::npos
                        && alphabet.find('b') != std::string::npos;
    TargetCondition cond(candidate, budgets.coefficient_bound);

    L1StarReport report;
    for (std::size_t ell = 2; ell <= max_ell; ++ell) {
      ++report.ells_tried;
      auto const w    = l1star_word(ell);
      auto const tag  = "ell=" + std::to_string(ell) + ": ";
      auto const v    = has_ab ? rma_accepts(candidate, cond, w, budgets)
                               : Verdict::No;
      if (v == Verdict::No) {
        report.counterexample = L1StarCounterexample{
            L1StarCounterexample::Kind::MissingWord, ell, w, std::nullopt};
        return report;
      }
      if (v == Verdict::Undetermined) {
        report.notes.push_back(tag + "membership of " + w + " undetermined");
        continue;
      }
      if (ell + 2 < k + 1) {
        report.notes.push_back(tag + "too few factor boundaries for k="
                               + std::to_string(k));
        continue;
      }
      try {
        auto wit = interchange_witness(
            candidate, w, l1star_factorization(ell), k, budgets);
        if (wit.permuted_verdict == Verdict::Yes
            && !in_l1star(wit.permuted_word)) {
          auto word = wit.permuted_word;
          report.counterexample
              = L1StarCounterexample{L1StarCounterexample::Kind::AcceptedOutsider,
                                     ell,
                                     std::move(word),
                                     std::move(wit)};
          return report;
        }
        report.notes.push_back(tag + "permuted word " + wit.permuted_word
                               + " gave no counterexample");
      } catch (SearchError const& e) {
        report.notes.push_back(tag + e.what());
      }
    }
    return report;
  }

  char const* to_string(L1StarCounterexample::Kind k) noexcept {
    switch (k) {
      case L1StarCounterexample::Kind::MissingWord:
        return "missing-word";
      case L1StarCounterexample::Kind::AcceptedOutsider:
        return "accepted-outsider";
    }
    return "?";
  }

}  // namespace valence

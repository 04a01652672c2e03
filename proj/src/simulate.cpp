#include "valence/simulate.hpp"

#include <deque>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "valence/error.hpp"

namespace valence {

  namespace {

    std::size_t mix(std::size_t seed, std::size_t v) {
      return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
    }

    struct NfaConfig {
      StateId       state;
      std::size_t   pos;
      MonoidElement reg;

      bool operator==(NfaConfig const&) const = default;
    };

    struct NfaConfigHash {
      std::size_t operator()(NfaConfig const& c) const noexcept {
        return mix(mix(c.state, c.pos), hash_value(c.reg));
      }
    };

    struct PdaConfig {
      StateId       state;
      std::size_t   pos;
      Word          stack;
      MonoidElement reg;

      bool operator==(PdaConfig const&) const = default;
    };

    struct PdaConfigHash {
      std::size_t operator()(PdaConfig const& c) const noexcept {
        return mix(mix(mix(c.state, c.pos), std::hash<Word>{}(c.stack)),
                   hash_value(c.reg));
      }
    };

    struct Exploration {
      bool stopped    = false;
      bool exhaustive = true;
    };

    template <typename T>
    std::vector<std::vector<std::size_t>> outgoing(std::size_t          n,
                                                   std::vector<T> const& ts) {
      std::vector<std::vector<std::size_t>> out(n);
      for (std::size_t i = 0; i < ts.size(); ++i) {
        out[ts[i].from].push_back(i);
      }
      return out;
    }

    // 0-1 BFS over configurations: symbol moves cost 0, ε-moves cost 1, so
    // every configuration is settled with its least ε-count first. A cut
    // (ε budget, stack bound) only loses completeness if the configuration
    // it would have produced is never reached some other way.
    template <typename Config,
              typename Hash,
              typename Expand,
              typename IsFinal,
              typename OnFinal>
    Exploration zero_one_bfs(Config         start,
                             std::size_t    max_configurations,
                             SearchStats*   stats,
                             Expand&&       expand,
                             IsFinal&&      is_final,
                             OnFinal&&      on_final) {
      Exploration                                   result;
      std::deque<std::pair<Config, std::size_t>>    queue;
      std::unordered_map<Config, std::size_t, Hash> best;
      std::unordered_set<Config, Hash>              cut;
      best.emplace(start, 0);
      queue.emplace_back(std::move(start), 0);

      auto offer = [&](Config&& next, std::size_t cost, bool front) {
        auto it = best.find(next);
        if (it != best.end() && it->second <= cost) {
          return;
        }
        if (it == best.end()) {
          if (best.size() >= max_configurations) {
            result.exhaustive = false;
            return;
          }
          best.emplace(next, cost);
        } else {
          it->second = cost;
        }
        if (front) {
          queue.emplace_front(std::move(next), cost);
        } else {
          queue.emplace_back(std::move(next), cost);
        }
      };

      while (!queue.empty()) {
        auto [config, eps] = std::move(queue.front());
        queue.pop_front();
        if (best.at(config) < eps) {
          continue;
        }
        if (stats != nullptr) {
          ++stats->explored;
        }
        if (is_final(config) && on_final(config)) {
          result.stopped = true;
          return result;
        }
        expand(config, eps, offer, cut);
      }
      for (auto const& c : cut) {
        if (!best.count(c)) {
          result.exhaustive = false;
          break;
        }
      }
      return result;
    }

    template <typename OnFinal>
    Exploration explore_nfa(ValenceNFA const& m,
                            Word const&       w,
                            Budgets const&    budgets,
                            bool              prune_dead,
                            SearchStats*      stats,
                            OnFinal&&         on_final) {
      check_word(m.alphabet, w);
      auto const out = outgoing(m.states.size(), m.transitions);
      std::vector<bool> accepting(m.states.size(), false);
      for (auto q : m.accepting) {
        accepting[q] = true;
      }
      std::size_t const eps_budget
          = is_finite(m.monoid)
                ? std::numeric_limits<std::size_t>::max()
                : budgets.epsilon.value_or(
                    default_epsilon_budget(w.size(), m.states.size()));

      auto expand = [&](NfaConfig const& c,
                        std::size_t      eps,
                        auto&            offer,
                        auto&            cut) {
        for (auto i : out[c.state]) {
          auto const& t = m.transitions[i];
          if (t.symbol) {
            if (c.pos >= w.size() || w[c.pos] != *t.symbol) {
              continue;
            }
            NfaConfig next{t.to, c.pos + 1, mul(m.monoid, c.reg, t.valence)};
            if (prune_dead && is_dead_end(m.monoid, next.reg)) {
              continue;
            }
            offer(std::move(next), eps, true);
          } else {
            NfaConfig next{t.to, c.pos, mul(m.monoid, c.reg, t.valence)};
            if (prune_dead && is_dead_end(m.monoid, next.reg)) {
              continue;
            }
            if (eps + 1 > eps_budget) {
              cut.insert(std::move(next));
              continue;
            }
            offer(std::move(next), eps + 1, false);
          }
        }
      };
      auto is_final = [&](NfaConfig const& c) {
        return c.pos == w.size() && accepting[c.state];
      };
      NfaConfig start{m.initial, 0, identity(m.monoid)};
      if (prune_dead && is_dead_end(m.monoid, start.reg)) {
        return {};
      }
      return zero_one_bfs<NfaConfig, NfaConfigHash>(
          std::move(start),
          budgets.max_configurations,
          stats,
          expand,
          is_final,
          [&](NfaConfig const& c) { return on_final(c.reg); });
    }

    Verdict rma_accepts_impl(RationalMonoidAutomaton const& m,
                             TargetCondition const&         cond,
                             Word const&                    w,
                             Budgets const&                 budgets,
                             SearchStats*                   stats) {
      if (cond.identity_only()) {
        return nfa_accepts(m.core, w, budgets, stats);
      }
      bool unsure = false;
      auto found  = explore_nfa(
          m.core, w, budgets, false, stats, [&](MonoidElement const& x) {
            auto v = cond.test(x);
            unsure = unsure || v == Verdict::Undetermined;
            return v == Verdict::Yes;
          });
      if (found.stopped) {
        return Verdict::Yes;
      }
      return unsure || !found.exhaustive ? Verdict::Undetermined : Verdict::No;
    }

  }  // namespace

  Verdict nfa_accepts(ValenceNFA const& m,
                      Word const&       w,
                      Budgets const&    budgets,
                      SearchStats*      stats) {
    auto const& desc = m.monoid;
    auto        r    = explore_nfa(
        m, w, budgets, true, stats, [&desc](MonoidElement const& x) {
          return is_identity(desc, x);
        });
    if (r.stopped) {
      return Verdict::Yes;
    }
    return r.exhaustive ? Verdict::No : Verdict::Undetermined;
  }

  FinalRegisters final_registers(ValenceNFA const& m,
                                 Word const&       w,
                                 Budgets const&    budgets,
                                 SearchStats*      stats) {
    FinalRegisters out;
    auto           r = explore_nfa(
        m, w, budgets, false, stats, [&out](MonoidElement const& x) {
          out.values.insert(x);
          return false;
        });
    out.exhaustive = r.exhaustive;
    return out;
  }

  TargetCondition::TargetCondition(RationalMonoidAutomaton const& m,
                                   std::size_t coefficient_bound)
      : monoid_(m.core.monoid),
        mode_(Mode::StarFree),
        coefficient_bound_(coefficient_bound) {
    identity_only_ = denotes_identity_only(monoid_, m.initial_set)
                     && denotes_identity_only(monoid_, m.terminal_set);
    if (is_finite(monoid_)) {
      mode_         = Mode::Finite;
      auto initial  = eval_rational_finite(monoid_, m.initial_set);
      auto terminal = eval_rational_finite(monoid_, m.terminal_set);
      for (auto const& x : finite_elements(monoid_)) {
        for (auto const& x0 : initial) {
          if (terminal.count(mul(monoid_, x0, x))) {
            good_.insert(x);
            break;
          }
        }
      }
    } else if (monoid_.is<FreeAbelian>()) {
      mode_     = Mode::Semilinear;
      auto rank = monoid_.as<FreeAbelian>().rank;
      difference_
          = semilinear_sum(semilinear_negate(rational_to_semilinear(rank, m.initial_set)),
                           rational_to_semilinear(rank, m.terminal_set));
    } else {
      auto initial  = eval_star_free(monoid_, m.initial_set);
      auto terminal = eval_star_free(monoid_, m.terminal_set);
      if (!initial || !terminal) {
        throw UnsupportedError(
            "targets with Kleene star are not supported over "
            + describe(monoid_));
      }
      initial_  = std::move(*initial);
      terminal_ = std::move(*terminal);
    }
  }

  Verdict TargetCondition::test(MonoidElement const& x) const {
    switch (mode_) {
      case Mode::Finite:
        return good_.count(x) ? Verdict::Yes : Verdict::No;
      case Mode::Semilinear:
        return semilinear_member(
                   difference_, x.as<IntVector>(), coefficient_bound_)
            .verdict;
      case Mode::StarFree:
        for (auto const& x0 : initial_) {
          if (terminal_.count(mul(monoid_, x0, x))) {
            return Verdict::Yes;
          }
        }
        return Verdict::No;
    }
    return Verdict::Undetermined;
  }

  Verdict rma_accepts(RationalMonoidAutomaton const& m,
                      Word const&                    w,
                      Budgets const&                 budgets,
                      SearchStats*                   stats) {
    TargetCondition cond(m, budgets.coefficient_bound);
    return rma_accepts_impl(m, cond, w, budgets, stats);
  }

  Verdict rma_accepts(RationalMonoidAutomaton const& m,
                      TargetCondition const&         cond,
                      Word const&                    w,
                      Budgets const&                 budgets,
                      SearchStats*                   stats) {
    return rma_accepts_impl(m, cond, w, budgets, stats);
  }

  Verdict pda_accepts(ValencePDA const& p,
                      Word const&       w,
                      Budgets const&    budgets,
                      SearchStats*      stats) {
    check_word(p.alphabet, w);
    auto const        out = outgoing(p.states.size(), p.transitions);
    std::vector<bool> accepting(p.states.size(), false);
    for (auto q : p.accepting) {
      accepting[q] = true;
    }
    std::size_t const eps_budget = budgets.epsilon.value_or(
        default_epsilon_budget(w.size(), p.states.size()));
    std::size_t const max_stack
        = budgets.stack_depth.value_or(std::numeric_limits<std::size_t>::max());

    auto expand = [&](PdaConfig const& c,
                      std::size_t      eps,
                      auto&            offer,
                      auto&            cut) {
      for (auto i : out[c.state]) {
        auto const& t = p.transitions[i];
        if (t.symbol && (c.pos >= w.size() || w[c.pos] != *t.symbol)) {
          continue;
        }
        if (t.pop && (c.stack.empty() || c.stack.back() != *t.pop)) {
          continue;
        }
        PdaConfig next{t.to,
                       c.pos + (t.symbol ? 1 : 0),
                       c.stack,
                       mul(p.monoid, c.reg, t.valence)};
        if (is_dead_end(p.monoid, next.reg)) {
          continue;
        }
        if (t.pop) {
          next.stack.pop_back();
        }
        if (t.push) {
          next.stack.push_back(*t.push);
        }
        std::size_t cost = eps + (t.symbol ? 0 : 1);
        if (cost > eps_budget || next.stack.size() > max_stack) {
          cut.insert(std::move(next));
          continue;
        }
        offer(std::move(next), cost, t.symbol.has_value());
      }
    };
    auto is_final = [&](PdaConfig const& c) {
      return c.pos == w.size() && accepting[c.state] && c.stack.empty();
    };
    PdaConfig start{p.initial, 0, "", identity(p.monoid)};
    auto      r = zero_one_bfs<PdaConfig, PdaConfigHash>(
        std::move(start),
        budgets.max_configurations,
        stats,
        expand,
        is_final,
        [&p](PdaConfig const& c) { return is_identity(p.monoid, c.reg); });
    if (r.stopped) {
      return Verdict::Yes;
    }
    return r.exhaustive ? Verdict::No : Verdict::Undetermined;
  }

  std::vector<Word> words_up_to(std::string const& alphabet,
                                std::size_t        max_len) {
    std::vector<Word> out{Word{}};
    std::size_t       layer_begin = 0;
    for (std::size_t len = 1; len <= max_len && !alphabet.empty(); ++len) {
      std::size_t layer_end = out.size();
      for (std::size_t i = layer_begin; i < layer_end; ++i) {
        for (Symbol s : alphabet) {
          out.push_back(out[i] + s);
        }
      }
      layer_begin = layer_end;
    }
    return out;
  }

  LanguageSample enumerate_with(std::string const&                  alphabet,
                                std::size_t                         max_len,
                                std::function<Verdict(Word const&)> accepts) {
    LanguageSample out;
    for (auto const& w : words_up_to(alphabet, max_len)) {
      switch (accepts(w)) {
        case Verdict::Yes:
          out.words.insert(w);
          break;
        case Verdict::Undetermined:
          out.undetermined.insert(w);
          break;
        case Verdict::No:
          break;
      }
    }
    return out;
  }

  LanguageSample enumerate_language(ValenceNFA const& m,
                                    std::size_t       max_len,
                                    Budgets const&    budgets) {
    return enumerate_with(m.alphabet, max_len, [&](Word const& w) {
      return nfa_accepts(m, w, budgets);
    });
  }

  LanguageSample enumerate_language(RationalMonoidAutomaton const& m,
                                    std::size_t                    max_len,
                                    Budgets const&                 budgets) {
    TargetCondition cond(m, budgets.coefficient_bound);
    return enumerate_with(m.core.alphabet, max_len, [&](Word const& w) {
      return rma_accepts_impl(m, cond, w, budgets, nullptr);
    });
  }

  LanguageSample enumerate_language(ValencePDA const& p,
                                    std::size_t       max_len,
                                    Budgets const&    budgets) {
    return enumerate_with(p.alphabet, max_len, [&](Word const& w) {
      return pda_accepts(p, w, budgets);
    });
  }

}  // namespace valence

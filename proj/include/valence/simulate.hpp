#ifndef VALENCE_SIMULATE_HPP_
#define VALENCE_SIMULATE_HPP_

#include <cstddef>
#include <functional>
#include <set>
#include <vector>

#include "valence/automata.hpp"
#include "valence/rational.hpp"
#include "valence/verdict.hpp"

namespace valence {

  // Yes if some computation spelling w reaches an accepting state with
  // register 1. No only when the reachable configuration space was
  // exhausted (always the case for finite monoids); otherwise Undetermined.
  Verdict nfa_accepts(ValenceNFA const& m,
                      Word const&       w,
                      Budgets const&    budgets = {},
                      SearchStats*      stats   = nullptr);

  // Registers x reachable in an accepting state after reading w, starting
  // from 1. `exhaustive` is false if a budget cut the search.
  struct FinalRegisters {
    ElementSet values;
    bool       exhaustive = true;
  };
  FinalRegisters final_registers(ValenceNFA const& m,
                                 Word const&       w,
                                 Budgets const&    budgets = {},
                                 SearchStats*      stats   = nullptr);

  // Decides "exists x0 in I0 with x0 * x in I1" for a register value x.
  // Finite monoids: precomputed exact set. Z^m: membership of x in the
  // semilinear set -I0 + I1. Other monoids: star-free targets only.
  class TargetCondition {
   public:
    TargetCondition(RationalMonoidAutomaton const& m,
                    std::size_t coefficient_bound = kDefaultCoefficientBound);

    Verdict test(MonoidElement const& x) const;

    // Both targets denote {1}; acceptance is plain valence acceptance.
    bool identity_only() const noexcept {
      return identity_only_;
    }

   private:
    enum class Mode { Finite, Semilinear, StarFree };

    MonoidDescriptor monoid_;
    Mode             mode_;
    bool             identity_only_ = false;
    ElementSet       good_;  // Finite
    SemilinearSet    difference_;  // Semilinear: -I0 + I1
    std::size_t      coefficient_bound_;
    ElementSet       initial_, terminal_;  // StarFree
  };

  Verdict rma_accepts(RationalMonoidAutomaton const& m,
                      Word const&                    w,
                      Budgets const&                 budgets = {},
                      SearchStats*                   stats   = nullptr);

  // Same, reusing a precomputed target condition for m.
  Verdict rma_accepts(RationalMonoidAutomaton const& m,
                      TargetCondition const&         cond,
                      Word const&                    w,
                      Budgets const&                 budgets = {},
                      SearchStats*                   stats   = nullptr);

  // Configuration-graph search over (state, position, stack, register).
  Verdict pda_accepts(ValencePDA const& p,
                      Word const&       w,
                      Budgets const&    budgets = {},
                      SearchStats*      stats   = nullptr);

  // All words over `alphabet` of length <= max_len, shortlex order.
  std::vector<Word> words_up_to(std::string const& alphabet,
                                std::size_t        max_len);

  struct LanguageSample {
    std::set<Word> words;         // verdict Yes
    std::set<Word> undetermined;  // verdict Undetermined
    bool           any_undetermined() const noexcept {
      return !undetermined.empty();
    }
  };

  // Runs `accepts` on every word of length <= max_len over `alphabet`.
  LanguageSample enumerate_with(std::string const&                  alphabet,
                                std::size_t                         max_len,
                                std::function<Verdict(Word const&)> accepts);

  LanguageSample enumerate_language(ValenceNFA const& m,
                                    std::size_t       max_len,
                                    Budgets const&    budgets = {});
  LanguageSample enumerate_language(RationalMonoidAutomaton const& m,
                                    std::size_t                    max_len,
                                    Budgets const&                 budgets = {});
  LanguageSample enumerate_language(ValencePDA const& p,
                                    std::size_t       max_len,
                                    Budgets const&    budgets = {});

}  // namespace valence

#endif  // VALENCE_SIMULATE_HPP_

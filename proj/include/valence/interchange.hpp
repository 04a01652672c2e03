#ifndef VALENCE_INTERCHANGE_HPP_
#define VALENCE_INTERCHANGE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "valence/automata.hpp"
#include "valence/verdict.hpp"

namespace valence {

  // Decomposition w = lambda W1 ... Wk mu of an accepted word where every
  // block is read by a loop at boundary_state, together with a non-identity
  // sigma for which the loop products commute into the same register.
  struct InterchangeWitness {
    StateId           boundary_state = 0;
    Word              lambda;
    std::vector<Word> blocks;
    Word              mu;
    // 0-based: the i-th block of the permuted word is blocks[sigma[i]].
    std::vector<std::size_t> sigma;
    Word                     permuted_word;

    MonoidElement              lambda_product;
    std::vector<MonoidElement> block_products;
    MonoidElement              mu_product;
    MonoidElement              original_product;  // m(c_λ) m(c_1) ... m(c_μ)
    MonoidElement              permuted_product;  // with blocks permuted
    Verdict                    permuted_verdict = Verdict::Undetermined;
  };

  // sigma in cycle notation on 1..k, e.g. "(1 2)(3 4)".
  std::string cycle_notation(std::vector<std::size_t> const& sigma);

  // Word obtained by concatenating lambda, the blocks in sigma order, mu.
  Word permuted(InterchangeWitness const& w);

  // `factorization` must be nonempty words concatenating to w; k >= 2.
  // Searches accepting computations for a state met at k + 1 factor
  // boundaries and a permutation of the k loops between them. Throws
  // StructuralError for a bad factorization and SearchError when no
  // accepting computation, repeated boundary state or permutation is found.
  InterchangeWitness interchange_witness(RationalMonoidAutomaton const& m,
                                         Word const&                    w,
                                         std::vector<Word> const& factorization,
                                         std::size_t              k,
                                         Budgets const&           budgets = {});

  InterchangeWitness interchange_witness(ValenceNFA const&        m,
                                         Word const&              w,
                                         std::vector<Word> const& factorization,
                                         std::size_t              k,
                                         Budgets const&           budgets = {});

  // Membership in {a^n b^n : n >= 1}^*.
  bool in_l1star(Word const& w);

  // (ab)(a^2 b^2) ... (a^ell b^ell)
  Word l1star_word(std::size_t ell);

  // a | b a^2 | b^2 a^3 | ... | b^(ell-1) a^ell | b^ell
  std::vector<Word> l1star_factorization(std::size_t ell);

  struct L1StarCounterexample {
    enum class Kind {
      MissingWord,      // a word of L1* the candidate rejects
      AcceptedOutsider  // an accepted permuted word outside L1*
    };
    Kind                              kind = Kind::MissingWord;
    std::size_t                       ell  = 0;
    Word                              word;
    std::optional<InterchangeWitness> witness;
  };

  struct L1StarReport {
    std::optional<L1StarCounterexample> counterexample;
    std::size_t                         ells_tried = 0;
    std::vector<std::string>            notes;  // why some ell was skipped

    Verdict verdict() const noexcept {
      return counterexample ? Verdict::Yes : Verdict::Undetermined;
    }
  };

  // Looks for evidence that `candidate` does not accept L1*, for
  // ell = 2 .. max_ell. The monoid must be Z^m or finite; loops are
  // interchanged in pairs when it is commutative and in groups of |M| + 1
  // otherwise.
  L1StarReport l1star_falsify(RationalMonoidAutomaton const& candidate,
                              std::size_t                    max_ell,
                              Budgets const&                 budgets = {});

  char const* to_string(L1StarCounterexample::Kind k) noexcept;

}  // namespace valence

#endif  // VALENCE_INTERCHANGE_HPP_

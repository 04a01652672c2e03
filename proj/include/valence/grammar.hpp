#ifndef VALENCE_GRAMMAR_HPP_
#define VALENCE_GRAMMAR_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "valence/automata.hpp"
#include "valence/finite_monoid.hpp"
#include "valence/monoid.hpp"

namespace valence {

  struct ValenceRule {
    Symbol        lhs = 'S';
    Word          rhs;
    MonoidElement valence;

    bool operator==(ValenceRule const&) const = default;
  };

  // Context-free grammar whose rules carry valences. Nonterminals and
  // terminals are single symbols; a derivation succeeds when the product of
  // the valences, in the order the rules were applied, is 1.
  struct ValenceGrammar {
    MonoidDescriptor         monoid;
    std::string              nonterminals;
    std::string              terminals;
    std::vector<ValenceRule> rules;
    Symbol                   start = 'S';

    bool operator==(ValenceGrammar const&) const = default;
  };

  void validate(ValenceGrammar const& g);

  enum class DerivationStrategy {
    AllOrders,  // rewrite any nonterminal occurrence
    Leftmost    // rewrite the leftmost one only
  };

  struct DeriveOptions {
    std::size_t                max_steps = 24;
    DerivationStrategy         strategy  = DerivationStrategy::AllOrders;
    std::optional<std::size_t> max_word_length;
    std::size_t                max_forms = 2'000'000;
    // Rules of interest: words with a successful derivation through at
    // least one of them are collected in `marked_words`.
    std::function<bool(ValenceRule const&)> marked;
  };

  struct DerivedLanguage {
    std::set<Word> words;
    std::set<Word> marked_words;
    // Some sentential form was dropped by max_forms; step and length
    // bounds are part of the question asked and do not set this.
    bool truncated = false;
  };

  // Terminal words with a successful derivation of at most max_steps rule
  // applications (and of length at most max_word_length, if set).
  DerivedLanguage derive_language(ValenceGrammar const& g,
                                  DeriveOptions const&  options = {});

  // Over a finite table M: deletes rules valenced in the ideal I and maps
  // the remaining valences to their classes in M / I.
  ValenceGrammar rees_transform(ValenceGrammar const& g, IndexSet const& ideal);

  // Over M^0: deletes zero-valenced rules and un-lifts the rest to M.
  ValenceGrammar zero_eliminate(ValenceGrammar const& g);

  // Distinct rule valences in order of first appearance.
  std::vector<MonoidElement> generated_submonoid(ValenceGrammar const& g);

  // The same grammar over the (finite) submonoid generated by its
  // valences. Throws ResourceError if that submonoid exceeds `limit`.
  ValenceGrammar restrict_to_submonoid(ValenceGrammar const& g,
                                       std::size_t           limit = 4096);

  // Every rule must read A -> uX or A -> u with u terminal. Each rule
  // becomes a chain of transitions spelling u with the valence on its first
  // link; A -> X and A -> ε become single ε-moves.
  bool           is_right_linear(ValenceGrammar const& g);
  ValenceNFA     rightlinear_to_nfa(ValenceGrammar const& g);

  // One nonterminal per state (q -σ/m-> q' gives Q -> σQ' with m, accepting
  // q gives Q -> ε with 1). Throws ResourceError if the states outnumber
  // the symbols available as nonterminals.
  ValenceGrammar nfa_to_rightlinear(ValenceNFA const& m);

  struct IdealUnionQuotient {
    MonoidDescriptor descriptor;  // M itself when simple, else M / I
    IndexSet         ideal_union;
    bool             simple      = false;
    bool             null_square = false;  // non-identity products all 0
    bool             zero_simple = false;
  };

  IdealUnionQuotient ideal_union_quotient(FiniteTable const& table);

}  // namespace valence

#endif  // VALENCE_GRAMMAR_HPP_

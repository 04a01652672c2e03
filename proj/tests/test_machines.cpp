#include <catch_amalgamated.hpp>

#include "generators.hpp"
#include "oracles.hpp"
#include "valence/constructions.hpp"
#include "valence/error.hpp"
#include "valence/finite_monoid.hpp"
#include "valence/interchange.hpp"
#include "valence/io.hpp"
#include "valence/simulate.hpp"

using namespace valence;

namespace {

  MonoidElement z(std::int64_t x) {
    return MonoidElement::vector({x});
  }

  NfaTransition tr(StateId from, char symbol, StateId to, MonoidElement v) {
    return NfaTransition{from, symbol ? OptSymbol(symbol) : std::nullopt, to,
                         std::move(v)};
  }

  template <typename T>
  T load(std::string const& file) {
    auto doc = load_spec(std::string(VALENCE_MACHINES_DIR) + "/" + file);
    return std::get<T>(doc.payload);
  }

  RationalMonoidAutomaton anbn_z() {
    return build_anbn_rma(MonoidDescriptor::free_abelian(1), z(1), z(-1), z(0));
  }

  // a adds 1, b subtracts 1, one accepting state.
  ValenceNFA counting(std::size_t rank = 1) {
    IntVector up(rank, 0), down(rank, 0);
    up[0]   = 1;
    down[0] = -1;
    return make_nfa(MonoidDescriptor::free_abelian(rank), 1, "ab",
                    {tr(0, 'a', 0, up), tr(0, 'b', 0, down)}, 0, {0});
  }

  bool is_anbn(Word const& w) {
    auto n = w.size() / 2;
    return n > 0 && w == Word(n, 'a') + Word(n, 'b');
  }

  std::set<Word> filter(std::string const& alphabet,
                        std::size_t        n,
                        std::function<bool(Word const&)> keep) {
    std::set<Word> out;
    for (auto const& w : oracle::all_words(alphabet, n)) {
      if (keep(w)) {
        out.insert(w);
      }
    }
    return out;
  }

  void check_witness(RationalMonoidAutomaton const& m,
                     InterchangeWitness const&      wit,
                     Word const&                    w,
                     std::size_t                    k) {
    auto const& d = m.core.monoid;
    REQUIRE(wit.blocks.size() == k);
    REQUIRE(wit.sigma.size() == k);
    bool moved = false;
    for (std::size_t i = 0; i < k; ++i) {
      moved |= wit.sigma[i] != i;
    }
    REQUIRE(moved);
    Word joined = wit.lambda;
    for (auto const& b : wit.blocks) {
      joined += b;
    }
    REQUIRE(joined + wit.mu == w);
    REQUIRE(permuted(wit) == wit.permuted_word);
    REQUIRE(wit.permuted_word.size() == w.size());

    std::vector<MonoidElement> original{wit.lambda_product}, swapped{wit.lambda_product};
    for (std::size_t i = 0; i < k; ++i) {
      original.push_back(wit.block_products[i]);
      swapped.push_back(wit.block_products[wit.sigma[i]]);
    }
    original.push_back(wit.mu_product);
    swapped.push_back(wit.mu_product);
    REQUIRE(product_of(d, original) == wit.original_product);
    REQUIRE(product_of(d, swapped) == wit.permuted_product);
    REQUIRE(wit.original_product == wit.permuted_product);
    REQUIRE(wit.permuted_verdict == Verdict::Yes);
    REQUIRE(rma_accepts(m, wit.permuted_word) == Verdict::Yes);
  }

}  // namespace

TEST_CASE("valence NFA acceptance") {
  auto const anbn = anbn_z().core;
  CHECK(nfa_accepts(anbn, "aabb") == Verdict::Yes);
  CHECK(nfa_accepts(anbn, "aab") == Verdict::No);
  CHECK(nfa_accepts(anbn, "") == Verdict::No);
  CHECK_THROWS_AS(nfa_accepts(anbn, "abc"), AlphabetError);

  // Z2 register counting a's modulo 2.
  auto const even = make_nfa(cyclic_group(2), 1, "ab",
                             {tr(0, 'a', 0, MonoidElement::index(1)),
                              tr(0, 'b', 0, MonoidElement::index(0))},
                             0, {0});
  CHECK(nfa_accepts(even, "aa") == Verdict::Yes);
  CHECK(nfa_accepts(even, "a") == Verdict::No);
  CHECK(nfa_accepts(even, "abab") == Verdict::Yes);
}

TEST_CASE("classical NFAs match subset simulation") {
  gen::Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    auto m = gen::random_nfa(rng, trivial_monoid(), 5, "ab", 0.2);
    for (auto const& w : words_up_to("ab", 6)) {
      auto expected = oracle::subset_accepts(m, w) ? Verdict::Yes : Verdict::No;
      REQUIRE(nfa_accepts(m, w) == expected);
    }
  }
}

TEST_CASE("Z registers match exhaustive path arithmetic") {
  gen::Rng rng(43);
  for (int i = 0; i < 60; ++i) {
    auto const rank = gen::uniform(rng, 1, 2);
    auto       m    = gen::random_nfa(rng, MonoidDescriptor::free_abelian(rank), 3, "ab", 0.2);
    Budgets    b;
    b.epsilon = 3;
    for (auto const& w : words_up_to("ab", 4)) {
      auto regs     = oracle::path_registers(m, w, 3);
      auto verdict  = nfa_accepts(m, w, b);
      bool has_zero = regs.count(identity(m.monoid)) > 0;
      REQUIRE(verdict != (has_zero ? Verdict::No : Verdict::Yes));
      if (verdict == Verdict::Yes) {
        REQUIRE(has_zero);
      }
      auto finals = final_registers(m, w, b);
      if (finals.exhaustive) {
        REQUIRE(finals.values == regs);
      }
    }
  }
}

TEST_CASE("rational targets") {
  RationalMonoidAutomaton m{counting()};
  m.initial_set  = RationalExpr::atom(z(0));
  m.terminal_set = RationalExpr::unite({RationalExpr::atom(z(0)), RationalExpr::atom(z(1))});
  CHECK(rma_accepts(m, "ab") == Verdict::Yes);
  CHECK(rma_accepts(m, "aab") == Verdict::Yes);
  CHECK(rma_accepts(m, "abb") == Verdict::No);
  CHECK(rma_accepts(m, "") == Verdict::Yes);

  // Star targets over Z: x0 in (2)*, x0 + x = 0.
  m.initial_set  = RationalExpr::star(RationalExpr::atom(z(2)));
  m.terminal_set = RationalExpr::one();
  CHECK(rma_accepts(m, "bb") == Verdict::Yes);
  CHECK(rma_accepts(m, "b") == Verdict::No);
  CHECK(rma_accepts(m, "a") == Verdict::No);

  // Star-free targets over the bicyclic monoid.
  auto const b = MonoidDescriptor::bicyclic();
  RationalMonoidAutomaton bm{make_nfa(b, 1, "ab",
                                      {tr(0, 'a', 0, MonoidElement::bicyclic(0, 1)),
                                       tr(0, 'b', 0, MonoidElement::bicyclic(1, 0))},
                                      0, {0})};
  bm.terminal_set = RationalExpr::atom(MonoidElement::bicyclic(0, 1));
  CHECK(rma_accepts(bm, "aab") == Verdict::Yes);
  CHECK(rma_accepts(bm, "ab") == Verdict::No);
  CHECK(rma_accepts(bm, "ba") == Verdict::No);
}

TEST_CASE("identity targets reduce to valence acceptance") {
  gen::Rng rng(47);
  for (auto const& [name, d] : gen::descriptor_zoo()) {
    INFO(name);
    for (int i = 0; i < 15; ++i) {
      auto m = gen::random_nfa(rng, d, 3, "ab", 0.15);
      for (auto const& w : words_up_to("ab", 4)) {
        REQUIRE(rma_accepts(RationalMonoidAutomaton{m}, w) == nfa_accepts(m, w));
      }
    }
  }
}

TEST_CASE("zero valences never reach acceptance") {
  gen::Rng rng(53);
  std::vector<MonoidDescriptor> ds{
      MonoidDescriptor::polycyclic("ab"),
      MonoidDescriptor::zero_adjoined(MonoidDescriptor::free_abelian(1)),
      MonoidDescriptor::zero_adjoined(cyclic_group(2))};
  for (auto const& d : ds) {
    for (int i = 0; i < 30; ++i) {
      auto m      = gen::random_nfa(rng, d, 4, "ab", 0.15);
      auto pruned = m;
      std::erase_if(pruned.transitions,
                    [&](auto const& t) { return is_zero(d, t.valence); });
      for (auto const& w : words_up_to("ab", 5)) {
        auto a = nfa_accepts(m, w), b = nfa_accepts(pruned, w);
        if (a != Verdict::Undetermined && b != Verdict::Undetermined) {
          REQUIRE(a == b);
        }
      }
    }
  }
}

TEST_CASE("enumeration") {
  auto sample = enumerate_language(anbn_z(), 8);
  CHECK(sample.words == std::set<Word>{"ab", "aabb", "aaabbb", "aaaabbbb"});
  CHECK_FALSE(sample.any_undetermined());

  auto none = make_nfa(trivial_monoid(), 2, "ab", {tr(0, 'a', 1, TableIndex{0})}, 0, {});
  CHECK(enumerate_language(none, 6).words.empty());

  CHECK(words_up_to("ab", 2) == std::vector<Word>{"", "a", "b", "aa", "ab", "ba", "bb"});

  auto brackets = pda_to_valence_nfa(load<ValencePDA>("brackets_pda.json"));
  CHECK(enumerate_language(brackets, 4).words
        == std::set<Word>{"", "()", "(())", "()()"});
}

TEST_CASE("finite monoid automata become classical NFAs") {
  // Parity of a over Z2; target: odd.
  RationalMonoidAutomaton m{make_nfa(cyclic_group(2), 2, "ab",
                                     {tr(0, 'a', 0, MonoidElement::index(1)),
                                      tr(0, 'b', 1, MonoidElement::index(0)),
                                      tr(1, 'b', 1, MonoidElement::index(0))},
                                     0, {0, 1})};
  m.terminal_set = RationalExpr::atom(MonoidElement::index(1));
  auto n         = finite_rational_to_nfa(m);
  CHECK(n.states.size() == 4);
  CHECK(n.monoid == trivial_monoid());
  for (auto const& w : words_up_to("ab", 10)) {
    auto odd = std::count(w.begin(), w.end(), 'a') % 2 == 1;
    bool ok  = odd && w.find("ba") == Word::npos;
    REQUIRE(nfa_accepts(n, w) == (ok ? Verdict::Yes : Verdict::No));
    REQUIRE(rma_accepts(m, w) == (ok ? Verdict::Yes : Verdict::No));
  }

  m.terminal_set = RationalExpr::empty();
  CHECK(finite_rational_to_nfa(m).accepting.empty());

  gen::Rng rng(1);
  auto     classical = gen::random_nfa(rng, trivial_monoid(), 4, "ab", 0.2);
  auto same      = finite_rational_to_nfa(RationalMonoidAutomaton{classical});
  CHECK(same.states.size() == classical.states.size());
  CHECK(same.transitions.size() == classical.transitions.size());
  CHECK(same.accepting == classical.accepting);
}

TEST_CASE("random finite monoid automata agree with their NFAs") {
  gen::Rng rng(59);
  for (int i = 0; i < 25; ++i) {
    MonoidDescriptor const d(gen::random_finite_monoid(rng, 5));
    auto m = gen::random_rma(rng, d, 4);
    auto n = finite_rational_to_nfa(m);
    for (auto const& w : words_up_to("ab", 7)) {
      REQUIRE(rma_accepts(m, w) == nfa_accepts(n, w));
    }
  }
}

TEST_CASE("regular automata as rational monoid automata") {
  auto one = make_nfa(trivial_monoid(), 1, "a", {}, 0, {0});
  auto r   = regular_to_rma(one, MonoidDescriptor::free_abelian(2));
  CHECK(r.core.monoid == MonoidDescriptor::free_abelian(2));
  CHECK(enumerate_language(r, 3).words == std::set<Word>{""});

  gen::Rng rng(61);
  for (int i = 0; i < 50; ++i) {
    auto m = gen::random_nfa(rng, trivial_monoid(), 4, "ab", 0.2);
    auto r2 = regular_to_rma(m);
    for (auto const& w : words_up_to("ab", 10)) {
      REQUIRE((rma_accepts(r2, w) == Verdict::Yes) == oracle::subset_accepts(m, w));
    }
  }

  auto empty = make_nfa(trivial_monoid(), 1, "ab", {}, 0, {});
  CHECK(enumerate_language(regular_to_rma(empty), 5).words.empty());
  CHECK_THROWS_AS(regular_to_rma(counting()), StructuralError);
}

TEST_CASE("anbn construction") {
  auto sample = enumerate_language(anbn_z(), 12);
  CHECK(sample.words == filter("ab", 12, is_anbn));
  CHECK(sample.words.size() == 6);

  auto z2 = build_anbn_rma(MonoidDescriptor::free_abelian(2), MonoidElement::vector({1, -1}),
                           MonoidElement::vector({-1, 1}), MonoidElement::vector({0, 0}));
  CHECK(enumerate_language(z2, 8).words == filter("ab", 8, is_anbn));

  CHECK_THROWS_AS(build_anbn_rma(MonoidDescriptor::bicyclic(), MonoidElement::bicyclic(0, 1),
                                 MonoidElement::bicyclic(1, 0), MonoidElement::bicyclic(0, 0)),
                  AlgebraError);
  CHECK_THROWS_AS(build_anbn_rma(cyclic_group(2), MonoidElement::index(1),
                                 MonoidElement::index(1), MonoidElement::index(0)),
                  AlgebraError);
  CHECK_THROWS_AS(build_anbn_rma(MonoidDescriptor::free_abelian(1), z(1), z(1), z(0)),
                  AlgebraError);
}

TEST_CASE("pushdown acceptance") {
  auto anbn = load<ValencePDA>("anbn_pda.json");
  CHECK(pda_accepts(anbn, "aabb") == Verdict::Yes);
  CHECK(pda_accepts(anbn, "aba") == Verdict::No);
  CHECK(pda_accepts(anbn, "") == Verdict::No);

  auto abc = load<ValencePDA>("anbncn_pda_z.json");
  for (auto const& w : words_up_to("abc", 6)) {
    auto n  = w.size() / 3;
    bool ok = n > 0 && w == Word(n, 'a') + Word(n, 'b') + Word(n, 'c');
    REQUIRE(pda_accepts(abc, w) == (ok ? Verdict::Yes : Verdict::No));
  }
  CHECK(pda_accepts(abc, "aaabbbccc") == Verdict::Yes);
}

TEST_CASE("pushdown acceptance matches direct simulation") {
  gen::Rng rng(67);
  for (int i = 0; i < 40; ++i) {
    auto const n = gen::uniform(rng, 1, 3);
    std::vector<PdaTransition> ts;
    for (auto j = gen::uniform(rng, 2, 6); j > 0; --j) {
      auto opt = [&](std::string const& s) {
        return gen::coin(rng, 0.4) ? std::nullopt
                                   : OptSymbol(s[gen::uniform(rng, 0, s.size() - 1)]);
      };
      ts.push_back(PdaTransition{gen::uniform(rng, 0, n - 1), opt("ab"), opt("XY"),
                                 gen::uniform(rng, 0, n - 1), opt("XY"), TableIndex{0}});
    }
    auto p = make_pda(trivial_monoid(), n, "ab", "XY", ts, 0, {n - 1});
    Budgets b;
    b.stack_depth = 6;
    for (auto const& w : words_up_to("ab", 5)) {
      auto v = pda_accepts(p, w, b);
      if (v != Verdict::Undetermined) {
        REQUIRE((v == Verdict::Yes) == oracle::pda_accepts_trivial(p, w, 6));
      }
    }
  }
}

TEST_CASE("pushdown to valence automaton") {
  auto anbn = load<ValencePDA>("anbn_pda.json");
  auto n    = pda_to_valence_nfa(anbn);
  CHECK(n.monoid == MonoidDescriptor::product(p2(), anbn.monoid));
  CHECK(enumerate_language(n, 10).words == filter("ab", 10, is_anbn));
  // The push move reads a with empty pop: <("", code(A)), 1>.
  CHECK(n.transitions[0].valence
        == MonoidElement::pair(MonoidElement::pop_push("", "a"), TableIndex{0}));

  auto bare = make_pda(trivial_monoid(), 2, "ab", "X", {}, 0, {1});
  CHECK(pda_to_valence_nfa(bare).transitions.empty());
}

TEST_CASE("valence automaton to pushdown") {
  auto const d = MonoidDescriptor::product(MonoidDescriptor::polycyclic("ab"),
                                           MonoidDescriptor::free_abelian(1));
  auto m = make_nfa(d, 2, "x",
                    {tr(0, 'x', 1, MonoidElement::pair(MonoidElement::pop_push("ab", "a"), z(5))),
                     tr(1, 'x', 0, MonoidElement::pair(MonoidElement::pop_push("", ""), z(-1))),
                     tr(1, 'x', 1, MonoidElement::pair(MonoidElement::zero(), z(0)))},
                    0, {1});
  auto p = valence_nfa_to_pda(m);
  REQUIRE(p.states.size() == 5);
  REQUIRE(p.transitions.size() == 5);
  auto const& t = p.transitions;
  CHECK(t[0].from == 0);
  CHECK(t[0].symbol == OptSymbol('x'));
  CHECK(t[0].pop == OptSymbol('b'));
  CHECK(t[0].valence == z(5));
  CHECK(t[1].symbol == std::nullopt);
  CHECK(t[1].pop == OptSymbol('a'));
  CHECK(t[1].valence == z(0));
  CHECK(t[2].push == OptSymbol('a'));
  CHECK(t[3].to == 1);
  CHECK(t[3].symbol == std::nullopt);
  // The identity stack part copies the move.
  CHECK(t[4] == PdaTransition{1, 'x', std::nullopt, 0, std::nullopt, z(-1)});

  CHECK_THROWS_AS(valence_nfa_to_pda(counting()), StructuralError);
}

TEST_CASE("pushdown round trips preserve the language") {
  for (auto file : {"anbn_pda.json", "brackets_pda.json", "anbncn_pda_z.json"}) {
    INFO(file);
    auto p     = load<ValencePDA>(file);
    auto n     = pda_to_valence_nfa(p);
    auto back  = valence_nfa_to_pda(n);
    auto lp    = enumerate_language(p, 8);
    auto ln    = enumerate_language(n, 8);
    auto lback = enumerate_language(back, 8);
    CHECK_FALSE(lp.any_undetermined());
    CHECK_FALSE(ln.any_undetermined());
    CHECK_FALSE(lback.any_undetermined());
    CHECK(lp.words == ln.words);
    CHECK(lp.words == lback.words);
    CHECK(enumerate_language(pda_to_valence_nfa(back), 8).words == lp.words);
  }
}

TEST_CASE("interchange examples") {
  // (ab)* over Z: q0 -a/+1-> q1 -b/-1-> q0.
  auto abstar = make_nfa(MonoidDescriptor::free_abelian(1), 2, "ab",
                         {tr(0, 'a', 1, z(1)), tr(1, 'b', 0, z(-1))}, 0, {0});
  auto wit = interchange_witness(abstar, "abab", {"a", "b", "a", "b"}, 2);
  CHECK(wit.boundary_state == 0);
  CHECK(wit.blocks == std::vector<Word>{"ab", "ab"});
  CHECK(cycle_notation(wit.sigma) == "(1 2)");
  CHECK(wit.permuted_word == "abab");
  check_witness(RationalMonoidAutomaton{abstar}, wit, "abab", 2);

  auto cnt = interchange_witness(counting(), "abab", {"a", "b", "a", "b"}, 2);
  CHECK(cnt.blocks == std::vector<Word>{"a", "b"});
  CHECK(cnt.permuted_word == "baab");
  check_witness(RationalMonoidAutomaton{counting()}, cnt, "abab", 2);

  auto line = make_nfa(MonoidDescriptor::free_abelian(1), 3, "ab",
                       {tr(0, 'a', 1, z(0)), tr(1, 'b', 2, z(0))}, 0, {2});
  CHECK_THROWS_WITH(interchange_witness(line, "ab", {"a", "b"}, 2),
                    Catch::Matchers::StartsWith("no repeated boundary state"));
  CHECK_THROWS_WITH(interchange_witness(counting(), "aa", {"a", "a"}, 2),
                    Catch::Matchers::StartsWith("no successful computation"));
  CHECK_THROWS_AS(interchange_witness(counting(), "ab", {"a", "", "b"}, 2), StructuralError);
  CHECK_THROWS_AS(interchange_witness(counting(), "ab", {"b", "a"}, 2), StructuralError);
  CHECK_THROWS_AS(interchange_witness(counting(), "ab", {"a", "b"}, 1), StructuralError);

  CHECK(cycle_notation({0, 1, 2}) == "()");
  CHECK(cycle_notation({1, 0, 3, 2}) == "(1 2)(3 4)");
  CHECK(cycle_notation({1, 2, 0}) == "(1 2 3)");
}

TEST_CASE("interchange witnesses are sound") {
  gen::Rng rng(71);
  int      found = 0;
  for (int i = 0; i < 60; ++i) {
    auto rank = gen::uniform(rng, 1, 2);
    auto m    = gen::random_nfa(rng, MonoidDescriptor::free_abelian(rank), 3, "ab", 0.0);
    auto lang = enumerate_language(m, 8);
    for (auto const& w : lang.words) {
      if (w.size() < 2 * m.states.size() || w.size() < 3) {
        continue;
      }
      std::vector<Word> f;
      for (char c : w) {
        f.push_back(Word(1, c));
      }
      try {
        auto wit = interchange_witness(m, w, f, 2);
        check_witness(RationalMonoidAutomaton{m}, wit, w, 2);
        ++found;
      } catch (SearchError const&) {
      }
      break;
    }
  }
  CHECK(found > 5);
}

TEST_CASE("L1 star helpers") {
  CHECK(in_l1star("abaabb"));
  CHECK(in_l1star("aabbab"));
  CHECK(in_l1star(""));
  CHECK_FALSE(in_l1star("aba"));
  CHECK_FALSE(in_l1star("ba"));
  CHECK(l1star_word(3) == "abaabbaaabbb");
  CHECK(l1star_factorization(3) == std::vector<Word>{"a", "baa", "bbaaa", "bbb"});
  Word joined;
  for (auto const& f : l1star_factorization(5)) {
    joined += f;
  }
  CHECK(joined == l1star_word(5));
}

TEST_CASE("L1 star falsification") {
  auto counting_rma = load<RationalMonoidAutomaton>("counting_z.json");
  auto report       = l1star_falsify(counting_rma, 6);
  REQUIRE(report.counterexample);
  auto const& c = *report.counterexample;
  CHECK(c.kind == L1StarCounterexample::Kind::AcceptedOutsider);
  CHECK_FALSE(in_l1star(c.word));
  CHECK(rma_accepts(counting_rma, c.word) == Verdict::Yes);
  REQUIRE(c.witness);
  check_witness(counting_rma, *c.witness, l1star_word(c.ell), c.witness->blocks.size());
  CHECK(report.verdict() == Verdict::Yes);

  auto missing = l1star_falsify(anbn_z(), 6);
  REQUIRE(missing.counterexample);
  CHECK(missing.counterexample->kind == L1StarCounterexample::Kind::MissingWord);
  CHECK(missing.counterexample->word == "abaabb");
  CHECK(std::string(to_string(missing.counterexample->kind)) == "missing-word");

  RationalMonoidAutomaton bicyclic{make_nfa(MonoidDescriptor::bicyclic(), 1, "ab", {}, 0, {0})};
  CHECK_THROWS_AS(l1star_falsify(bicyclic, 4), UnsupportedError);

  // Over a finite non-commutative monoid the loops are taken |M| + 1 at a time.
  auto t2 = transformation_monoid(2, {{1, 0}, {0, 0}});
  RationalMonoidAutomaton finite{make_nfa(t2, 1, "ab",
                                          {tr(0, 'a', 0, MonoidElement::index(0)),
                                           tr(0, 'b', 0, MonoidElement::index(0))},
                                          0, {0})};
  auto fr = l1star_falsify(finite, 5);
  REQUIRE(fr.counterexample);
  CHECK(fr.counterexample->kind == L1StarCounterexample::Kind::AcceptedOutsider);
}

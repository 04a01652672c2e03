#include <catch_amalgamated.hpp>

#include "generators.hpp"
#include "oracles.hpp"
#include "valence/error.hpp"
#include "valence/finite_monoid.hpp"
#include "valence/monoid.hpp"

using namespace valence;

namespace {

  MonoidElement pp(Word pop, Word push) {
    return MonoidElement::pop_push(std::move(pop), std::move(push));
  }

  // Every normal form Q[u]P[v] over `alphabet` with |u| + |v| <= n.
  std::vector<MonoidElement> normal_forms(std::string const& alphabet,
                                          std::size_t        n) {
    std::vector<MonoidElement> out{MonoidElement::zero()};
    for (auto const& u : oracle::all_words(alphabet, n)) {
      for (auto const& v : oracle::all_words(alphabet, n - u.size())) {
        out.push_back(pp(u, v));
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("polycyclic products") {
  auto const d = MonoidDescriptor::polycyclic("ab");
  CHECK(mul(d, pp("", "a"), pp("a", "")) == pp("", ""));
  CHECK(mul(d, pp("", "a"), pp("b", "")) == MonoidElement::zero());
  CHECK(is_identity(d, pp("", "")));
  CHECK(mul(d, pp("b", "ab"), pp("b", "")) == pp("b", "a"));
  CHECK(mul(d, pp("", "a"), pp("ba", "")) == pp("b", ""));
  CHECK(mul(d, MonoidElement::zero(), pp("", "")) == MonoidElement::zero());
}

TEST_CASE("bicyclic products") {
  auto const d = MonoidDescriptor::bicyclic();
  CHECK(mul(d, MonoidElement::bicyclic(1, 2), MonoidElement::bicyclic(1, 3))
        == MonoidElement::bicyclic(1, 4));
  CHECK(mul(d, MonoidElement::bicyclic(0, 1), MonoidElement::bicyclic(3, 0))
        == MonoidElement::bicyclic(2, 0));
}

TEST_CASE("identities and zeros") {
  CHECK(identity(MonoidDescriptor::free_abelian(2)) == MonoidElement::vector({0, 0}));
  auto const z0 = MonoidDescriptor::zero_adjoined(MonoidDescriptor::free_abelian(1));
  CHECK(is_zero(z0, MonoidElement::zero()));
  CHECK_FALSE(is_zero(z0, MonoidElement::lift(MonoidElement::vector({0}))));
  CHECK(is_identity(z0, MonoidElement::lift(MonoidElement::vector({0}))));
  CHECK(is_zero(MonoidDescriptor::polycyclic("ab"), MonoidElement::zero()));
}

TEST_CASE("element validation") {
  CHECK_THROWS_AS(mul(MonoidDescriptor::free_abelian(2), MonoidElement::vector({1}),
                      MonoidElement::vector({1, 2})),
                  StructuralError);
  CHECK_THROWS_AS(check_element(MonoidDescriptor::polycyclic("ab"), pp("c", "")),
                  StructuralError);
  CHECK_FALSE(is_valid(cyclic_group(2), MonoidElement::index(2)));
}

TEST_CASE("associativity and identity laws hold on every class") {
  gen::Rng rng(11);
  for (auto const& [name, d] : gen::descriptor_zoo()) {
    INFO(name);
    auto const one = identity(d);
    for (int i = 0; i < 10000; ++i) {
      auto a = gen::random_element(d, rng);
      auto b = gen::random_element(d, rng);
      auto c = gen::random_element(d, rng);
      REQUIRE(mul(d, mul(d, a, b), c) == mul(d, a, mul(d, b, c)));
      REQUIRE(mul(d, one, a) == a);
      REQUIRE(mul(d, a, one) == a);
    }
  }
}

TEST_CASE("polycyclic multiplication is composition of stack maps") {
  auto const d  = MonoidDescriptor::polycyclic("ab");
  auto const nf = normal_forms("ab", 3);
  for (auto const& x : nf) {
    for (auto const& y : nf) {
      auto const xy = mul(d, x, y);
      for (auto const& s : oracle::all_words("ab", 6)) {
        auto step = oracle::apply_stack_map(x, s);
        auto both = step ? oracle::apply_stack_map(y, *step) : std::nullopt;
        REQUIRE(oracle::apply_stack_map(xy, s) == both);
      }
    }
  }
}

TEST_CASE("bicyclic agrees with the one-letter polycyclic monoid") {
  auto const b = MonoidDescriptor::bicyclic();
  auto const p = MonoidDescriptor::polycyclic("x");
  auto as_pp   = [](MonoidElement const& e) {
    auto [i, j] = e.as<BicyclicPair>();
    return pp(Word(i, 'x'), Word(j, 'x'));
  };
  for (std::uint64_t i = 0; i < 4; ++i) {
    for (std::uint64_t j = 0; j < 4; ++j) {
      for (std::uint64_t k = 0; k < 4; ++k) {
        for (std::uint64_t l = 0; l < 4; ++l) {
          auto x = MonoidElement::bicyclic(i, j);
          auto y = MonoidElement::bicyclic(k, l);
          REQUIRE(as_pp(mul(b, x, y)) == mul(p, as_pp(x), as_pp(y)));
        }
      }
    }
  }
}

TEST_CASE("P2 codes") {
  CHECK(p2_codes("xy") == std::vector<Word>{"a", "b"});
  CHECK(p2_codes("xyz") == std::vector<Word>{"aa", "ab", "ba"});
  CHECK(p2_codes("x") == std::vector<Word>{"a"});
  CHECK(embed_polycyclic_into_p2("xy", pp("x", "y")) == pp("a", "b"));

  auto const p2d = p2();
  auto embed     = [](MonoidElement const& e) {
    return embed_polycyclic_into_p2("xyz", e);
  };
  CHECK(mul(p2d, embed(pp("", "x")), embed(pp("y", ""))) == MonoidElement::zero());
  CHECK(is_identity(p2d, mul(p2d, embed(pp("", "z")), embed(pp("z", "")))));
}

TEST_CASE("the P2 embedding is a homomorphism") {
  auto const d   = MonoidDescriptor::polycyclic("xyz");
  auto const p2d = p2();
  auto const nf  = normal_forms("xyz", 3);
  for (auto const& x : nf) {
    for (auto const& y : nf) {
      auto lhs = embed_polycyclic_into_p2("xyz", mul(d, x, y));
      auto rhs = mul(p2d, embed_polycyclic_into_p2("xyz", x),
                     embed_polycyclic_into_p2("xyz", y));
      REQUIRE(lhs == rhs);
    }
  }
  // The encoded maps act on encoded stacks as the originals act on stacks.
  gen::Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    auto x = gen::random_element(d, rng);
    auto e = embed_polycyclic_into_p2("xyz", x);
    for (auto const& s : oracle::all_words("xyz", 3)) {
      auto direct  = oracle::apply_stack_map(x, s);
      auto encoded = oracle::apply_stack_map(e, encode_p2("xyz", s));
      REQUIRE(encoded == (direct ? std::optional(encode_p2("xyz", *direct))
                                 : std::nullopt));
    }
  }
}

TEST_CASE("periodic elements") {
  auto const z = MonoidDescriptor::free_abelian(2);
  CHECK(is_periodic(z, MonoidElement::vector({0, 0})));
  CHECK_FALSE(is_periodic(z, MonoidElement::vector({1, 0})));
  auto const b = MonoidDescriptor::bicyclic();
  CHECK(is_periodic(b, MonoidElement::bicyclic(2, 2)));
  CHECK_FALSE(is_periodic(b, MonoidElement::bicyclic(1, 2)));
  CHECK(is_periodic(cyclic_group(5), MonoidElement::index(3)));

  // Compare with a direct search for a repeated power.
  auto const d = MonoidDescriptor::polycyclic("ab");
  for (auto const& x : normal_forms("ab", 4)) {
    std::vector<MonoidElement> powers{x};
    bool                       repeats = false;
    for (int i = 0; i < 12 && !repeats; ++i) {
      auto next = mul(d, powers.back(), x);
      repeats   = std::find(powers.begin(), powers.end(), next) != powers.end();
      powers.push_back(next);
    }
    INFO(to_string(d, x));
    REQUIRE(is_periodic(d, x) == repeats);
  }
}

TEST_CASE("dead ends") {
  auto const d = MonoidDescriptor::polycyclic("ab");
  CHECK(is_dead_end(d, MonoidElement::zero()));
  CHECK(is_dead_end(d, pp("", "a")) == false);
  CHECK(is_dead_end(d, pp("a", "")));
  CHECK_FALSE(is_dead_end(MonoidDescriptor::free_abelian(1), MonoidElement::vector({5})));
  auto const nil = MonoidDescriptor(nilpotent_monoid(2));
  CHECK(is_dead_end(nil, MonoidElement::index(1)));
  CHECK_FALSE(is_dead_end(nil, MonoidElement::index(0)));
}

TEST_CASE("cayley tables of finite descriptors") {
  auto const d = MonoidDescriptor::product(cyclic_group(2), nilpotent_monoid(2));
  auto const t = cayley_table(d);
  auto const e = finite_elements(d);
  REQUIRE(t.size == 6);
  for (std::size_t i = 0; i < t.size; ++i) {
    for (std::size_t j = 0; j < t.size; ++j) {
      REQUIRE(e[t.at(i, j)] == mul(d, e[i], e[j]));
    }
  }
  CHECK_THROWS_AS(finite_elements(MonoidDescriptor::bicyclic()), UnsupportedError);
}

#include <catch_amalgamated.hpp>

#include "generators.hpp"
#include "valence/error.hpp"
#include "valence/finite_monoid.hpp"

using namespace valence;

namespace {

  // Two-sided closure of a set under multiplication by anything.
  IndexSet ideal_closure(FiniteTable const& t, IndexSet s) {
    std::set<std::size_t> out(s.begin(), s.end());
    for (bool changed = true; changed;) {
      changed = false;
      for (auto x : std::set<std::size_t>(out)) {
        for (std::size_t m = 0; m < t.size; ++m) {
          changed |= out.insert(t.at(x, m)).second;
          changed |= out.insert(t.at(m, x)).second;
        }
      }
    }
    return {out.begin(), out.end()};
  }

  FiniteTable s3() {
    return transformation_monoid(3, {{1, 2, 0}, {1, 0, 2}});
  }

}  // namespace

TEST_CASE("table constructors") {
  auto z3 = cyclic_group(3);
  CHECK(z3.at(2, 2) == 1);
  auto nil = nilpotent_monoid(2);
  REQUIRE(nil.size == 3);
  CHECK(nil.at(1, 1) == 2);
  CHECK(nil.zero == std::optional<std::size_t>(2));
  CHECK(s3().size == 6);
  CHECK_THROWS_AS(transformation_monoid(3, {{1, 2, 0}, {1, 0, 2}, {0, 0, 1}}, 10),
                  ResourceError);
}

TEST_CASE("permutability examples") {
  CHECK(check_permutability(cyclic_group(4), 2));
  CHECK(check_permutability(nilpotent_monoid(2), 2));
  CHECK_FALSE(check_permutability(s3(), 2));
  CHECK(check_permutability(s3(), 7));
  CHECK_THROWS_AS(check_permutability(s3(), 12, 1000), ResourceError);
}

TEST_CASE("permutability at 2 is commutativity") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& t : gen::all_monoid_tables(n)) {
      bool commutative = true;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          commutative &= t.at(i, j) == t.at(j, i);
        }
      }
      REQUIRE(check_permutability(t, 2) == commutative);
    }
  }
}

TEST_CASE("monoid table enumeration") {
  // Labelled monoids with identity 0: 1, 2 and 11 of them.
  CHECK(gen::all_monoid_tables(1).size() == 1);
  CHECK(gen::all_monoid_tables(2).size() == 2);
  CHECK(gen::all_monoid_tables(3).size() == 11);
}

TEST_CASE("classification examples") {
  auto trivial = classify_finite_monoid(cyclic_group(1));
  CHECK(trivial.simple);
  CHECK(trivial.ideals == std::vector<IndexSet>{{0}});
  CHECK(trivial.idempotents == IndexSet{0});

  auto z2 = classify_finite_monoid(cyclic_group(2));
  CHECK(z2.simple);
  CHECK(z2.completely_simple);
  CHECK(z2.group);
  CHECK(z2.idempotents == IndexSet{0});

  auto nil = classify_finite_monoid(nilpotent_monoid(2));
  CHECK(nil.proper_ideals == std::vector<IndexSet>{{1, 2}, {2}});
  CHECK(nil.proper_ideal_union == IndexSet{1, 2});
  CHECK_FALSE(nil.simple);
  CHECK(nil.zero == std::optional<std::size_t>(2));
  CHECK(nil.idempotents == IndexSet{0, 2});
}

TEST_CASE("ideals agree with a closure oracle") {
  for (auto const& [name, t] : gen::finite_monoid_zoo()) {
    INFO(name);
    auto r = classify_finite_monoid(t);
    REQUIRE(r.ideals_complete);
    std::set<IndexSet> expected;
    for (std::uint64_t mask = 1; mask < (1u << t.size); ++mask) {
      IndexSet s;
      for (std::size_t i = 0; i < t.size; ++i) {
        if (mask >> i & 1) {
          s.push_back(i);
        }
      }
      if (ideal_closure(t, s) == s) {
        expected.insert(s);
        REQUIRE(is_ideal(t, s));
      } else {
        REQUIRE_FALSE(is_ideal(t, s));
      }
    }
    REQUIRE(std::set<IndexSet>(r.ideals.begin(), r.ideals.end()) == expected);
    for (std::size_t a = 0; a < t.size; ++a) {
      REQUIRE(r.principal_ideals[a] == ideal_closure(t, {a}));
    }
    std::set<std::size_t> uni;
    for (auto const& p : r.proper_ideals) {
      REQUIRE(p.size() < t.size);
      uni.insert(p.begin(), p.end());
    }
    REQUIRE(IndexSet(uni.begin(), uni.end()) == r.proper_ideal_union);
    REQUIRE(r.simple == r.proper_ideals.empty());
  }
}

TEST_CASE("Rees quotient examples") {
  auto nil = nilpotent_monoid(2);
  auto q0  = rees_quotient(nil, {2});
  CHECK(q0.as<ReesQuotient>().quotient.size == 3);
  auto q1 = rees_quotient(nil, {1, 2});
  auto const& r = q1.as<ReesQuotient>();
  REQUIRE(r.quotient.size == 2);
  CHECK(r.quotient.at(r.ideal_class, r.ideal_class) == r.ideal_class);
  CHECK(r.class_of[1] == r.class_of[2]);
  CHECK_THROWS_AS(rees_quotient(nil, {0, 1, 2}), InvalidIdealError);
  CHECK_THROWS_AS(rees_quotient(nil, {1}), InvalidIdealError);
  CHECK_THROWS_AS(rees_quotient(nil, {}), InvalidIdealError);
}

TEST_CASE("Rees quotients respect the congruence") {
  for (auto const& [name, t] : gen::finite_monoid_zoo()) {
    for (auto const& ideal : classify_finite_monoid(t).proper_ideals) {
      INFO(name);
      auto const  q = rees_quotient(t, ideal);
      auto const& r = q.as<ReesQuotient>();
      for (std::size_t a = 0; a < t.size; ++a) {
        for (std::size_t b = 0; b < t.size; ++b) {
          REQUIRE(r.class_of[t.at(a, b)]
                  == r.quotient.at(r.class_of[a], r.class_of[b]));
        }
        bool in_ideal = std::binary_search(ideal.begin(), ideal.end(), a);
        REQUIRE((r.class_of[a] == r.ideal_class) == in_ideal);
      }
    }
  }
}

TEST_CASE("Green's classes partition the monoid") {
  gen::Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    auto t = gen::random_finite_monoid(rng, 10);
    auto r = classify_finite_monoid(t);
    for (auto const* classes : {&r.r_classes, &r.l_classes, &r.h_classes}) {
      std::size_t total = 0;
      for (auto const& c : *classes) {
        total += c.size();
      }
      REQUIRE(total == t.size);
    }
    for (auto e : r.idempotents) {
      REQUIRE(t.at(e, e) == e);
    }
  }
}

TEST_CASE("submonoid closure") {
  auto z3  = MonoidDescriptor(cyclic_group(3));
  auto sub = submonoid_closure(z3, {MonoidElement::index(1)});
  CHECK(sub.table.size == 3);
  auto zero = submonoid_closure(MonoidDescriptor::free_abelian(1), {});
  CHECK(zero.table.size == 1);
  CHECK_THROWS_AS(submonoid_closure(MonoidDescriptor::free_abelian(1),
                                    {MonoidElement::vector({1})}, 50),
                  ResourceError);
}

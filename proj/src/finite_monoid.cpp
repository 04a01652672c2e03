#include "valence/finite_monoid.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "valence/error.hpp"

namespace valence {

  namespace {

    IndexSet to_index_set(std::set<std::size_t> const& s) {
      return IndexSet(s.begin(), s.end());
    }

    IndexSet right_ideal(FiniteTable const& t, std::size_t a) {
      std::set<std::size_t> out;
      for (std::size_t x = 0; x < t.size; ++x) {
        out.insert(t.at(a, x));
      }
      return to_index_set(out);
    }

    IndexSet left_ideal(FiniteTable const& t, std::size_t a) {
      std::set<std::size_t> out;
      for (std::size_t x = 0; x < t.size; ++x) {
        out.insert(t.at(x, a));
      }
      return to_index_set(out);
    }

    IndexSet two_sided_ideal(FiniteTable const& t, std::size_t a) {
      std::set<std::size_t> out;
      for (std::size_t x = 0; x < t.size; ++x) {
        auto xa = t.at(x, a);
        for (std::size_t y = 0; y < t.size; ++y) {
          out.insert(t.at(xa, y));
        }
      }
      return to_index_set(out);
    }

    IndexSet set_union(IndexSet const& a, IndexSet const& b) {
      IndexSet out;
      std::set_union(
          a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
      return out;
    }

    // Groups indices by equal key.
    template <typename Key>
    std::vector<IndexSet> classes_by(std::vector<Key> const& keys) {
      std::map<Key, IndexSet> groups;
      for (std::size_t i = 0; i < keys.size(); ++i) {
        groups[keys[i]].push_back(i);
      }
      std::vector<IndexSet> out;
      for (auto& [k, v] : groups) {
        out.push_back(std::move(v));
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    std::optional<std::size_t> detect_zero(FiniteTable const& t) {
      for (std::size_t z = 0; z < t.size; ++z) {
        bool absorbing = true;
        for (std::size_t x = 0; x < t.size && absorbing; ++x) {
          absorbing = t.at(z, x) == z && t.at(x, z) == z;
        }
        if (absorbing) {
          return z;
        }
      }
      return std::nullopt;
    }

  }  // namespace

  FiniteTable cyclic_group(std::size_t n) {
    if (n == 0) {
      throw StructuralError("cyclic group order must be positive");
    }
    FiniteTable t;
    t.size = n;
    t.table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        t.table[a * n + b] = (a + b) % n;
      }
    }
    t.identity = 0;
    if (n == 1) {
      t.zero = 0;
    }
    return t;
  }

  FiniteTable nilpotent_monoid(std::size_t k) {
    if (k < 1) {
      throw StructuralError("nilpotency index must be positive");
    }
    // Index 0 = 1, index i = a^i for 1 <= i < k, index k = 0.
    FiniteTable t;
    t.size = k + 1;
    t.table.resize(t.size * t.size);
    for (std::size_t a = 0; a <= k; ++a) {
      for (std::size_t b = 0; b <= k; ++b) {
        t.table[a * t.size + b] = std::min(a + b, k);
      }
    }
    t.identity = 0;
    t.zero     = k;
    t.names.push_back("1");
    for (std::size_t i = 1; i < k; ++i) {
      t.names.push_back(i == 1 ? "a" : "a" + std::to_string(i));
    }
    t.names.push_back("0");
    return t;
  }

  FiniteTable transformation_monoid(
      std::size_t                                  degree,
      std::vector<std::vector<std::size_t>> const& generators,
      std::size_t                                  limit) {
    using Map = std::vector<std::size_t>;
    for (auto const& g : generators) {
      if (g.size() != degree
          || std::any_of(
              g.begin(), g.end(), [degree](auto x) { return x >= degree; })) {
        throw StructuralError("generator is not a map on the given degree");
      }
    }
    Map id(degree);
    std::iota(id.begin(), id.end(), 0);
    auto compose = [](Map const& f, Map const& g) {
      Map out(f.size());
      for (std::size_t x = 0; x < f.size(); ++x) {
        out[x] = g[f[x]];
      }
      return out;
    };
    std::vector<Map>           elems{id};
    std::map<Map, std::size_t> pos{{id, 0}};
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (auto const& g : generators) {
        auto next = compose(elems[i], g);
        if (pos.emplace(next, elems.size()).second) {
          elems.push_back(next);
          if (elems.size() > limit) {
            throw ResourceError("transformation monoid exceeds "
                                + std::to_string(limit) + " elements");
          }
        }
      }
    }
    FiniteTable t;
    t.size = elems.size();
    t.table.resize(t.size * t.size);
    for (std::size_t a = 0; a < t.size; ++a) {
      for (std::size_t b = 0; b < t.size; ++b) {
        t.table[a * t.size + b] = pos.at(compose(elems[a], elems[b]));
      }
    }
    t.identity = 0;
    t.zero     = detect_zero(t);
    return t;
  }

  SubmonoidTable submonoid_closure(MonoidDescriptor const&            desc,
                                   std::vector<MonoidElement> const& generators,
                                   std::size_t                       limit) {
    for (auto const& g : generators) {
      check_element(desc, g, "generator");
    }
    std::vector<MonoidElement>           elems{identity(desc)};
    std::map<MonoidElement, std::size_t> pos{{elems[0], 0}};
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (auto const& g : generators) {
        auto next = mul(desc, elems[i], g);
        if (pos.emplace(next, elems.size()).second) {
          elems.push_back(next);
          if (elems.size() > limit) {
            throw ResourceError("submonoid closure exceeds "
                                + std::to_string(limit) + " elements");
          }
        }
      }
    }
    SubmonoidTable out;
    out.table.size = elems.size();
    out.table.table.resize(elems.size() * elems.size());
    for (std::size_t a = 0; a < elems.size(); ++a) {
      for (std::size_t b = 0; b < elems.size(); ++b) {
        out.table.table[a * elems.size() + b]
            = pos.at(mul(desc, elems[a], elems[b]));
      }
    }
    out.table.identity = 0;
    out.table.zero     = detect_zero(out.table);
    for (auto const& e : elems) {
      out.table.names.push_back(to_string(desc, e));
    }
    if (std::set<std::string>(out.table.names.begin(), out.table.names.end())
            .size()
        != elems.size()) {
      out.table.names.clear();
    }
    out.elements = std::move(elems);
    return out;
  }

  bool check_permutability(FiniteTable const& table,
                           std::size_t        n,
                           std::uint64_t      tuple_limit) {
    if (n < 2) {
      throw StructuralError("permutability degree must be at least 2");
    }
    std::uint64_t tuples = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (tuples > tuple_limit / table.size + 1) {
        tuples = tuple_limit + 1;
        break;
      }
      tuples *= table.size;
    }
    if (tuples > tuple_limit) {
      throw ResourceError("permutability check needs " + std::to_string(n)
                          + "-tuples over " + std::to_string(table.size)
                          + " elements, exceeding the limit of "
                          + std::to_string(tuple_limit) + " tuples");
    }
    auto product = [&table](std::vector<std::size_t> const& s,
                            std::vector<std::size_t> const& order) {
      std::size_t acc = table.identity;
      for (auto i : order) {
        acc = table.at(acc, s[i]);
      }
      return acc;
    };
    std::vector<std::size_t> tuple(n, 0);
    std::vector<std::size_t> order(n);
    while (true) {
      // A repeated entry gives a transposition fixing the sequence.
      std::vector<std::size_t> sorted = tuple;
      std::sort(sorted.begin(), sorted.end());
      bool ok = std::adjacent_find(sorted.begin(), sorted.end())
                != sorted.end();
      if (!ok) {
        std::iota(order.begin(), order.end(), 0);
        auto const target = product(tuple, order);
        while (!ok && std::next_permutation(order.begin(), order.end())) {
          ok = product(tuple, order) == target;
        }
      }
      if (!ok) {
        return false;
      }
      std::size_t k = 0;
      while (k < n && ++tuple[k] == table.size) {
        tuple[k++] = 0;
      }
      if (k == n) {
        return true;
      }
    }
  }

  bool is_ideal(FiniteTable const& t, IndexSet const& subset) {
    if (subset.empty()) {
      return false;
    }
    std::vector<bool> in(t.size, false);
    for (auto i : subset) {
      if (i >= t.size) {
        return false;
      }
      in[i] = true;
    }
    for (auto i : subset) {
      for (std::size_t s = 0; s < t.size; ++s) {
        if (!in[t.at(s, i)] || !in[t.at(i, s)]) {
          return false;
        }
      }
    }
    return true;
  }

  StructureReport classify_finite_monoid(FiniteTable const& t) {
    StructureReport r;
    r.size = t.size;
    r.zero = detect_zero(t);

    r.commutative = true;
    for (std::size_t a = 0; a < t.size; ++a) {
      for (std::size_t b = 0; b < t.size; ++b) {
        r.commutative = r.commutative && t.at(a, b) == t.at(b, a);
      }
      if (t.at(a, a) == a) {
        r.idempotents.push_back(a);
      }
    }
    r.group = r.idempotents.size() == 1;  // finite monoid with E = {1}

    IndexSet whole(t.size);
    std::iota(whole.begin(), whole.end(), 0);

    std::set<IndexSet> principal;
    for (std::size_t a = 0; a < t.size; ++a) {
      r.principal_ideals.push_back(two_sided_ideal(t, a));
      principal.insert(r.principal_ideals.back());
    }

    // Every ideal is a union of principal ideals; close under union.
    std::set<IndexSet>   ideals(principal.begin(), principal.end());
    std::deque<IndexSet> todo(principal.begin(), principal.end());
    while (!todo.empty() && r.ideals_complete) {
      auto current = todo.front();
      todo.pop_front();
      for (auto const& p : principal) {
        auto u = set_union(current, p);
        if (ideals.insert(u).second) {
          todo.push_back(u);
          if (ideals.size() > kIdealEnumerationLimit) {
            r.ideals_complete = false;
            break;
          }
        }
      }
    }
    r.ideals.assign(ideals.begin(), ideals.end());
    for (auto const& i : r.ideals) {
      if (i != whole) {
        r.proper_ideals.push_back(i);
      }
    }
    // The union of all proper ideals is the union of proper principal ones.
    for (auto const& p : principal) {
      if (p != whole) {
        r.proper_ideal_union = set_union(r.proper_ideal_union, p);
      }
    }

    r.simple = r.proper_ideal_union.empty();
    if (r.zero) {
      IndexSet zero_only{*r.zero};
      bool     only_zero_and_whole = std::all_of(
          r.ideals.begin(), r.ideals.end(), [&](IndexSet const& i) {
            return i == zero_only || i == whole;
          });
      bool square_is_zero = true;
      for (auto v : t.table) {
        square_is_zero = square_is_zero && v == *r.zero;
      }
      r.zero_simple = r.ideals_complete && only_zero_and_whole && !square_is_zero;
    }

    for (auto e : r.idempotents) {
      if (r.zero && e == *r.zero) {
        continue;
      }
      bool primitive = true;
      for (auto f : r.idempotents) {
        if (r.zero && f == *r.zero) {
          continue;
        }
        if (t.at(e, f) == f && t.at(f, e) == f && e != f) {
          primitive = false;
        }
      }
      if (primitive) {
        r.primitive_idempotents.push_back(e);
      }
    }
    r.completely_simple = r.simple && !r.primitive_idempotents.empty();
    r.completely_zero_simple
        = r.zero_simple && !r.primitive_idempotents.empty();

    std::vector<IndexSet>                      rkeys, lkeys;
    std::vector<std::pair<IndexSet, IndexSet>> hkeys;
    for (std::size_t a = 0; a < t.size; ++a) {
      rkeys.push_back(right_ideal(t, a));
      lkeys.push_back(left_ideal(t, a));
      hkeys.emplace_back(rkeys.back(), lkeys.back());
    }
    r.r_classes = classes_by(rkeys);
    r.l_classes = classes_by(lkeys);
    r.h_classes = classes_by(hkeys);
    for (auto e : r.idempotents) {
      for (auto const& h : r.h_classes) {
        if (std::binary_search(h.begin(), h.end(), e)) {
          r.maximal_subgroups.push_back({e, h});
        }
      }
    }
    return r;
  }

  MonoidDescriptor rees_quotient(FiniteTable const& t, IndexSet ideal) {
    std::sort(ideal.begin(), ideal.end());
    ideal.erase(std::unique(ideal.begin(), ideal.end()), ideal.end());
    if (ideal.empty()) {
      throw InvalidIdealError("ideal must be nonempty");
    }
    if (ideal.back() >= t.size) {
      throw InvalidIdealError("ideal contains an index outside the monoid");
    }
    if (std::binary_search(ideal.begin(), ideal.end(), t.identity)) {
      throw InvalidIdealError(
          "ideal contains the identity, so it is not a proper ideal");
    }
    if (!is_ideal(t, ideal)) {
      throw InvalidIdealError("subset is not closed under multiplication "
                              "by monoid elements on both sides");
    }
    ReesQuotient r;
    r.base  = t;
    r.ideal = ideal;
    r.class_of.assign(t.size, 0);
    bool ideal_seen = false;
    for (std::size_t x = 0; x < t.size; ++x) {
      if (std::binary_search(ideal.begin(), ideal.end(), x)) {
        if (!ideal_seen) {
          ideal_seen    = true;
          r.ideal_class = r.representative.size();
          r.representative.push_back(x);
        }
        r.class_of[x] = r.ideal_class;
      } else {
        r.class_of[x] = r.representative.size();
        r.representative.push_back(x);
      }
    }
    auto& q = r.quotient;
    q.size  = r.representative.size();
    q.table.resize(q.size * q.size);
    for (std::size_t a = 0; a < q.size; ++a) {
      for (std::size_t b = 0; b < q.size; ++b) {
        q.table[a * q.size + b]
            = r.class_of[t.at(r.representative[a], r.representative[b])];
      }
    }
    q.identity = r.class_of[t.identity];
    q.zero     = r.ideal_class;
    if (!t.names.empty()) {
      for (std::size_t c = 0; c < q.size; ++c) {
        q.names.push_back(c == r.ideal_class ? std::string("I")
                                             : t.names[r.representative[c]]);
      }
      if (std::set<std::string>(q.names.begin(), q.names.end()).size()
          != q.size) {
        q.names.clear();
      }
    }
    return r;
  }

}  // namespace valence

#include "valence/monoid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "valence/error.hpp"
#include "valence/finite_monoid.hpp"

namespace valence {

  namespace {

    template <typename... Ts>
    struct overloaded : Ts... {
      using Ts::operator()...;
    };
    template <typename... Ts>
    overloaded(Ts...) -> overloaded<Ts...>;

    [[noreturn]] void mismatch(MonoidDescriptor const& desc,
                               std::string const&      what) {
      throw StructuralError("element does not belong to " + describe(desc)
                            + ": " + what);
    }

    bool ends_with(Word const& w, Word const& suffix) {
      return w.size() >= suffix.size()
             && std::equal(suffix.rbegin(), suffix.rend(), w.rbegin());
    }

    void hash_combine(std::size_t& seed, std::size_t v) noexcept {
      seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    }

    void validate_table(FiniteTable const& t, std::string const& where) {
      auto fail = [&where](std::string const& msg) {
        throw StructuralError(where + ": " + msg);
      };
      if (t.size == 0) {
        fail("finite table must have at least one element");
      }
      if (t.table.size() != t.size * t.size) {
        fail("table must have size*size entries");
      }
      for (auto v : t.table) {
        if (v >= t.size) {
          fail("table entry " + std::to_string(v) + " is not a valid index");
        }
      }
      if (t.identity >= t.size) {
        fail("identity index out of range");
      }
      for (std::size_t x = 0; x < t.size; ++x) {
        if (t.at(t.identity, x) != x || t.at(x, t.identity) != x) {
          fail("identity row/column does not act as identity at "
               + std::to_string(x));
        }
      }
      if (t.zero) {
        if (*t.zero >= t.size) {
          fail("zero index out of range");
        }
        for (std::size_t x = 0; x < t.size; ++x) {
          if (t.at(*t.zero, x) != *t.zero || t.at(x, *t.zero) != *t.zero) {
            fail("zero row/column does not absorb at " + std::to_string(x));
          }
        }
      }
      for (std::size_t a = 0; a < t.size; ++a) {
        for (std::size_t b = 0; b < t.size; ++b) {
          for (std::size_t c = 0; c < t.size; ++c) {
            if (t.at(t.at(a, b), c) != t.at(a, t.at(b, c))) {
              fail("table is not associative at (" + std::to_string(a) + ","
                   + std::to_string(b) + "," + std::to_string(c) + ")");
            }
          }
        }
      }
      if (!t.names.empty()) {
        if (t.names.size() != t.size) {
          fail("names must be empty or one per element");
        }
        std::set<std::string> seen(t.names.begin(), t.names.end());
        if (seen.size() != t.names.size()) {
          fail("element names must be distinct");
        }
      }
    }

    MonoidElement const& left_of(MonoidElement const& e) {
      return *e.as<ElementPair>().left;
    }
    MonoidElement const& right_of(MonoidElement const& e) {
      return *e.as<ElementPair>().right;
    }

    std::size_t index_of(MonoidDescriptor const& desc, MonoidElement const& e) {
      if (!e.is<TableIndex>()) {
        mismatch(desc, "expected a table index");
      }
      return e.as<TableIndex>().index;
    }

  }  // namespace

  MonoidDescriptor trivial_monoid() {
    return FiniteTable{1, {0}, 0, std::nullopt, {}};
  }

  std::string describe(MonoidDescriptor const& desc) {
    return std::visit(
        overloaded{
            [](FreeAbelian const& m) {
              return m.rank == 1 ? std::string("Z")
                                 : "Z^" + std::to_string(m.rank);
            },
            [](Bicyclic const&) { return std::string("B"); },
            [](Polycyclic const& m) { return "P(" + m.alphabet + ")"; },
            [](FiniteTable const& m) {
              return "finite(" + std::to_string(m.size) + ")";
            },
            [](Product const& m) {
              return describe(*m.left) + " x " + describe(*m.right);
            },
            [](ReesQuotient const& m) {
              return "finite(" + std::to_string(m.base.size) + ")/I";
            },
            [](ZeroAdjoined const& m) {
              return "(" + describe(*m.base) + ")^0";
            }},
        desc.value);
  }

  std::size_t hash_value(MonoidElement const& e) noexcept {
    std::size_t seed = e.value.index();
    std::visit(overloaded{[&](IntVector const& v) {
                            for (auto x : v) {
                              hash_combine(seed, std::hash<std::int64_t>{}(x));
                            }
                          },
                          [&](PopPush const& p) {
                            hash_combine(seed, std::hash<Word>{}(p.pop));
                            hash_combine(seed, std::hash<Word>{}(p.push));
                          },
                          [&](BicyclicPair const& p) {
                            hash_combine(seed, p.pops);
                            hash_combine(seed, p.pushes);
                          },
                          [&](TableIndex const& i) {
                            hash_combine(seed, i.index);
                          },
                          [&](ElementPair const& p) {
                            hash_combine(seed, hash_value(*p.left));
                            hash_combine(seed, hash_value(*p.right));
                          },
                          [&](Lifted const& l) {
                            hash_combine(seed, hash_value(*l.inner));
                          },
                          [](Zero const&) {}},
               e.value);
    return seed;
  }

  std::string to_string(MonoidDescriptor const& desc, MonoidElement const& e) {
    if (!is_valid(desc, e)) {
      return "<invalid>";
    }
    std::ostringstream out;
    std::visit(
        overloaded{
            [&](FreeAbelian const&) {
              auto const& v = e.as<IntVector>();
              out << '(';
              for (std::size_t i = 0; i < v.size(); ++i) {
                out << (i ? "," : "") << v[i];
              }
              out << ')';
            },
            [&](Bicyclic const&) {
              auto const& p = e.as<BicyclicPair>();
              out << "Q^" << p.pops << "P^" << p.pushes;
            },
            [&](Polycyclic const&) {
              if (e.is<Zero>()) {
                out << '0';
                return;
              }
              auto const& p = e.as<PopPush>();
              if (p.pop.empty() && p.push.empty()) {
                out << '1';
              }
              if (!p.pop.empty()) {
                out << "Q[" << p.pop << ']';
              }
              if (!p.push.empty()) {
                out << "P[" << p.push << ']';
              }
            },
            [&](FiniteTable const& t) {
              auto i = e.as<TableIndex>().index;
              if (t.names.empty()) {
                out << i;
              } else {
                out << t.names[i];
              }
            },
            [&](Product const& p) {
              out << '<' << to_string(*p.left, left_of(e)) << ','
                  << to_string(*p.right, right_of(e)) << '>';
            },
            [&](ReesQuotient const& r) {
              auto c = e.as<TableIndex>().index;
              if (c == r.ideal_class) {
                out << "I";
              } else {
                out << '{'
                    << to_string(r.base, MonoidElement::index(
                                             r.representative[c]))
                    << '}';
              }
            },
            [&](ZeroAdjoined const& z) {
              if (e.is<Zero>()) {
                out << "0";
              } else {
                out << to_string(*z.base, *e.as<Lifted>().inner);
              }
            }},
        desc.value);
    return out.str();
  }

  void validate(MonoidDescriptor const& desc) {
    std::visit(
        overloaded{
            [](FreeAbelian const& m) {
              if (m.rank == 0) {
                throw StructuralError("free abelian rank must be positive");
              }
            },
            [](Bicyclic const&) {},
            [](Polycyclic const& m) {
              if (m.alphabet.empty()) {
                throw StructuralError("polycyclic alphabet must be nonempty");
              }
              std::set<Symbol> seen(m.alphabet.begin(), m.alphabet.end());
              if (seen.size() != m.alphabet.size()) {
                throw StructuralError(
                    "polycyclic alphabet symbols must be distinct");
              }
            },
            [](FiniteTable const& t) { validate_table(t, "finite table"); },
            [](Product const& p) {
              validate(*p.left);
              validate(*p.right);
            },
            [](ReesQuotient const& r) {
              validate_table(r.base, "rees quotient base");
              auto rebuilt = rees_quotient(r.base, r.ideal);
              if (!(rebuilt == MonoidDescriptor(r))) {
                throw StructuralError(
                    "rees quotient data is inconsistent with its base");
              }
            },
            [](ZeroAdjoined const& z) { validate(*z.base); }},
        desc.value);
  }

  bool is_valid(MonoidDescriptor const& desc, MonoidElement const& e) {
    return std::visit(
        overloaded{
            [&](FreeAbelian const& m) {
              return e.is<IntVector>() && e.as<IntVector>().size() == m.rank;
            },
            [&](Bicyclic const&) { return e.is<BicyclicPair>(); },
            [&](Polycyclic const& m) {
              if (e.is<Zero>()) {
                return true;
              }
              if (!e.is<PopPush>()) {
                return false;
              }
              auto in = [&m](Word const& w) {
                return std::all_of(w.begin(), w.end(), [&m](Symbol s) {
                  return m.alphabet.find(s) != std::string::npos;
                });
              };
              return in(e.as<PopPush>().pop) && in(e.as<PopPush>().push);
            },
            [&](FiniteTable const& t) {
              return e.is<TableIndex>() && e.as<TableIndex>().index < t.size;
            },
            [&](Product const& p) {
              return e.is<ElementPair>() && is_valid(*p.left, left_of(e))
                     && is_valid(*p.right, right_of(e));
            },
            [&](ReesQuotient const& r) {
              return e.is<TableIndex>()
                     && e.as<TableIndex>().index < r.quotient.size;
            },
            [&](ZeroAdjoined const& z) {
              return e.is<Zero>()
                     || (e.is<Lifted>()
                         && is_valid(*z.base, *e.as<Lifted>().inner));
            }},
        desc.value);
  }

  void check_element(MonoidDescriptor const& desc,
                     MonoidElement const&    e,
                     std::string const&      context) {
    if (!is_valid(desc, e)) {
      throw StructuralError(context + " is not a valid element of "
                            + describe(desc));
    }
  }

  MonoidElement mul(MonoidDescriptor const& desc,
                    MonoidElement const&    a,
                    MonoidElement const&    b) {
    return std::visit(
        overloaded{
            [&](FreeAbelian const& m) -> MonoidElement {
              if (!a.is<IntVector>() || !b.is<IntVector>()
                  || a.as<IntVector>().size() != m.rank
                  || b.as<IntVector>().size() != m.rank) {
                mismatch(desc, "expected integer vectors of the same rank");
              }
              IntVector out = a.as<IntVector>();
              auto const& v = b.as<IntVector>();
              for (std::size_t i = 0; i < out.size(); ++i) {
                out[i] += v[i];
              }
              return out;
            },
            [&](Bicyclic const&) -> MonoidElement {
              if (!a.is<BicyclicPair>() || !b.is<BicyclicPair>()) {
                mismatch(desc, "expected bicyclic pairs");
              }
              auto const& x = a.as<BicyclicPair>();
              auto const& y = b.as<BicyclicPair>();
              // (Q^i P^j)(Q^k P^l) = Q^{i + max(0, k - j)} P^{l + max(0, j - k)}
              std::uint64_t pops   = x.pops;
              std::uint64_t pushes = y.pushes;
              if (y.pops > x.pushes) {
                pops += y.pops - x.pushes;
              } else {
                pushes += x.pushes - y.pops;
              }
              return BicyclicPair{pops, pushes};
            },
            [&](Polycyclic const&) -> MonoidElement {
              if (!is_valid(desc, a) || !is_valid(desc, b)) {
                mismatch(desc, "expected pop/push pairs over the alphabet");
              }
              if (a.is<Zero>() || b.is<Zero>()) {
                return Zero{};
              }
              auto const& [u1, v1] = a.as<PopPush>();
              auto const& [u2, v2] = b.as<PopPush>();
              if (ends_with(v1, u2)) {
                return PopPush{u1, v1.substr(0, v1.size() - u2.size()) + v2};
              }
              if (ends_with(u2, v1)) {
                return PopPush{u2.substr(0, u2.size() - v1.size()) + u1, v2};
              }
              return Zero{};
            },
            [&](FiniteTable const& t) -> MonoidElement {
              auto i = index_of(desc, a);
              auto j = index_of(desc, b);
              if (i >= t.size || j >= t.size) {
                mismatch(desc, "table index out of range");
              }
              return TableIndex{t.at(i, j)};
            },
            [&](Product const& p) -> MonoidElement {
              if (!a.is<ElementPair>() || !b.is<ElementPair>()) {
                mismatch(desc, "expected pairs");
              }
              return ElementPair{mul(*p.left, left_of(a), left_of(b)),
                                 mul(*p.right, right_of(a), right_of(b))};
            },
            [&](ReesQuotient const& r) -> MonoidElement {
              auto i = index_of(desc, a);
              auto j = index_of(desc, b);
              if (i >= r.quotient.size || j >= r.quotient.size) {
                mismatch(desc, "class index out of range");
              }
              return TableIndex{r.quotient.at(i, j)};
            },
            [&](ZeroAdjoined const& z) -> MonoidElement {
              if (!(a.is<Zero>() || a.is<Lifted>())
                  || !(b.is<Zero>() || b.is<Lifted>())) {
                mismatch(desc, "expected lifted elements or zero");
              }
              if (a.is<Zero>() || b.is<Zero>()) {
                return Zero{};
              }
              return Lifted{
                  mul(*z.base, *a.as<Lifted>().inner, *b.as<Lifted>().inner)};
            }},
        desc.value);
  }

  MonoidElement identity(MonoidDescriptor const& desc) {
    return std::visit(
        overloaded{[](FreeAbelian const& m) -> MonoidElement {
                     return IntVector(m.rank, 0);
                   },
                   [](Bicyclic const&) -> MonoidElement {
                     return BicyclicPair{0, 0};
                   },
                   [](Polycyclic const&) -> MonoidElement {
                     return PopPush{"", ""};
                   },
                   [](FiniteTable const& t) -> MonoidElement {
                     return TableIndex{t.identity};
                   },
                   [](Product const& p) -> MonoidElement {
                     return ElementPair{identity(*p.left),
                                        identity(*p.right)};
                   },
                   [](ReesQuotient const& r) -> MonoidElement {
                     return TableIndex{r.quotient.identity};
                   },
                   [](ZeroAdjoined const& z) -> MonoidElement {
                     return Lifted{identity(*z.base)};
                   }},
        desc.value);
  }

  bool is_identity(MonoidDescriptor const& desc, MonoidElement const& a) {
    return a == identity(desc);
  }

  bool is_zero(MonoidDescriptor const& desc, MonoidElement const& a) {
    return std::visit(
        overloaded{[](FreeAbelian const&) { return false; },
                   [](Bicyclic const&) { return false; },
                   [&](Polycyclic const&) { return a.is<Zero>(); },
                   [&](FiniteTable const& t) {
                     return a.is<TableIndex>() && t.zero
                            && a.as<TableIndex>().index == *t.zero;
                   },
                   [&](Product const& p) {
                     return a.is<ElementPair>() && is_zero(*p.left, left_of(a))
                            && is_zero(*p.right, right_of(a));
                   },
                   [&](ReesQuotient const& r) {
                     return a.is<TableIndex>()
                            && a.as<TableIndex>().index == r.ideal_class;
                   },
                   [&](ZeroAdjoined const&) { return a.is<Zero>(); }},
        desc.value);
  }

  bool is_dead_end(MonoidDescriptor const& desc, MonoidElement const& a) {
    return std::visit(
        overloaded{
            [](FreeAbelian const&) { return false; },
            [&](Bicyclic const&) { return a.as<BicyclicPair>().pops > 0; },
            [&](Polycyclic const&) {
              return a.is<Zero>() || !a.as<PopPush>().pop.empty();
            },
            [&](FiniteTable const& t) {
              auto i = a.as<TableIndex>().index;
              for (std::size_t x = 0; x < t.size; ++x) {
                if (t.at(i, x) == t.identity) {
                  return false;
                }
              }
              return true;
            },
            [&](Product const& p) {
              return is_dead_end(*p.left, left_of(a))
                     || is_dead_end(*p.right, right_of(a));
            },
            [&](ReesQuotient const& r) {
              auto i = a.as<TableIndex>().index;
              for (std::size_t x = 0; x < r.quotient.size; ++x) {
                if (r.quotient.at(i, x) == r.quotient.identity) {
                  return false;
                }
              }
              return true;
            },
            [&](ZeroAdjoined const& z) {
              return a.is<Zero>() || is_dead_end(*z.base, *a.as<Lifted>().inner);
            }},
        desc.value);
  }

  bool is_finite(MonoidDescriptor const& desc) {
    return std::visit(
        overloaded{[](FreeAbelian const&) { return false; },
                   [](Bicyclic const&) { return false; },
                   [](Polycyclic const&) { return false; },
                   [](FiniteTable const&) { return true; },
                   [](Product const& p) {
                     return is_finite(*p.left) && is_finite(*p.right);
                   },
                   [](ReesQuotient const&) { return true; },
                   [](ZeroAdjoined const& z) { return is_finite(*z.base); }},
        desc.value);
  }

  bool is_commutative(MonoidDescriptor const& desc) {
    if (is_finite(desc)) {
      auto t = cayley_table(desc);
      for (std::size_t a = 0; a < t.size; ++a) {
        for (std::size_t b = a + 1; b < t.size; ++b) {
          if (t.at(a, b) != t.at(b, a)) {
            return false;
          }
        }
      }
      return true;
    }
    return std::visit(
        overloaded{[](FreeAbelian const&) { return true; },
                   [](Product const& p) {
                     return is_commutative(*p.left) && is_commutative(*p.right);
                   },
                   [](ZeroAdjoined const& z) { return is_commutative(*z.base); },
                   [](auto const&) { return false; }},
        desc.value);
  }

  std::vector<MonoidElement> finite_elements(MonoidDescriptor const& desc) {
    return std::visit(
        overloaded{
            [](FiniteTable const& t) {
              std::vector<MonoidElement> out;
              for (std::size_t i = 0; i < t.size; ++i) {
                out.emplace_back(TableIndex{i});
              }
              return out;
            },
            [](ReesQuotient const& r) {
              std::vector<MonoidElement> out;
              for (std::size_t i = 0; i < r.quotient.size; ++i) {
                out.emplace_back(TableIndex{i});
              }
              return out;
            },
            [](Product const& p) {
              std::vector<MonoidElement> out;
              auto ls = finite_elements(*p.left);
              auto rs = finite_elements(*p.right);
              for (auto const& l : ls) {
                for (auto const& r : rs) {
                  out.emplace_back(ElementPair{l, r});
                }
              }
              return out;
            },
            [](ZeroAdjoined const& z) {
              std::vector<MonoidElement> out;
              for (auto& e : finite_elements(*z.base)) {
                out.emplace_back(Lifted{std::move(e)});
              }
              out.emplace_back(Zero{});
              return out;
            },
            [&](auto const&) -> std::vector<MonoidElement> {
              throw UnsupportedError("cannot enumerate the infinite monoid "
                                     + describe(desc));
            }},
        desc.value);
  }

  FiniteTable cayley_table(MonoidDescriptor const& desc) {
    if (desc.is<FiniteTable>()) {
      return desc.as<FiniteTable>();
    }
    if (desc.is<ReesQuotient>()) {
      return desc.as<ReesQuotient>().quotient;
    }
    auto                                elems = finite_elements(desc);
    std::map<MonoidElement, std::size_t> pos;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      pos.emplace(elems[i], i);
    }
    FiniteTable t;
    t.size = elems.size();
    t.table.assign(t.size * t.size, 0);
    for (std::size_t a = 0; a < t.size; ++a) {
      for (std::size_t b = 0; b < t.size; ++b) {
        t.table[a * t.size + b] = pos.at(mul(desc, elems[a], elems[b]));
      }
    }
    t.identity = pos.at(identity(desc));
    for (std::size_t z = 0; z < t.size; ++z) {
      if (is_zero(desc, elems[z])) {
        t.zero = z;
      }
    }
    for (auto const& e : elems) {
      t.names.push_back(to_string(desc, e));
    }
    if (std::set<std::string>(t.names.begin(), t.names.end()).size()
        != t.names.size()) {
      t.names.clear();
    }
    return t;
  }

  bool is_periodic(MonoidDescriptor const& desc, MonoidElement const& a) {
    check_element(desc, a);
    if (is_finite(desc)) {
      return true;
    }
    return std::visit(
        overloaded{
            [&](FreeAbelian const&) {
              auto const& v = a.as<IntVector>();
              return std::all_of(
                  v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
            },
            [&](Bicyclic const&) {
              // Only the idempotents Q^i P^i are periodic; other powers grow.
              auto const& p = a.as<BicyclicPair>();
              return p.pops == p.pushes;
            },
            [&](Polycyclic const&) {
              if (a.is<Zero>()) {
                return true;
              }
              auto const& [u, v] = a.as<PopPush>();
              if (u == v) {
                return true;
              }
              // If neither word is a suffix of the other the square is 0.
              return !ends_with(v, u) && !ends_with(u, v);
            },
            [&](Product const& p) {
              return is_periodic(*p.left, left_of(a))
                     && is_periodic(*p.right, right_of(a));
            },
            [&](ZeroAdjoined const& z) {
              return a.is<Zero>() || is_periodic(*z.base, *a.as<Lifted>().inner);
            },
            [](auto const&) { return true; }},
        desc.value);
  }

  MonoidElement product_of(MonoidDescriptor const&            desc,
                           std::vector<MonoidElement> const& factors) {
    MonoidElement acc = identity(desc);
    for (auto const& f : factors) {
      acc = mul(desc, acc, f);
    }
    return acc;
  }

  MonoidDescriptor p2() {
    return Polycyclic{"ab"};
  }

  std::vector<Word> p2_codes(std::string const& alphabet) {
    std::size_t width = 1;
    while ((std::size_t{1} << width) < alphabet.size()) {
      ++width;
    }
    std::vector<Word> codes;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      Word code(width, 'a');
      for (std::size_t bit = 0; bit < width; ++bit) {
        if ((i >> (width - 1 - bit)) & 1U) {
          code[bit] = 'b';
        }
      }
      codes.push_back(std::move(code));
    }
    return codes;
  }

  Word encode_p2(std::string const& alphabet, Word const& w) {
    auto codes = p2_codes(alphabet);
    Word out;
    for (Symbol s : w) {
      auto pos = alphabet.find(s);
      if (pos == std::string::npos) {
        throw AlphabetError(std::string("symbol '") + s
                            + "' is not in the polycyclic alphabet");
      }
      out += codes[pos];
    }
    return out;
  }

  MonoidElement embed_polycyclic_into_p2(std::string const&   alphabet,
                                         MonoidElement const& e) {
    if (alphabet.empty()) {
      throw StructuralError("polycyclic alphabet must be nonempty");
    }
    if (e.is<Zero>()) {
      return Zero{};
    }
    if (!e.is<PopPush>()) {
      throw StructuralError("expected a polycyclic element");
    }
    auto const& p = e.as<PopPush>();
    return PopPush{encode_p2(alphabet, p.pop), encode_p2(alphabet, p.push)};
  }

}  // namespace valence

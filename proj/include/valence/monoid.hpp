#ifndef VALENCE_MONOID_HPP_
#define VALENCE_MONOID_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "valence/box.hpp"

namespace valence {

  using Symbol = char;
  using Word   = std::string;

  class MonoidDescriptor;
  class MonoidElement;

  ////////////////////////////////////////////////////////////////////////
  // Descriptors
  ////////////////////////////////////////////////////////////////////////

  // Z^rank under addition.
  struct FreeAbelian {
    std::size_t rank = 1;

    bool operator==(FreeAbelian const&) const = default;
  };

  // Polycyclic monoid on a single generator; elements Q^i P^j.
  struct Bicyclic {
    bool operator==(Bicyclic const&) const = default;
  };

  // Polycyclic monoid P(X). The alphabet is an ordered list of distinct
  // symbols; the order fixes the binary code used by the P_2 embedding.
  struct Polycyclic {
    std::string alphabet;

    bool operator==(Polycyclic const&) const = default;
  };

  // A monoid given by its Cayley table on {0, ..., size - 1}.
  struct FiniteTable {
    std::size_t                size = 1;
    std::vector<std::size_t>   table{0};  // row-major, size * size entries
    std::size_t                identity = 0;
    std::optional<std::size_t> zero;
    std::vector<std::string>   names;  // empty, or one per element

    std::size_t at(std::size_t a, std::size_t b) const {
      return table[a * size + b];
    }

    bool operator==(FiniteTable const&) const = default;
  };

  // Rees quotient base / ideal. The quotient is stored both as the base
  // data and as a compact table whose elements are the classes; the class
  // of the ideal is `ideal_class` and acts as the zero.
  struct ReesQuotient {
    FiniteTable              base;
    std::vector<std::size_t> ideal;           // sorted base indices
    FiniteTable              quotient;        // compact table on classes
    std::vector<std::size_t> class_of;        // base index -> class
    std::vector<std::size_t> representative;  // class -> base index
    std::size_t              ideal_class = 0;

    bool operator==(ReesQuotient const&) const = default;
  };

  struct Product {
    Box<MonoidDescriptor> left;
    Box<MonoidDescriptor> right;

    bool operator==(Product const&) const = default;
  };

  // M^0: base with a fresh zero adjoined.
  struct ZeroAdjoined {
    Box<MonoidDescriptor> base;

    bool operator==(ZeroAdjoined const&) const = default;
  };

  class MonoidDescriptor {
   public:
    using Variant = std::variant<FreeAbelian,
                                 Bicyclic,
                                 Polycyclic,
                                 FiniteTable,
                                 Product,
                                 ReesQuotient,
                                 ZeroAdjoined>;

    MonoidDescriptor() : value(FreeAbelian{1}) {}
    template <typename T>
      requires(!std::is_same_v<std::remove_cvref_t<T>, MonoidDescriptor>)
    MonoidDescriptor(T v)  // NOLINT(runtime/explicit)
        : value(std::move(v)) {}

    static MonoidDescriptor free_abelian(std::size_t rank) {
      return FreeAbelian{rank};
    }
    static MonoidDescriptor bicyclic() {
      return Bicyclic{};
    }
    static MonoidDescriptor polycyclic(std::string alphabet) {
      return Polycyclic{std::move(alphabet)};
    }
    static MonoidDescriptor product(MonoidDescriptor left,
                                    MonoidDescriptor right) {
      return Product{std::move(left), std::move(right)};
    }
    static MonoidDescriptor zero_adjoined(MonoidDescriptor base) {
      return ZeroAdjoined{std::move(base)};
    }

    template <typename T>
    bool is() const noexcept {
      return std::holds_alternative<T>(value);
    }
    template <typename T>
    T const& as() const {
      return std::get<T>(value);
    }

    bool operator==(MonoidDescriptor const&) const = default;

    Variant value;
  };

  // The trivial monoid {1}, used as the valence monoid of classical NFAs.
  MonoidDescriptor trivial_monoid();

  // Short human-readable name of the descriptor's class, e.g. "Z^2".
  std::string describe(MonoidDescriptor const& desc);

  ////////////////////////////////////////////////////////////////////////
  // Elements
  ////////////////////////////////////////////////////////////////////////

  using IntVector = std::vector<std::int64_t>;

  // Normal form Q_{pop reversed} P_{push}: remove the suffix `pop` from the
  // stack word, then append `push`.
  struct PopPush {
    Word pop;
    Word push;

    bool                 operator==(PopPush const&) const = default;
    std::strong_ordering operator<=>(PopPush const&) const = default;
  };

  // Q^pops P^pushes in the bicyclic monoid.
  struct BicyclicPair {
    std::uint64_t pops   = 0;
    std::uint64_t pushes = 0;

    bool                 operator==(BicyclicPair const&) const = default;
    std::strong_ordering operator<=>(BicyclicPair const&) const = default;
  };

  struct TableIndex {
    std::size_t index = 0;

    bool                 operator==(TableIndex const&) const = default;
    std::strong_ordering operator<=>(TableIndex const&) const = default;
  };

  struct ElementPair {
    Box<MonoidElement> left;
    Box<MonoidElement> right;

    bool                 operator==(ElementPair const&) const = default;
    std::strong_ordering operator<=>(ElementPair const&) const = default;
  };

  struct Lifted {
    Box<MonoidElement> inner;

    bool                 operator==(Lifted const&) const = default;
    std::strong_ordering operator<=>(Lifted const&) const = default;
  };

  // Zero of a polycyclic monoid (the empty partial map) or the adjoined
  // zero of M^0.
  struct Zero {
    bool                 operator==(Zero const&) const = default;
    std::strong_ordering operator<=>(Zero const&) const = default;
  };

  class MonoidElement {
   public:
    using Variant = std::variant<IntVector,
                                 PopPush,
                                 BicyclicPair,
                                 TableIndex,
                                 ElementPair,
                                 Lifted,
                                 Zero>;

    MonoidElement() : value(TableIndex{0}) {}
    template <typename T>
      requires(!std::is_same_v<std::remove_cvref_t<T>, MonoidElement>)
    MonoidElement(T v)  // NOLINT(runtime/explicit)
        : value(std::move(v)) {}

    static MonoidElement vector(IntVector v) {
      return MonoidElement(std::move(v));
    }
    static MonoidElement pop_push(Word pop, Word push) {
      return PopPush{std::move(pop), std::move(push)};
    }
    static MonoidElement bicyclic(std::uint64_t pops, std::uint64_t pushes) {
      return BicyclicPair{pops, pushes};
    }
    static MonoidElement index(std::size_t i) {
      return TableIndex{i};
    }
    static MonoidElement pair(MonoidElement left, MonoidElement right) {
      return ElementPair{std::move(left), std::move(right)};
    }
    static MonoidElement lift(MonoidElement inner) {
      return Lifted{std::move(inner)};
    }
    static MonoidElement zero() {
      return Zero{};
    }

    template <typename T>
    bool is() const noexcept {
      return std::holds_alternative<T>(value);
    }
    template <typename T>
    T const& as() const {
      return std::get<T>(value);
    }

    bool                 operator==(MonoidElement const&) const = default;
    std::strong_ordering operator<=>(MonoidElement const&) const = default;

    Variant value;
  };

  std::size_t hash_value(MonoidElement const& e) noexcept;

  struct ElementHash {
    std::size_t operator()(MonoidElement const& e) const noexcept {
      return hash_value(e);
    }
  };

  // Compact textual rendering: "(1,-2)", "Q[ab]P[b]", "0", "<a,(1)>", ...
  std::string to_string(MonoidDescriptor const& desc, MonoidElement const& e);

  ////////////////////////////////////////////////////////////////////////
  // Arithmetic
  ////////////////////////////////////////////////////////////////////////

  // Throws StructuralError if the descriptor violates its invariants.
  void validate(MonoidDescriptor const& desc);

  bool is_valid(MonoidDescriptor const& desc, MonoidElement const& e);

  // Throws StructuralError naming `context` if e is not an element of desc.
  void check_element(MonoidDescriptor const& desc,
                     MonoidElement const&    e,
                     std::string const&      context = "element");

  MonoidElement mul(MonoidDescriptor const& desc,
                    MonoidElement const&    a,
                    MonoidElement const&    b);

  MonoidElement identity(MonoidDescriptor const& desc);
  bool is_identity(MonoidDescriptor const& desc, MonoidElement const& a);
  bool is_zero(MonoidDescriptor const& desc, MonoidElement const& a);

  // True if no right multiple a * x equals the identity. Used to prune
  // searches whose acceptance condition is "register = 1"; exact for every
  // descriptor class (over Z^m it is always false).
  bool is_dead_end(MonoidDescriptor const& desc, MonoidElement const& a);

  bool is_finite(MonoidDescriptor const& desc);

  // Is every pair of elements known to commute? Exact for finite
  // descriptors and for Z^m; false for the polycyclic family.
  bool is_commutative(MonoidDescriptor const& desc);

  // All elements of a finite descriptor, in a fixed order.
  // Throws UnsupportedError for infinite descriptors.
  std::vector<MonoidElement> finite_elements(MonoidDescriptor const& desc);

  // Cayley table of a finite descriptor with respect to finite_elements().
  FiniteTable cayley_table(MonoidDescriptor const& desc);

  // s^i = s^j for some 1 <= i < j. Exact for every descriptor class:
  // Q^i P^j is periodic iff i = j, and Q[u]P[v] iff u = v or neither of
  // u, v is a suffix of the other (then its square is zero).
  bool is_periodic(MonoidDescriptor const& desc, MonoidElement const& a);

  // Product of a sequence, left to right; identity for an empty sequence.
  MonoidElement product_of(MonoidDescriptor const&            desc,
                           std::vector<MonoidElement> const& factors);

  ////////////////////////////////////////////////////////////////////////
  // Polycyclic embedding P(X) -> P_2
  ////////////////////////////////////////////////////////////////////////

  // The rank-2 polycyclic monoid on {a, b}.
  MonoidDescriptor p2();

  // Fixed-width binary code of each symbol of the alphabet over {a, b}:
  // width max(1, ceil(log2 n)), a = 0, b = 1, most significant first.
  std::vector<Word> p2_codes(std::string const& alphabet);

  Word encode_p2(std::string const& alphabet, Word const& w);

  MonoidElement embed_polycyclic_into_p2(std::string const&   alphabet,
                                         MonoidElement const& e);

}  // namespace valence

#endif  // VALENCE_MONOID_HPP_

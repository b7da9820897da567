#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cca {

/// Dense element index. The identity is always 0.
using Element = std::uint32_t;

/// Sorted, duplicate-free list of elements.
using ElementSet = std::vector<Element>;

inline constexpr std::size_t kDefaultMaxOrder = 64;

/// Abelian index-2 subgroup A, involution z in A, and q outside A with
/// q*q = z and q a q^-1 = a^-1 for every a in A.
struct DicyclicWitness {
  ElementSet A;
  Element z = 0;
  Element q = 0;

  friend bool operator==(const DicyclicWitness&, const DicyclicWitness&) = default;
};

/// G = <i, j> x B with <i, j> a quaternion group and B of exponent <= 2.
struct Ham2Decomposition {
  Element i = 0;
  Element j = 0;
  Element k = 0;
  ElementSet B;

  friend bool operator==(const Ham2Decomposition&, const Ham2Decomposition&) = default;
};

/// A finite group given by its full multiplication table.
///
/// Construction validates the Latin-square, identity, inverse and
/// associativity laws; a table that fails any of them is rejected with
/// PreconditionError. Instances are immutable.
class FiniteGroup {
 public:
  /// `table` is row-major, order*order entries; `table[a*order+b] = a*b`.
  /// Element 0 must be the identity. `labels` may be empty.
  FiniteGroup(std::string name, std::size_t order, std::vector<Element> table,
              std::vector<std::string> labels = {},
              std::optional<DicyclicWitness> construction_witness = std::nullopt);

  std::size_t order() const noexcept { return order_; }
  const std::string& name() const noexcept { return name_; }
  static constexpr Element identity() noexcept { return 0; }

  Element mul(Element a, Element b) const noexcept { return table_[a * order_ + b]; }
  Element inv(Element a) const noexcept { return inverse_[a]; }
  Element power(Element a, long long k) const;
  std::size_t element_order(Element a) const noexcept { return element_order_[a]; }
  bool commute(Element a, Element b) const noexcept { return mul(a, b) == mul(b, a); }
  bool is_abelian() const noexcept { return abelian_; }

  const std::string& label(Element a) const { return labels_[a]; }
  std::span<const Element> table() const noexcept { return table_; }

  /// Witness recorded by the Dic(...) / Q8 constructors, if any.
  const std::optional<DicyclicWitness>& construction_witness() const noexcept {
    return construction_witness_;
  }

  ElementSet all_elements() const;

 private:
  std::string name_;
  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::size_t> element_order_;
  std::vector<std::string> labels_;
  std::optional<DicyclicWitness> construction_witness_;
  bool abelian_ = true;
};

// Constructors for the standard families.
FiniteGroup cyclic_group(std::size_t n);
/// Dihedral group of order n (n even, n >= 4). Element r^t s^e has index e*(n/2)+t.
FiniteGroup dihedral_group(std::size_t n);
/// Dicyclic group over Z_{2m}: elements q^e a^t, index e*2m+t, with q^2 = a^m.
FiniteGroup dicyclic_group(std::size_t two_m);
/// Q8 = Dic(Z4) with quaternion labels.
FiniteGroup quaternion_group();
/// Direct product; element order is lexicographic over the factors.
FiniteGroup direct_product(std::span<const FiniteGroup> factors, std::string name = {});

/// Parses and builds a group from a spec such as "Q8xZ2^2" or "Dic(Z6)".
FiniteGroup build_group(std::string_view spec, std::size_t max_order = kDefaultMaxOrder);

/// Cap taken from the CCA_MAX_ORDER environment variable, else the default.
std::size_t max_order_from_env();

// Subgroups and structure.

ElementSet subgroup_generated(const FiniteGroup& G, std::span<const Element> generators);
ElementSet centralizer(const FiniteGroup& G, std::span<const Element> S);
ElementSet centre(const FiniteGroup& G);
bool is_subgroup(const FiniteGroup& G, std::span<const Element> H);
bool is_normal_subgroup(const FiniteGroup& G, std::span<const Element> H);
/// Every subgroup of G, sorted lexicographically by element list.
std::vector<ElementSet> all_subgroups(const FiniteGroup& G);
/// Set of products {h*k}.
ElementSet product_set(const FiniteGroup& G, std::span<const Element> H, std::span<const Element> K);
ElementSet set_complement(const FiniteGroup& G, std::span<const Element> S);

bool is_valid_dicyclic_witness(const FiniteGroup& G, const DicyclicWitness& w);
std::optional<DicyclicWitness> is_dicyclic_type(const FiniteGroup& G);

bool is_valid_ham2_decomposition(const FiniteGroup& G, const Ham2Decomposition& d);
std::optional<Ham2Decomposition> decompose_hamiltonian_2group(const FiniteGroup& G);

/// Elements of the quaternion factor <i, j>, listed as i^m j^n for
/// n in {0,1}, m in {0..3} (index n*4+m).
std::vector<Element> quaternion_words(const FiniteGroup& G, Element i, Element j);

}  // namespace cca

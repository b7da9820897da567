#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "cca/group.hpp"

namespace cca {

/// A bijection on the elements of a group, stored as its image table.
class GroupMap {
 public:
  GroupMap() = default;
  /// Throws PreconditionError unless `image` is a permutation of 0..n-1.
  explicit GroupMap(std::vector<Element> image);

  static GroupMap identity(std::size_t n);

  Element operator()(Element x) const noexcept { return image_[x]; }
  std::size_t size() const noexcept { return image_.size(); }
  std::span<const Element> image() const noexcept { return image_; }
  bool is_identity() const noexcept;

  GroupMap inverse() const;

  friend bool operator==(const GroupMap&, const GroupMap&) = default;
  friend auto operator<=>(const GroupMap&, const GroupMap&) = default;

 private:
  struct Unchecked {};
  GroupMap(std::vector<Element> image, Unchecked) : image_(std::move(image)) {}
  friend GroupMap compose(const GroupMap& outer, const GroupMap& inner);

  std::vector<Element> image_;
};

/// outer o inner, i.e. x -> outer(inner(x)).
GroupMap compose(const GroupMap& outer, const GroupMap& inner);

/// L_g : x -> g*x.
GroupMap left_translation(const FiniteGroup& G, Element g);
/// x -> g*x*g^-1.
GroupMap conjugation(const FiniteGroup& G, Element g);
/// iota : x -> x^-1.
GroupMap inversion_map(const FiniteGroup& G);

bool is_group_automorphism(const FiniteGroup& G, const GroupMap& phi);

/// Which family an AutomorphismSet was drawn from.
enum class AutMode { ColourPreserving, ColourPermuting, Graph, Group };

std::string_view to_string(AutMode mode);
std::optional<AutMode> parse_aut_mode(std::string_view text);

/// Deduplicated, lexicographically sorted list of maps with provenance.
struct AutomorphismSet {
  AutMode mode = AutMode::Group;
  bool stabilized = false;
  std::vector<GroupMap> maps;

  std::size_t size() const noexcept { return maps.size(); }
  bool contains(const GroupMap& phi) const;
};

/// Sorts and removes duplicates.
void normalize(std::vector<GroupMap>& maps);

/// The generator sequence used by the automorphism search: repeatedly
/// the smallest element outside the closure of those chosen so far.
std::vector<Element> greedy_generators(const FiniteGroup& G);

/// All automorphisms of G, by backtracking on the images of
/// greedy_generators(G).
AutomorphismSet enumerate_automorphisms(const FiniteGroup& G, std::size_t max_order = kDefaultMaxOrder);

/// phi(x) = alpha(g*x) with alpha in Aut(G).
struct AffineWitness {
  GroupMap alpha;
  Element g = 0;
};

/// Succeeds iff x -> phi(1)^-1 * phi(x) is a group automorphism.
std::optional<AffineWitness> is_affine(const FiniteGroup& G, const GroupMap& phi);

}  // namespace cca

#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cca/group.hpp"

namespace cca {

/// The colour {s, s^-1}; `lo` is the smaller index. lo == hi iff s is an involution.
struct ColourClass {
  Element lo = 0;
  Element hi = 0;
  int id = 0;

  bool is_singleton() const noexcept { return lo == hi; }
  friend bool operator==(const ColourClass&, const ColourClass&) = default;
};

inline constexpr int kNoColour = -1;

/// Cay(G; S) with the canonical edge colouring. Loops are never present.
class CayleyGraph {
 public:
  /// Throws PreconditionError if S contains the identity, is not
  /// inverse-closed, or names elements outside G.
  CayleyGraph(std::shared_ptr<const FiniteGroup> group, std::span<const Element> S);

  const FiniteGroup& group() const noexcept { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const noexcept { return group_; }
  std::size_t order() const noexcept { return group_->order(); }

  const ElementSet& connection_set() const noexcept { return S_; }
  bool in_connection_set(Element s) const noexcept { return colour_of_[s] != kNoColour; }

  /// Ids ascend with the smaller member of each class.
  const std::vector<ColourClass>& colours() const noexcept { return colours_; }
  std::size_t colour_count() const noexcept { return colours_.size(); }

  /// Colour id of the class containing s, or kNoColour.
  int colour_of_element(Element s) const noexcept { return colour_of_[s]; }
  /// Colour of the edge {u, v}, or kNoColour when they are not adjacent.
  int edge_colour(Element u, Element v) const noexcept { return edge_colour_[u * order() + v]; }
  bool adjacent(Element u, Element v) const noexcept { return edge_colour(u, v) != kNoColour; }

  bool is_complete() const noexcept { return S_.size() + 1 == order(); }

 private:
  std::shared_ptr<const FiniteGroup> group_;
  ElementSet S_;
  std::vector<ColourClass> colours_;
  std::vector<int> colour_of_;
  std::vector<int> edge_colour_;
};

CayleyGraph build_cayley(std::shared_ptr<const FiniteGroup> G, std::span<const Element> S);
/// Cay(G; G \ {1}).
CayleyGraph complete_cayley(std::shared_ptr<const FiniteGroup> G);

bool is_connected(const CayleyGraph& X);

/// Union of the given colour classes as a connection set.
ElementSet connection_set_from_classes(const FiniteGroup& G, std::span<const int> class_ids);

/// The colour classes of the complete graph, {s, s^-1} for s != 1, in id order.
std::vector<ColourClass> inverse_classes(const FiniteGroup& G);

std::string to_dot(const CayleyGraph& X);
std::string to_json(const CayleyGraph& X);

}  // namespace cca

#include "cca/cayley.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cca/errors.hpp"

namespace cca {

CayleyGraph::CayleyGraph(std::shared_ptr<const FiniteGroup> group, std::span<const Element> S)
    : group_(std::move(group)) {
  if (!group_) throw PreconditionError("null group");
  const FiniteGroup& G = *group_;
  const std::size_t n = G.order();
  S_.assign(S.begin(), S.end());
  std::sort(S_.begin(), S_.end());
  S_.erase(std::unique(S_.begin(), S_.end()), S_.end());

  colour_of_.assign(n, kNoColour);
  for (Element s : S_) {
    if (s >= n) throw PreconditionError("connection set element " + std::to_string(s) + " out of range");
    if (s == FiniteGroup::identity()) throw PreconditionError("connection set contains the identity");
  }
  for (Element s : S_) {
    if (!std::binary_search(S_.begin(), S_.end(), G.inv(s))) {
      throw PreconditionError("connection set is not inverse-closed: missing inverse of " +
                              G.label(s));
    }
  }
  // S_ is sorted, so the first member met of each class is its minimum.
  for (Element s : S_) {
    if (colour_of_[s] != kNoColour) continue;
    const Element t = G.inv(s);
    const int id = static_cast<int>(colours_.size());
    colours_.push_back({std::min(s, t), std::max(s, t), id});
    colour_of_[s] = colour_of_[t] = id;
  }
  edge_colour_.assign(n * n, kNoColour);
  for (Element u = 0; u < n; ++u)
    for (Element v = 0; v < n; ++v) edge_colour_[u * n + v] = colour_of_[G.mul(G.inv(u), v)];
}

CayleyGraph build_cayley(std::shared_ptr<const FiniteGroup> G, std::span<const Element> S) {
  return CayleyGraph(std::move(G), S);
}

CayleyGraph complete_cayley(std::shared_ptr<const FiniteGroup> G) {
  ElementSet S;
  for (Element x = 1; x < G->order(); ++x) S.push_back(x);
  return CayleyGraph(std::move(G), S);
}

bool is_connected(const CayleyGraph& X) {
  return subgroup_generated(X.group(), X.connection_set()).size() == X.order();
}

ElementSet connection_set_from_classes(const FiniteGroup& G, std::span<const int> class_ids) {
  const auto classes = inverse_classes(G);
  ElementSet S;
  for (int id : class_ids) {
    const ColourClass& c = classes.at(static_cast<std::size_t>(id));
    S.push_back(c.lo);
    if (!c.is_singleton()) S.push_back(c.hi);
  }
  std::sort(S.begin(), S.end());
  return S;
}

std::vector<ColourClass> inverse_classes(const FiniteGroup& G) {
  std::vector<ColourClass> out;
  for (Element s = 1; s < G.order(); ++s) {
    const Element t = G.inv(s);
    if (t < s) continue;
    out.push_back({s, t, static_cast<int>(out.size())});
  }
  return out;
}

std::string to_dot(const CayleyGraph& X) {
  const FiniteGroup& G = X.group();
  std::ostringstream os;
  os << "graph \"Cay(" << G.name() << ")\" {\n";
  for (Element v = 0; v < X.order(); ++v) {
    os << "  " << v << " [label=\"" << v << ": " << G.label(v) << "\"];\n";
  }
  for (Element u = 0; u < X.order(); ++u) {
    for (Element v = u + 1; v < X.order(); ++v) {
      const int c = X.edge_colour(u, v);
      if (c != kNoColour) os << "  " << u << " -- " << v << " [colorclass=" << c << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string to_json(const CayleyGraph& X) {
  nlohmann::ordered_json j;
  j["group"] = X.group().name();
  j["S"] = X.connection_set();
  auto colours = nlohmann::ordered_json::array();
  for (const ColourClass& c : X.colours()) colours.push_back({c.lo, c.hi});
  j["colours"] = std::move(colours);
  return j.dump() + "\n";
}

}  // namespace cca

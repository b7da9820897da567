#include "cca/group_map.hpp"

#include <algorithm>
#include <deque>

#include "cca/errors.hpp"

namespace cca {

GroupMap::GroupMap(std::vector<Element> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (Element y : image_) {
    if (y >= image_.size() || hit[y]) throw PreconditionError("map is not a bijection");
    hit[y] = true;
  }
}

GroupMap GroupMap::identity(std::size_t n) {
  std::vector<Element> image(n);
  for (std::size_t x = 0; x < n; ++x) image[x] = static_cast<Element>(x);
  return GroupMap(std::move(image), Unchecked{});
}

bool GroupMap::is_identity() const noexcept {
  for (std::size_t x = 0; x < image_.size(); ++x)
    if (image_[x] != x) return false;
  return true;
}

GroupMap GroupMap::inverse() const {
  std::vector<Element> inv(image_.size());
  for (std::size_t x = 0; x < image_.size(); ++x) inv[image_[x]] = static_cast<Element>(x);
  return GroupMap(std::move(inv), Unchecked{});
}

GroupMap compose(const GroupMap& outer, const GroupMap& inner) {
  if (outer.size() != inner.size()) throw PreconditionError("composing maps of different sizes");
  std::vector<Element> image(inner.size());
  for (std::size_t x = 0; x < inner.size(); ++x) image[x] = outer(inner(static_cast<Element>(x)));
  return GroupMap(std::move(image), GroupMap::Unchecked{});
}

GroupMap left_translation(const FiniteGroup& G, Element g) {
  std::vector<Element> image(G.order());
  for (Element x = 0; x < G.order(); ++x) image[x] = G.mul(g, x);
  return GroupMap(std::move(image));
}

GroupMap conjugation(const FiniteGroup& G, Element g) {
  std::vector<Element> image(G.order());
  for (Element x = 0; x < G.order(); ++x) image[x] = G.mul(G.mul(g, x), G.inv(g));
  return GroupMap(std::move(image));
}

GroupMap inversion_map(const FiniteGroup& G) {
  std::vector<Element> image(G.order());
  for (Element x = 0; x < G.order(); ++x) image[x] = G.inv(x);
  return GroupMap(std::move(image));
}

bool is_group_automorphism(const FiniteGroup& G, const GroupMap& phi) {
  if (phi.size() != G.order()) return false;
  for (Element x = 0; x < G.order(); ++x)
    for (Element y = 0; y < G.order(); ++y)
      if (phi(G.mul(x, y)) != G.mul(phi(x), phi(y))) return false;
  return true;
}

std::string_view to_string(AutMode mode) {
  switch (mode) {
    case AutMode::ColourPreserving: return "colour-preserving";
    case AutMode::ColourPermuting: return "colour-permuting";
    case AutMode::Graph: return "all-graph-automorphisms";
    case AutMode::Group: return "group-automorphisms";
  }
  return "?";
}

std::optional<AutMode> parse_aut_mode(std::string_view text) {
  if (text == "colour-preserving" || text == "preserving") return AutMode::ColourPreserving;
  if (text == "colour-permuting" || text == "permuting") return AutMode::ColourPermuting;
  if (text == "all-graph-automorphisms" || text == "graph") return AutMode::Graph;
  if (text == "group-automorphisms" || text == "group") return AutMode::Group;
  return std::nullopt;
}

bool AutomorphismSet::contains(const GroupMap& phi) const {
  return std::binary_search(maps.begin(), maps.end(), phi);
}

void normalize(std::vector<GroupMap>& maps) {
  std::sort(maps.begin(), maps.end());
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
}

std::vector<Element> greedy_generators(const FiniteGroup& G) {
  std::vector<Element> gens;
  std::vector<bool> in(G.order(), false);
  in[0] = true;
  for (Element x = 1; x < G.order(); ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    for (Element y : subgroup_generated(G, gens)) in[y] = true;
  }
  return gens;
}

namespace {

class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const FiniteGroup& G) : G_(G), gens_(greedy_generators(G)) {}

  std::vector<GroupMap> run() {
    images_.assign(gens_.size(), 0);
    extend(0);
    return std::move(found_);
  }

 private:
  // Builds the partial map on <g_0..g_t> from the chosen generator images.
  // Returns false if the assignment is not a well-defined injective
  // homomorphism there.
  bool close(std::size_t t, std::vector<Element>& map) const {
    const std::size_t n = G_.order();
    constexpr Element unset = ~Element{0};
    map.assign(n, unset);
    std::vector<bool> used(n, false);
    map[0] = 0;
    used[0] = true;
    std::deque<Element> queue{0};
    while (!queue.empty()) {
      Element x = queue.front();
      queue.pop_front();
      for (std::size_t u = 0; u <= t; ++u) {
        Element y = G_.mul(x, gens_[u]);
        Element value = G_.mul(map[x], images_[u]);
        if (map[y] == unset) {
          if (used[value]) return false;
          map[y] = value;
          used[value] = true;
          queue.push_back(y);
        } else if (map[y] != value) {
          return false;
        }
      }
    }
    return true;
  }

  void extend(std::size_t t) {
    if (gens_.empty()) {
      found_.push_back(GroupMap::identity(G_.order()));
      return;
    }
    std::vector<Element> map;
    for (Element c = 1; c < G_.order(); ++c) {
      if (G_.element_order(c) != G_.element_order(gens_[t])) continue;
      images_[t] = c;
      if (!close(t, map)) continue;
      if (t + 1 == gens_.size()) {
        found_.emplace_back(map);
      } else {
        extend(t + 1);
      }
    }
  }

  const FiniteGroup& G_;
  std::vector<Element> gens_;
  std::vector<Element> images_;
  std::vector<GroupMap> found_;
};

}  // namespace

AutomorphismSet enumerate_automorphisms(const FiniteGroup& G, std::size_t max_order) {
  if (G.order() > max_order) {
    throw CapExceeded("group order " + std::to_string(G.order()) + " exceeds cap " +
                      std::to_string(max_order));
  }
  AutomorphismSet out;
  out.mode = AutMode::Group;
  out.stabilized = true;
  out.maps = AutomorphismSearch(G).run();
  normalize(out.maps);
  return out;
}

std::optional<AffineWitness> is_affine(const FiniteGroup& G, const GroupMap& phi) {
  if (phi.size() != G.order()) return std::nullopt;
  const Element c = phi(0);
  const Element c_inv = G.inv(c);
  std::vector<Element> image(G.order());
  for (Element x = 0; x < G.order(); ++x) image[x] = G.mul(c_inv, phi(x));
  GroupMap alpha(std::move(image));
  if (!is_group_automorphism(G, alpha)) return std::nullopt;
  // phi(x) = c * alpha(x) = alpha(alpha^-1(c) * x)
  return AffineWitness{alpha, alpha.inverse()(c)};
}

}  // namespace cca

#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cca/group.hpp"
#include "cca/group_map.hpp"

namespace cca::test {

inline std::shared_ptr<const FiniteGroup> make(std::string_view spec) {
  return std::make_shared<const FiniteGroup>(build_group(spec));
}

inline Element by_label(const FiniteGroup& G, std::string_view label) {
  for (Element x = 0; x < G.order(); ++x)
    if (G.label(x) == label) return x;
  throw std::out_of_range("no element labelled " + std::string(label));
}

/// Calls f on every permutation of 0..n-1 that fixes 0.
template <class F>
void for_each_permutation_fixing_zero(std::size_t n, F&& f) {
  std::vector<Element> image(n);
  std::iota(image.begin(), image.end(), Element{0});
  do {
    f(GroupMap(image));
  } while (std::next_permutation(image.begin() + 1, image.end()));
}

/// Aut(G) by checking every permutation fixing the identity. Small n only.
inline std::vector<GroupMap> brute_force_automorphisms(const FiniteGroup& G) {
  std::vector<GroupMap> out;
  for_each_permutation_fixing_zero(G.order(), [&](const GroupMap& phi) {
    for (Element a = 0; a < G.order(); ++a)
      for (Element b = 0; b < G.order(); ++b)
        if (phi(G.mul(a, b)) != G.mul(phi(a), phi(b))) return;
    out.push_back(phi);
  });
  return out;
}

}  // namespace cca::test

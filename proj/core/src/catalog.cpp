#include "cca/catalog.hpp"

#include <algorithm>

namespace cca {

std::vector<std::shared_ptr<const FiniteGroup>> load_catalog(std::size_t max_order) {
  std::vector<std::shared_ptr<const FiniteGroup>> out;
  for (std::string_view spec : kCatalogSpecs) {
    // Orders are known up front only after parsing, so build under a generous
    // cap and filter.
    auto G = std::make_shared<const FiniteGroup>(build_group(spec, std::max<std::size_t>(max_order, 64)));
    if (G->order() <= max_order) out.push_back(std::move(G));
  }
  return out;
}

bool is_z4_x_z2(const FiniteGroup& G) {
  if (G.order() != 8 || !G.is_abelian()) return false;
  std::size_t involutions = 0, max_order = 1;
  for (Element x = 0; x < G.order(); ++x) {
    if (G.element_order(x) == 2) ++involutions;
    max_order = std::max(max_order, G.element_order(x));
  }
  return involutions == 3 && max_order == 4;
}

}  // namespace cca

#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "cca/group.hpp"

namespace cca {

/// Groups used by the verification suites: every branch of the
/// stabilizer classification and both sides of the Q8 x B dichotomy.
inline constexpr std::string_view kCatalogSpecs[] = {
    "Z2", "Z3",  "Z4",  "Z5",  "Z6", "Z8",      "Z2^2",    "Z2^3",  "Z4xZ2",
    "D6", "D8",  "D12", "Q8",  "Dic(Z8)", "Dic(Z6)", "Q8xZ2", "Q8xZ3", "Q8xZ2^2",
};

/// Catalog groups of order <= max_order, in catalog order.
std::vector<std::shared_ptr<const FiniteGroup>> load_catalog(std::size_t max_order);

/// Abelian of order 8 with exponent 4 and three involutions.
bool is_z4_x_z2(const FiniteGroup& G);

}  // namespace cca

#pragma once

#include <optional>
#include <string>

#include "cca/classify.hpp"
#include "cca/group_map.hpp"

namespace cca {

/// {mode, stabilized, maps: [[image indices]]}, maps in lexicographic order.
std::string to_json(const AutomorphismSet& set);

/// {group, kind, stabilizer_size, cca, strongly_cca}, plus `agreement`
/// when a brute-force comparison was run.
std::string classification_json(const FiniteGroup& G, const CompleteClassification& c,
                                 const CompleteVerdict& verdict, std::optional<bool> agreement = std::nullopt);

/// Order, centre size, abelian flag and element labels.
std::string group_json(const FiniteGroup& G);

}  // namespace cca

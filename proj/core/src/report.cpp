#include "cca/report.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace cca {

namespace {

std::vector<Element> as_vector(const GroupMap& phi) { return {phi.image().begin(), phi.image().end()}; }

}  // namespace

std::string to_json(const AutomorphismSet& set) {
  std::vector<GroupMap> maps = set.maps;
  normalize(maps);
  nlohmann::ordered_json j;
  j["mode"] = std::string(to_string(set.mode));
  j["stabilized"] = set.stabilized;
  auto arr = nlohmann::ordered_json::array();
  for (const GroupMap& phi : maps) arr.push_back(as_vector(phi));
  j["maps"] = std::move(arr);
  return j.dump();
}

std::string classification_json(const FiniteGroup& G, const CompleteClassification& c,
                                 const CompleteVerdict& verdict, std::optional<bool> agreement) {
  nlohmann::ordered_json j;
  j["group"] = G.name();
  j["kind"] = std::string(to_string(c.kind));
  j["stabilizer_size"] = c.predicted_stabilizer.size();
  j["cca"] = verdict.cca;
  j["strongly_cca"] = verdict.strongly_cca;
  if (agreement) j["agreement"] = *agreement;
  return j.dump();
}

std::string group_json(const FiniteGroup& G) {
  nlohmann::ordered_json j;
  j["group"] = G.name();
  j["order"] = G.order();
  j["abelian"] = G.is_abelian();
  j["centre_size"] = centre(G).size();
  std::vector<std::string> labels;
  std::vector<std::size_t> orders;
  for (Element x = 0; x < G.order(); ++x) {
    labels.push_back(G.label(x));
    orders.push_back(G.element_order(x));
  }
  j["labels"] = labels;
  j["element_orders"] = orders;
  return j.dump();
}

}  // namespace cca

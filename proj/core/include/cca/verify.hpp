#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cca/cayley.hpp"
#include "cca/group_map.hpp"

namespace cca {

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Collects named pass/fail checks, optionally echoing one line per check.
class Report {
 public:
  explicit Report(std::ostream* log = nullptr) : log_(log) {}

  bool check(bool ok, std::string name, std::string detail = {});
  void note(const std::string& line);

  bool ok() const noexcept { return failed_ == 0; }
  std::size_t passed() const noexcept { return outcomes_.size() - failed_; }
  std::size_t failed() const noexcept { return failed_; }
  const std::vector<CheckOutcome>& outcomes() const noexcept { return outcomes_; }
  std::optional<CheckOutcome> first_failure() const;

 private:
  std::ostream* log_;
  std::vector<CheckOutcome> outcomes_;
  std::size_t failed_ = 0;
};

struct SuiteOptions {
  std::size_t max_order = 32;
  /// Random non-complete connected graphs per group in the lemma suite.
  std::size_t random_graphs = 20;
  std::size_t random_graph_max_order = 16;
  /// Orders up to which the decomposition suite also checks every
  /// translate and the product-set identity.
  std::size_t full_group_max_order = 16;
  /// Orders up to which stabilizers are compared against a scan of all
  /// permutations fixing 1.
  std::size_t oracle_max_order = 8;
  std::uint64_t seed = 0x5eed'cca1ULL;
  /// Restrict a suite to one group instead of the catalog.
  std::optional<std::string> group;
};

/// Closed under composition (hence a group, being finite). `maps` must be sorted.
bool is_closed_under_composition(const std::vector<GroupMap>& maps);

/// Up to `count` distinct non-complete connected connection sets, each a
/// union of colour classes. When fewer exist, all of them are returned.
std::vector<ElementSet> random_connected_connection_sets(const FiniteGroup& G, std::size_t count,
                                                         std::mt19937_64& rng);

/// All the per-graph lemma properties on one Cayley graph.
void check_graph_lemmas(const CayleyGraph& X, Report& report, std::string_view label,
                        const SuiteOptions& options = {});

/// Group-level properties: subgroup closure of G \ H, affineness oracle,
/// and the direct-product identities of the Q8 x B decomposition.
void check_group_properties(const std::shared_ptr<const FiniteGroup>& G, Report& report);

void suite_lemmas(Report& report, const SuiteOptions& options);
void suite_classification(Report& report, const SuiteOptions& options);
void suite_decomposition(Report& report, const SuiteOptions& options);

struct D12ScanResult {
  std::size_t graphs = 0;
  std::size_t cca = 0;
  std::size_t strongly_cca = 0;
  std::optional<ElementSet> not_strongly_example;
};

/// Every connected Cayley graph of D12: all CCA, at least one not strongly CCA.
D12ScanResult suite_d12(Report& report);

struct NormalSearchEntry {
  std::string group;
  std::size_t connected_graphs_scanned = 0;
  std::optional<ElementSet> normal_connection_set;
  bool exempt = false;  ///< Z4 x Z2 or a hamiltonian 2-group
};

/// For each group, look for a connected normal Cayley graph.
std::vector<NormalSearchEntry> suite_normal_search(Report& report, const SuiteOptions& options);

/// Graph automorphisms fixing 1 are all group automorphisms.
bool is_normal_cayley_graph(const CayleyGraph& X);

inline constexpr std::string_view kSuiteNames[] = {"lemmas", "classif", "decomposition", "d12", "normal-search"};

/// Dispatches by suite name; throws PreconditionError for an unknown name.
void run_suite(std::string_view name, Report& report, const SuiteOptions& options);

}  // namespace cca

#pragma once

#include "qcf/coupling.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qcf {

struct NamedGraph {
  std::string source_name;
  CouplingGraph graph;
};

/// Whole-backend picture assembled from per-circuit derived subgraphs.
/// `assembled` is the union of all per-circuit edge sets and is insensitive
/// to pool order; `coverage_curve` follows the pool in the given order and
/// is order-sensitive.
struct AssemblyReport {
  CouplingGraph assembled;
  std::vector<NamedGraph> per_circuit;
  std::vector<std::pair<int, double>> coverage_curve;

  std::string to_json() const;
  std::string coverage_csv() const;
};

AssemblyReport assemble(
    const std::vector<NamedGraph>& pool,
    const std::optional<CouplingGraph>& truth = std::nullopt);

/// Induced subgraph of `derived` on the physical images of the user's
/// logical qubits. Throws when a logical index is missing from the layout.
CouplingGraph project_user_subgraph(const CouplingGraph& derived,
                                    const std::map<int, int>& layout,
                                    const std::set<int>& user_logical);

} // namespace qcf

#include "qcf/assembly.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>

namespace qcf {

std::string AssemblyReport::to_json() const {
  nlohmann::ordered_json j;
  j["assembled"] = nlohmann::ordered_json::parse(assembled.to_json());
  auto circuits = nlohmann::ordered_json::array();
  for (const NamedGraph& entry : per_circuit) {
    nlohmann::ordered_json item;
    item["source"] = entry.source_name;
    item["graph"] = nlohmann::ordered_json::parse(entry.graph.to_json());
    circuits.push_back(std::move(item));
  }
  j["per_circuit"] = std::move(circuits);
  if (!coverage_curve.empty()) {
    auto curve = nlohmann::ordered_json::array();
    for (const auto& [used, percent] : coverage_curve) {
      curve.push_back({used, percent});
    }
    j["coverage_curve"] = std::move(curve);
  }
  return j.dump();
}

std::string AssemblyReport::coverage_csv() const {
  std::ostringstream out;
  out << "circuits_used,coverage_percent\n";
  for (const auto& [used, percent] : coverage_curve) {
    out << used << "," << percent << "\n";
  }
  return out.str();
}

AssemblyReport assemble(const std::vector<NamedGraph>& pool,
                        const std::optional<CouplingGraph>& truth) {
  AssemblyReport report;
  report.per_circuit = pool;

  std::optional<int> universe;
  for (const NamedGraph& entry : pool) {
    if (entry.graph.num_qubits()) {
      universe = universe ? std::max(*universe, *entry.graph.num_qubits())
                          : *entry.graph.num_qubits();
    }
  }
  report.assembled.set_num_qubits(universe);

  int used = 0;
  for (const NamedGraph& entry : pool) {
    report.assembled.merge(entry.graph);
    ++used;
    if (truth) {
      report.coverage_curve.emplace_back(
          used, edge_coverage_percent(report.assembled, *truth));
    }
  }
  return report;
}

CouplingGraph project_user_subgraph(const CouplingGraph& derived,
                                    const std::map<int, int>& layout,
                                    const std::set<int>& user_logical) {
  std::set<int> physical;
  for (int logical : user_logical) {
    auto it = layout.find(logical);
    if (it == layout.end()) {
      throw std::invalid_argument("logical qubit " + std::to_string(logical) +
                                  " missing from layout");
    }
    physical.insert(it->second);
  }
  return derived.induced(physical);
}

} // namespace qcf

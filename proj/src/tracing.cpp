#include "qcf/tracing.hpp"

#include "qcf/extraction.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace qcf {

namespace {

bool contained_in(const CouplingGraph& derived, const BackendRecord& record,
                  int& contained_edges) {
  contained_edges = 0;
  bool all = true;
  for (const Edge& e : derived.edges()) {
    if (e.second < record.num_qubits && record.topology.contains(e)) {
      ++contained_edges;
    } else {
      all = false;
    }
  }
  return all;
}

} // namespace

const char* verdict_name(TraceOutcome::Verdict verdict) {
  switch (verdict) {
    case TraceOutcome::Verdict::Unique: return "unique";
    case TraceOutcome::Verdict::Ambiguous: return "ambiguous";
    case TraceOutcome::Verdict::Unmatched: return "unmatched";
  }
  return "?";
}

TraceOutcome trace(const CouplingGraph& derived,
                   const std::vector<BackendRecord>& registry) {
  if (registry.empty()) {
    throw std::invalid_argument("trace: registry is empty");
  }
  TraceOutcome outcome;
  for (const BackendRecord& record : registry) {
    int contained = 0;
    if (contained_in(derived, record, contained)) {
      outcome.candidates.push_back(record.name);
    }
    outcome.matched_edges = std::max(outcome.matched_edges, contained);
  }
  std::sort(outcome.candidates.begin(), outcome.candidates.end());
  if (outcome.candidates.empty()) {
    outcome.verdict = TraceOutcome::Verdict::Unmatched;
  } else if (outcome.candidates.size() == 1) {
    outcome.verdict = TraceOutcome::Verdict::Unique;
  } else {
    outcome.verdict = TraceOutcome::Verdict::Ambiguous;
  }
  return outcome;
}

PoolTraceReport trace_pool(
    const std::vector<ParsedCircuit>& circuits,
    const std::vector<BackendRecord>& registry,
    const RecognizerConfig& config,
    const std::optional<std::map<std::string, std::string>>& truth_labels) {
  if (registry.empty()) {
    throw std::invalid_argument("trace_pool: registry is empty");
  }
  if (truth_labels) {
    for (const auto& [source, label] : *truth_labels) {
      const bool known =
          std::any_of(circuits.begin(), circuits.end(),
                      [&source](const ParsedCircuit& c) {
                        return c.source_name == source;
                      });
      if (!known) {
        throw std::invalid_argument("label references unknown source '" +
                                    source + "'");
      }
    }
  }

  PoolTraceReport report;
  int correct = 0;
  int labeled = 0;
  std::map<std::string, std::pair<int, int>> per_backend; // correct, total
  for (const ParsedCircuit& circuit : circuits) {
    const CouplingGraph derived = derive_coupling_map(circuit, config);
    TraceOutcome outcome = trace(derived, registry);
    if (truth_labels) {
      auto it = truth_labels->find(circuit.source_name);
      if (it != truth_labels->end()) {
        ++labeled;
        const bool hit =
            outcome.verdict == TraceOutcome::Verdict::Unique &&
            outcome.unique_name() == it->second;
        if (hit) ++correct;
        auto& bucket = per_backend[it->second];
        bucket.first += hit ? 1 : 0;
        bucket.second += 1;
      }
    }
    report.outcomes.emplace_back(circuit.source_name, std::move(outcome));
  }

  if (labeled > 0) {
    report.accuracy_percent =
        100.0 * correct / static_cast<double>(labeled);
    std::map<std::string, double> per_backend_accuracy;
    for (const auto& [name, bucket] : per_backend) {
      per_backend_accuracy[name] =
          100.0 * bucket.first / static_cast<double>(bucket.second);
    }
    report.per_backend_accuracy = std::move(per_backend_accuracy);
  }
  return report;
}

std::string PoolTraceReport::to_json() const {
  nlohmann::ordered_json j;
  auto list = nlohmann::ordered_json::array();
  for (const auto& [source, outcome] : outcomes) {
    nlohmann::ordered_json item;
    item["source"] = source;
    item["verdict"] = verdict_name(outcome.verdict);
    item["candidates"] = outcome.candidates;
    item["matched_edges"] = outcome.matched_edges;
    list.push_back(std::move(item));
  }
  j["outcomes"] = std::move(list);
  if (accuracy_percent) j["accuracy_percent"] = *accuracy_percent;
  if (per_backend_accuracy) j["per_backend_accuracy"] = *per_backend_accuracy;
  return j.dump();
}

std::string PoolTraceReport::to_table() const {
  std::ostringstream out;
  std::size_t name_width = 6;
  for (const auto& [source, outcome] : outcomes) {
    name_width = std::max(name_width, source.size());
  }
  out << std::left << std::setw(static_cast<int>(name_width) + 2) << "source"
      << std::setw(12) << "verdict" << "candidates\n";
  for (const auto& [source, outcome] : outcomes) {
    out << std::left << std::setw(static_cast<int>(name_width) + 2) << source
        << std::setw(12) << verdict_name(outcome.verdict);
    for (std::size_t i = 0; i < outcome.candidates.size(); ++i) {
      if (i) out << ",";
      out << outcome.candidates[i];
    }
    out << "\n";
  }
  if (accuracy_percent) {
    out << "accuracy: " << *accuracy_percent << "%\n";
  }
  if (per_backend_accuracy) {
    for (const auto& [name, value] : *per_backend_accuracy) {
      out << "  " << name << ": " << value << "%\n";
    }
  }
  return out.str();
}

std::vector<BackendRecord> parse_registry(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("registry JSON: ") + e.what());
  }
  if (!j.is_array()) {
    throw std::invalid_argument("registry JSON: expected an array");
  }
  std::vector<BackendRecord> registry;
  std::set<std::string> names;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("name") ||
        !item["name"].is_string() || !item.contains("num_qubits") ||
        !item["num_qubits"].is_number_integer() || !item.contains("edges")) {
      throw std::invalid_argument(
          "registry JSON: each entry needs name, num_qubits and edges");
    }
    BackendRecord record;
    record.name = item["name"].get<std::string>();
    if (!names.insert(record.name).second) {
      throw std::invalid_argument("registry JSON: duplicate backend name '" +
                                  record.name + "'");
    }
    record.num_qubits = item["num_qubits"].get<int>();
    nlohmann::ordered_json graph;
    graph["num_qubits"] = record.num_qubits;
    graph["edges"] = item["edges"];
    record.topology = CouplingGraph::from_json(graph.dump());
    registry.push_back(std::move(record));
  }
  return registry;
}

std::vector<BackendRecord> load_registry(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open registry file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_registry(buffer.str());
}

std::map<std::string, std::string> parse_labels(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("labels JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw std::invalid_argument("labels JSON: expected an object");
  }
  std::map<std::string, std::string> labels;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) {
      throw std::invalid_argument("labels JSON: value for '" + key +
                                  "' must be a backend name string");
    }
    labels[key] = value.get<std::string>();
  }
  return labels;
}

std::map<std::string, std::string> load_labels(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open labels file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_labels(buffer.str());
}

} // namespace qcf

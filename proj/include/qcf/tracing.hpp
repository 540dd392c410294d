#pragma once

#include "qcf/coupling.hpp"
#include "qcf/instruction.hpp"
#include "qcf/swap_scan.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qcf {

struct BackendRecord {
  std::string name;
  CouplingGraph topology;
  int num_qubits = 0;
};

/// Result of tracing one derived subgraph against a backend registry.
/// `candidates` holds every backend whose coupling map contains all derived
/// edges under exact physical labels, sorted by name; the verdict classifies
/// the candidate count (1 = Unique, >= 2 = Ambiguous, 0 = Unmatched).
/// `matched_edges` is the largest number of derived edges contained in any
/// single backend.
struct TraceOutcome {
  enum class Verdict { Unique, Ambiguous, Unmatched };

  Verdict verdict = Verdict::Unmatched;
  std::vector<std::string> candidates;
  int matched_edges = 0;

  const std::string& unique_name() const { return candidates.front(); }
};

const char* verdict_name(TraceOutcome::Verdict verdict);

struct PoolTraceReport {
  std::vector<std::pair<std::string, TraceOutcome>> outcomes;
  std::optional<double> accuracy_percent;
  std::optional<std::map<std::string, double>> per_backend_accuracy;

  std::string to_json() const;
  std::string to_table() const;
};

/// Labeled edge-set containment against every registry backend; no
/// isomorphism search. Throws on an empty registry.
TraceOutcome trace(const CouplingGraph& derived,
                   const std::vector<BackendRecord>& registry);

/// Derives each circuit's coupling map and traces it. A circuit counts as
/// correct only when its verdict is Unique and matches its ground-truth
/// label.
PoolTraceReport trace_pool(
    const std::vector<ParsedCircuit>& circuits,
    const std::vector<BackendRecord>& registry,
    const RecognizerConfig& config = {},
    const std::optional<std::map<std::string, std::string>>& truth_labels =
        std::nullopt);

/// Registry file: JSON array of {"name", "num_qubits", "edges"}. Names must
/// be unique and edges in range.
std::vector<BackendRecord> parse_registry(const std::string& text);
std::vector<BackendRecord> load_registry(const std::string& path);

/// Labels file: JSON object mapping circuit source names to backend names.
std::map<std::string, std::string> load_labels(const std::string& path);
std::map<std::string, std::string> parse_labels(const std::string& text);

} // namespace qcf

#pragma once

#include "qcf/coupling.hpp"
#include "qcf/instruction.hpp"
#include "qcf/swap_scan.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace qcf {

/// Symmetric boolean tracker over the circuit's qubit universe recording
/// which pairs have had a SWAP. Entries are never cleared.
class SwapHistory {
 public:
  using Flags = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

  explicit SwapHistory(int num_qubits)
      : flags_(Flags::Constant(num_qubits, num_qubits, false)) {}

  void record(int a, int b) {
    flags_(a, b) = true;
    flags_(b, a) = true;
  }

  bool seen(int a, int b) const { return flags_(a, b) || flags_(b, a); }

  int size() const { return static_cast<int>(flags_.rows()); }
  int true_count() const { return static_cast<int>(flags_.count()); }
  const Flags& flags() const { return flags_; }

 private:
  Flags flags_;
};

struct ExtractOptions {
  /// Deviation switch: also add each SWAP pair as an edge. The base
  /// algorithm records the pair in the history only.
  bool include_swap_edges = false;
};

struct ExtractionResult {
  CouplingGraph graph;
  SwapHistory history;
  std::vector<SwapEvent> events;
  std::vector<std::string> diagnostics;
};

/// Single pass over the instruction stream: a recognized SWAP marks its pair
/// in the history and consumes its span; any other 2-qubit instruction adds
/// an edge unless the pair is already in the history. 1- and 3-qubit
/// instructions contribute no edges (3-qubit ones are diagnosed).
ExtractionResult extract_coupling(const ParsedCircuit& circuit,
                                  const RecognizerConfig& config = {},
                                  const ExtractOptions& options = {});

CouplingGraph derive_coupling_map(const ParsedCircuit& circuit,
                                  const RecognizerConfig& config = {},
                                  bool include_swap_edges = false);

} // namespace qcf

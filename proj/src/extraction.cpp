#include "qcf/extraction.hpp"

#include <map>

namespace qcf {

ExtractionResult extract_coupling(const ParsedCircuit& circuit,
                                  const RecognizerConfig& config,
                                  const ExtractOptions& options) {
  ScanReport scan = scan_swaps(circuit, config);

  ExtractionResult result{CouplingGraph(circuit.num_qubits),
                          SwapHistory(circuit.num_qubits),
                          std::move(scan.events),
                          {}};
  std::map<std::size_t, const SwapEvent*> event_at;
  for (const SwapEvent& event : result.events) {
    event_at[event.begin] = &event;
  }
  for (const ScanDiagnostic& diagnostic : scan.diagnostics) {
    result.diagnostics.push_back("instruction " +
                                 std::to_string(diagnostic.index) + ": " +
                                 diagnostic.message);
  }

  std::size_t i = 0;
  const std::size_t n = circuit.instructions.size();
  while (i < n) {
    auto it = event_at.find(i);
    if (it != event_at.end()) {
      const SwapEvent& event = *it->second;
      result.history.record(event.pair.first, event.pair.second);
      if (options.include_swap_edges) {
        result.graph.add_edge(event.pair.first, event.pair.second);
      }
      i = event.end;
      continue;
    }
    const Instruction& instruction = circuit.instructions[i];
    if (instruction.qubits.size() == 2) {
      const int q1 = instruction.qubits[0];
      const int q2 = instruction.qubits[1];
      if (!result.history.seen(q1, q2)) {
        result.graph.add_edge(q1, q2);
      }
    } else if (instruction.qubits.size() == 3) {
      result.diagnostics.push_back(
          "instruction " + std::to_string(i) + ": 3-qubit gate '" +
          instruction.name +
          "' contributes no edge (input may not be transpiled)");
    }
    ++i;
  }
  return result;
}

CouplingGraph derive_coupling_map(const ParsedCircuit& circuit,
                                  const RecognizerConfig& config,
                                  bool include_swap_edges) {
  return extract_coupling(circuit, config, ExtractOptions{include_swap_edges})
      .graph;
}

} // namespace qcf

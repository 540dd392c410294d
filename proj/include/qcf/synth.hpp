#pragma once

#include "qcf/coupling.hpp"
#include "qcf/instruction.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qcf {

/// A named connected topology resolved to an explicit coupling graph.
struct TopologySpec {
  std::string label;
  CouplingGraph graph;

  int qubit_count() const { return graph.num_qubits().value_or(0); }
};

TopologySpec linear_topology(int n);
TopologySpec loop_topology(int n);
/// Hub qubit with three attached path arms; n = 1 + arm_a + arm_b + arm_c.
TopologySpec t_topology(int arm_a, int arm_b, int arm_c);
/// Two path bars joined through a path bridge at their middle qubits;
/// n = 2 * bar + bridge.
TopologySpec h_topology(int bar, int bridge);
/// Convenience splits for a target qubit count.
TopologySpec t_topology_for(int n);
TopologySpec h_topology_for(int n);
TopologySpec grid_topology(int rows, int cols);
TopologySpec explicit_topology(std::string label, CouplingGraph graph);

/// How a routing SWAP is written into the emitted stream.
enum class SwapDisguise { Direct, ThreeCnot, IswapPhase, PauliRotationTriple };

struct SynthConfig {
  enum class LayoutMode { Identity, Random };

  int num_logical = 0;
  int num_2q_ops = 0;
  LayoutMode layout_mode = LayoutMode::Identity;
  unsigned seed = 0;
  /// Routing SWAPs cycle round-robin through this set. Must be non-empty.
  std::vector<SwapDisguise> disguise = {SwapDisguise::Direct};
  /// Multi-tenant scenario: logical index where the appended user program
  /// begins. Logicals below it belong to the dummy program; the two segments
  /// are placed on disjoint connected regions and routed within them.
  std::optional<int> user_boundary;
};

struct SynthResult {
  ParsedCircuit circuit;
  CouplingGraph ground_truth;
  std::map<int, int> layout; // initial logical -> physical
  /// Set in multi-tenant mode: index of the first user-program instruction
  /// and the user's logical qubits.
  std::optional<std::size_t> user_instruction_begin;
  std::set<int> user_logicals;
};

/// Generates a transpiled-like circuit: random 2-qubit operations routed
/// over the topology with BFS shortest paths (ties broken toward smaller
/// qubit indices), SWAPs emitted in the configured disguises. Every emitted
/// 2-qubit interaction acts on a topology edge. Deterministic per seed.
SynthResult synthesize(const TopologySpec& topology, const SynthConfig& config);

/// Edge-enumeration prefix (one direct cx per topology edge) followed by
/// synthesize's routed random operations: derived map equals ground truth by
/// construction.
SynthResult full_coverage_fixture(const TopologySpec& topology,
                                  const SynthConfig& config);

/// One cx per listed edge, in the given order.
ParsedCircuit edge_enumeration_circuit(const TopologySpec& topology,
                                       const std::vector<Edge>& edges,
                                       const std::string& source_name = "");

/// Splits the topology's edges into circuits of direct cx gates, each using
/// at most `max_qubits_per_circuit` distinct qubits; their derived maps
/// union to the full topology.
std::vector<ParsedCircuit> coverage_fixtures(const TopologySpec& topology,
                                             int max_qubits_per_circuit);

/// Loop topology of n qubits (n >= 7) where two adjacent edges are exercised
/// only by routing SWAPs: the derived map misses exactly those two edges
/// unless SWAP pairs are counted as edges.
SynthResult loop_gap_fixture(int n);

/// Serializes a standard-gate circuit back to OpenQASM 2.0 text.
std::string emit_qasm(const ParsedCircuit& circuit);

std::string layout_to_json(const std::map<int, int>& layout);

} // namespace qcf

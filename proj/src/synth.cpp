#include "qcf/synth.hpp"

#include "qcf/unitary.hpp"

#include <algorithm>
#include <iomanip>
#include <numbers>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qcf {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<std::vector<int>> adjacency_lists(const CouplingGraph& graph) {
  const int n = graph.num_qubits().value_or(0);
  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(n));
  for (const Edge& e : graph.edges()) {
    adjacency[static_cast<std::size_t>(e.first)].push_back(e.second);
    adjacency[static_cast<std::size_t>(e.second)].push_back(e.first);
  }
  for (auto& neighbors : adjacency) {
    std::sort(neighbors.begin(), neighbors.end());
  }
  return adjacency;
}

// BFS shortest path from..to inclusive, restricted to `allowed` when given.
// Sorted adjacency plus FIFO order makes the tie-break deterministic toward
// smaller qubit indices.
std::vector<int> bfs_path(const std::vector<std::vector<int>>& adjacency,
                          int from, int to, const std::set<int>* allowed) {
  const int n = static_cast<int>(adjacency.size());
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::queue<int> frontier;
  seen[static_cast<std::size_t>(from)] = true;
  frontier.push(from);
  while (!frontier.empty() && !seen[static_cast<std::size_t>(to)]) {
    const int q = frontier.front();
    frontier.pop();
    for (int next : adjacency[static_cast<std::size_t>(q)]) {
      if (seen[static_cast<std::size_t>(next)]) continue;
      if (allowed && !allowed->count(next)) continue;
      seen[static_cast<std::size_t>(next)] = true;
      parent[static_cast<std::size_t>(next)] = q;
      frontier.push(next);
    }
  }
  if (!seen[static_cast<std::size_t>(to)]) return {};
  std::vector<int> path;
  for (int q = to; q != -1; q = parent[static_cast<std::size_t>(q)]) {
    path.push_back(q);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::set<int> bfs_region(const std::vector<std::vector<int>>& adjacency,
                         int seed, std::size_t size) {
  std::set<int> region;
  std::queue<int> frontier;
  frontier.push(seed);
  region.insert(seed);
  while (!frontier.empty() && region.size() < size) {
    const int q = frontier.front();
    frontier.pop();
    for (int next : adjacency[static_cast<std::size_t>(q)]) {
      if (region.size() >= size) break;
      if (region.insert(next).second) frontier.push(next);
    }
  }
  return region;
}

bool subset_connected(const std::vector<std::vector<int>>& adjacency,
                      const std::set<int>& subset) {
  if (subset.size() <= 1) return true;
  std::set<int> seen;
  std::queue<int> frontier;
  frontier.push(*subset.begin());
  seen.insert(*subset.begin());
  while (!frontier.empty()) {
    const int q = frontier.front();
    frontier.pop();
    for (int next : adjacency[static_cast<std::size_t>(q)]) {
      if (subset.count(next) && seen.insert(next).second) frontier.push(next);
    }
  }
  return seen.size() == subset.size();
}

// Connected region of exactly `size` qubits whose complement is also
// connected. Seeds are tried from the highest index down.
std::set<int> pick_user_region(const std::vector<std::vector<int>>& adjacency,
                               int n, std::size_t size) {
  for (int seed = n - 1; seed >= 0; --seed) {
    std::set<int> region = bfs_region(adjacency, seed, size);
    if (region.size() != size) continue;
    std::set<int> complement;
    for (int q = 0; q < n; ++q) {
      if (!region.count(q)) complement.insert(q);
    }
    if (subset_connected(adjacency, complement)) return region;
  }
  throw std::invalid_argument(
      "cannot split topology into connected dummy/user regions");
}

class Generator {
 public:
  Generator(const TopologySpec& topology, const SynthConfig& config)
      : topology_(topology),
        config_(config),
        adjacency_(adjacency_lists(topology.graph)),
        rng_(config.seed) {
    n_ = topology.qubit_count();
    if (config.disguise.empty()) {
      throw std::invalid_argument("disguise set must be non-empty");
    }
    if (config.num_2q_ops < 0) {
      throw std::invalid_argument("num_2q_ops must be non-negative");
    }
    if (config.num_logical > n_) {
      throw std::invalid_argument("num_logical exceeds topology qubits");
    }
    if (!topology.graph.connected()) {
      throw std::invalid_argument("topology '" + topology.label +
                                  "' is not connected");
    }
    if (config.user_boundary &&
        (*config.user_boundary < 0 ||
         *config.user_boundary > config.num_logical)) {
      throw std::invalid_argument("user_boundary out of logical range");
    }
  }

  SynthResult run() {
    SynthResult result;
    result.circuit.num_qubits = n_;
    result.ground_truth = topology_.graph;

    if (config_.user_boundary) {
      run_multi_tenant(result);
    } else {
      std::vector<int> logicals(static_cast<std::size_t>(config_.num_logical));
      for (int l = 0; l < config_.num_logical; ++l) {
        logicals[static_cast<std::size_t>(l)] = l;
      }
      place(logicals, all_qubits(), config_.layout_mode);
      emit_ops(result.circuit, logicals, nullptr, config_.num_2q_ops);
    }

    result.layout = initial_layout_;
    result.circuit.layout = initial_layout_;
    if (config_.user_boundary) {
      result.user_instruction_begin = user_begin_;
      for (int l = *config_.user_boundary; l < config_.num_logical; ++l) {
        result.user_logicals.insert(l);
      }
    }
    return result;
  }

 private:
  std::set<int> all_qubits() const {
    std::set<int> qubits;
    for (int q = 0; q < n_; ++q) qubits.insert(q);
    return qubits;
  }

  void run_multi_tenant(SynthResult& result) {
    const int boundary = *config_.user_boundary;
    const std::size_t user_count =
        static_cast<std::size_t>(config_.num_logical - boundary);

    std::set<int> user_region;
    std::set<int> dummy_region = all_qubits();
    if (user_count > 0) {
      user_region = pick_user_region(adjacency_, n_, user_count);
      for (int q : user_region) dummy_region.erase(q);
    }

    std::vector<int> dummy_logicals;
    for (int l = 0; l < boundary; ++l) dummy_logicals.push_back(l);
    std::vector<int> user_logicals;
    for (int l = boundary; l < config_.num_logical; ++l) {
      user_logicals.push_back(l);
    }

    place(dummy_logicals, dummy_region, config_.layout_mode);
    place(user_logicals, user_region, config_.layout_mode);

    const int dummy_ops = dummy_logicals.size() >= 2
                              ? (user_logicals.size() >= 2
                                     ? config_.num_2q_ops / 2
                                     : config_.num_2q_ops)
                              : 0;
    const int user_ops =
        user_logicals.size() >= 2 ? config_.num_2q_ops - dummy_ops : 0;

    emit_ops(result.circuit, dummy_logicals, &dummy_region, dummy_ops);
    user_begin_ = result.circuit.instructions.size();
    emit_ops(result.circuit, user_logicals, &user_region, user_ops);
  }

  void place(const std::vector<int>& logicals, const std::set<int>& region,
             SynthConfig::LayoutMode mode) {
    if (logicals.size() > region.size()) {
      throw std::invalid_argument("region too small for logical qubits");
    }
    std::vector<int> slots(region.begin(), region.end());
    if (mode == SynthConfig::LayoutMode::Random) {
      std::shuffle(slots.begin(), slots.end(), rng_);
    }
    for (std::size_t i = 0; i < logicals.size(); ++i) {
      const int logical = logicals[i];
      const int physical = slots[i];
      position_[logical] = physical;
      occupant_[physical] = logical;
      initial_layout_[logical] = physical;
    }
  }

  void emit_ops(ParsedCircuit& circuit, const std::vector<int>& logicals,
                const std::set<int>* region, int count) {
    if (count > 0 && logicals.size() < 2) {
      throw std::invalid_argument("need at least 2 logical qubits for ops");
    }
    for (int k = 0; k < count; ++k) {
      std::uniform_int_distribution<std::size_t> pick(0, logicals.size() - 1);
      const std::size_t i = pick(rng_);
      std::size_t j = pick(rng_);
      while (j == i) j = pick(rng_);
      route_and_apply(circuit, logicals[i], logicals[j], region);
    }
  }

  void route_and_apply(ParsedCircuit& circuit, int l1, int l2,
                       const std::set<int>* region) {
    const std::vector<int> path =
        bfs_path(adjacency_, position_[l1], position_[l2], region);
    if (path.size() < 2) {
      throw std::invalid_argument("no route between logical qubits " +
                                  std::to_string(l1) + " and " +
                                  std::to_string(l2));
    }
    for (std::size_t step = 0; step + 2 < path.size(); ++step) {
      emit_swap(circuit, path[step], path[step + 1]);
    }
    emit_edge_gate(circuit, "cx", path[path.size() - 2], path.back());
  }

  void emit_swap(ParsedCircuit& circuit, int p, int q) {
    const SwapDisguise disguise =
        config_.disguise[disguise_cursor_++ % config_.disguise.size()];
    switch (disguise) {
      case SwapDisguise::Direct:
        emit_edge_gate(circuit, "swap", p, q);
        break;
      case SwapDisguise::ThreeCnot:
        emit_edge_gate(circuit, "cx", p, q);
        emit_edge_gate(circuit, "cx", q, p);
        emit_edge_gate(circuit, "cx", p, q);
        break;
      case SwapDisguise::IswapPhase:
        emit_edge_gate(circuit, "iswap", p, q);
        circuit.instructions.emplace_back("sdg", std::vector<int>{p});
        circuit.instructions.emplace_back("sdg", std::vector<int>{q});
        break;
      case SwapDisguise::PauliRotationTriple:
        emit_edge_gate(circuit, "rxx", p, q, kPi / 2.0);
        emit_edge_gate(circuit, "ryy", p, q, kPi / 2.0);
        emit_edge_gate(circuit, "rzz", p, q, kPi / 2.0);
        break;
    }
    swap_positions(p, q);
  }

  void emit_edge_gate(ParsedCircuit& circuit, const std::string& name, int p,
                      int q, std::optional<double> angle = std::nullopt) {
    if (!topology_.graph.contains(p, q)) {
      throw std::logic_error("generator bug: gate on non-edge (" +
                             std::to_string(p) + "," + std::to_string(q) +
                             ")");
    }
    std::vector<double> params;
    if (angle) params.push_back(*angle);
    circuit.instructions.emplace_back(name, std::vector<int>{p, q},
                                      std::move(params));
  }

  void swap_positions(int p, int q) {
    auto at_p = occupant_.find(p);
    auto at_q = occupant_.find(q);
    const std::optional<int> lp =
        at_p != occupant_.end() ? std::optional<int>(at_p->second)
                                : std::nullopt;
    const std::optional<int> lq =
        at_q != occupant_.end() ? std::optional<int>(at_q->second)
                                : std::nullopt;
    occupant_.erase(p);
    occupant_.erase(q);
    if (lp) {
      occupant_[q] = *lp;
      position_[*lp] = q;
    }
    if (lq) {
      occupant_[p] = *lq;
      position_[*lq] = p;
    }
  }

  const TopologySpec& topology_;
  const SynthConfig& config_;
  std::vector<std::vector<int>> adjacency_;
  std::mt19937 rng_;
  int n_ = 0;
  std::map<int, int> position_;       // logical -> physical
  std::map<int, int> occupant_;       // physical -> logical
  std::map<int, int> initial_layout_;
  std::size_t disguise_cursor_ = 0;
  std::size_t user_begin_ = 0;
};

} // namespace

TopologySpec linear_topology(int n) {
  if (n < 1) throw std::invalid_argument("linear topology needs n >= 1");
  CouplingGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return {"linear" + std::to_string(n), std::move(g)};
}

TopologySpec loop_topology(int n) {
  if (n < 3) throw std::invalid_argument("loop topology needs n >= 3");
  CouplingGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  g.add_edge(n - 1, 0);
  return {"loop" + std::to_string(n), std::move(g)};
}

TopologySpec t_topology(int arm_a, int arm_b, int arm_c) {
  if (arm_a < 1 || arm_b < 1 || arm_c < 1) {
    throw std::invalid_argument("t topology arms must be >= 1");
  }
  const int n = 1 + arm_a + arm_b + arm_c;
  CouplingGraph g(n);
  int next = 1;
  for (int arm : {arm_a, arm_b, arm_c}) {
    int prev = 0; // hub
    for (int k = 0; k < arm; ++k) {
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  return {"t" + std::to_string(n), std::move(g)};
}

TopologySpec h_topology(int bar, int bridge) {
  if (bar < 2 || bridge < 1) {
    throw std::invalid_argument("h topology needs bar >= 2 and bridge >= 1");
  }
  const int n = 2 * bar + bridge;
  CouplingGraph g(n);
  for (int i = 0; i + 1 < bar; ++i) {
    g.add_edge(i, i + 1);             // left bar
    g.add_edge(bar + i, bar + i + 1); // right bar
  }
  const int bridge_begin = 2 * bar;
  for (int i = 0; i + 1 < bridge; ++i) {
    g.add_edge(bridge_begin + i, bridge_begin + i + 1);
  }
  const int mid = (bar - 1) / 2;
  g.add_edge(mid, bridge_begin);
  g.add_edge(bridge_begin + bridge - 1, bar + mid);
  return {"h" + std::to_string(n), std::move(g)};
}

TopologySpec t_topology_for(int n) {
  if (n < 4) throw std::invalid_argument("t topology needs n >= 4");
  const int total = n - 1;
  const int base = total / 3;
  const int rem = total % 3;
  return t_topology(base + (rem > 0 ? 1 : 0), base + (rem > 1 ? 1 : 0), base);
}

TopologySpec h_topology_for(int n) {
  if (n < 5) throw std::invalid_argument("h topology needs n >= 5");
  int bar = std::max(2, (2 * n) / 5);
  int bridge = n - 2 * bar;
  if (bridge < 1) {
    bar = (n - 1) / 2;
    bridge = n - 2 * bar;
  }
  return h_topology(bar, bridge);
}

TopologySpec grid_topology(int rows, int cols) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("grid topology needs positive dimensions");
  }
  CouplingGraph g(rows * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int q = r * cols + c;
      if (c + 1 < cols) g.add_edge(q, q + 1);
      if (r + 1 < rows) g.add_edge(q, q + cols);
    }
  }
  return {"grid" + std::to_string(rows) + "x" + std::to_string(cols),
          std::move(g)};
}

TopologySpec explicit_topology(std::string label, CouplingGraph graph) {
  if (!graph.num_qubits()) {
    int max_index = -1;
    for (const Edge& e : graph.edges()) max_index = std::max(max_index, e.second);
    graph.set_num_qubits(max_index + 1);
  }
  return {std::move(label), std::move(graph)};
}

SynthResult synthesize(const TopologySpec& topology,
                       const SynthConfig& config) {
  Generator generator(topology, config);
  return generator.run();
}

SynthResult full_coverage_fixture(const TopologySpec& topology,
                                  const SynthConfig& config) {
  SynthResult routed = synthesize(topology, config);
  std::vector<Edge> edges(topology.graph.edges().begin(),
                          topology.graph.edges().end());
  ParsedCircuit circuit = edge_enumeration_circuit(topology, edges);
  // Pattern break: without it the last enumeration cx can chain into a
  // ThreeCnot-disguised routing swap and be consumed by that event, losing
  // its edge.
  circuit.instructions.emplace_back("id", std::vector<int>{0});
  const std::size_t prefix = circuit.instructions.size();
  circuit.instructions.insert(circuit.instructions.end(),
                              routed.circuit.instructions.begin(),
                              routed.circuit.instructions.end());
  circuit.layout = routed.circuit.layout;
  routed.circuit = std::move(circuit);
  if (routed.user_instruction_begin) {
    *routed.user_instruction_begin += prefix;
  }
  return routed;
}

ParsedCircuit edge_enumeration_circuit(const TopologySpec& topology,
                                       const std::vector<Edge>& edges,
                                       const std::string& source_name) {
  ParsedCircuit circuit;
  circuit.num_qubits = topology.qubit_count();
  circuit.source_name = source_name;
  for (const Edge& e : edges) {
    if (!topology.graph.contains(e)) {
      throw std::invalid_argument("edge (" + std::to_string(e.first) + "," +
                                  std::to_string(e.second) +
                                  ") is not in the topology");
    }
    circuit.instructions.emplace_back("cx",
                                      std::vector<int>{e.first, e.second});
  }
  return circuit;
}

std::vector<ParsedCircuit> coverage_fixtures(const TopologySpec& topology,
                                             int max_qubits_per_circuit) {
  if (max_qubits_per_circuit < 2) {
    throw std::invalid_argument("coverage fixtures need at least 2 qubits");
  }
  std::vector<ParsedCircuit> fixtures;
  std::vector<Edge> group;
  std::set<int> used;
  auto flush = [&]() {
    if (group.empty()) return;
    ParsedCircuit circuit = edge_enumeration_circuit(
        topology, group,
        topology.label + "-part" + std::to_string(fixtures.size()));
    fixtures.push_back(std::move(circuit));
    group.clear();
    used.clear();
  };
  for (const Edge& e : topology.graph.edges()) {
    std::set<int> candidate = used;
    candidate.insert(e.first);
    candidate.insert(e.second);
    if (candidate.size() > static_cast<std::size_t>(max_qubits_per_circuit)) {
      flush();
      candidate = {e.first, e.second};
    }
    used = std::move(candidate);
    group.push_back(e);
  }
  flush();
  return fixtures;
}

SynthResult loop_gap_fixture(int n) {
  if (n < 7) throw std::invalid_argument("loop gap fixture needs n >= 7");
  TopologySpec topology = loop_topology(n);

  // The two edges reachable only through routing SWAPs.
  const Edge gap1 = make_edge(n - 4, n - 3);
  const Edge gap2 = make_edge(n - 3, n - 2);

  std::vector<Edge> enumerated;
  for (const Edge& e : topology.graph.edges()) {
    if (e != gap1 && e != gap2) enumerated.push_back(e);
  }

  SynthResult result;
  result.circuit = edge_enumeration_circuit(topology, enumerated,
                                            "loop-gap" + std::to_string(n));
  // One operation between physicals n-4 and n-1: the unique shortest path
  // crosses the gap edges as SWAP hops and lands the cx on an edge that is
  // already enumerated.
  result.circuit.instructions.emplace_back("swap",
                                           std::vector<int>{n - 4, n - 3});
  result.circuit.instructions.emplace_back("swap",
                                           std::vector<int>{n - 3, n - 2});
  result.circuit.instructions.emplace_back("cx",
                                           std::vector<int>{n - 2, n - 1});
  result.ground_truth = topology.graph;
  return result;
}

std::string emit_qasm(const ParsedCircuit& circuit) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "qreg q[" << circuit.num_qubits << "];\n";
  out << std::setprecision(17);
  for (const Instruction& instruction : circuit.instructions) {
    if (!is_standard_gate(instruction.name)) {
      throw std::invalid_argument("cannot emit non-standard gate '" +
                                  instruction.name + "' without a definition");
    }
    out << instruction.name;
    if (!instruction.params.empty()) {
      out << "(";
      for (std::size_t i = 0; i < instruction.params.size(); ++i) {
        if (i) out << ",";
        out << instruction.params[i];
      }
      out << ")";
    }
    out << " ";
    for (std::size_t i = 0; i < instruction.qubits.size(); ++i) {
      if (i) out << ",";
      out << "q[" << instruction.qubits[i] << "]";
    }
    out << ";\n";
  }
  return out.str();
}

std::string layout_to_json(const std::map<int, int>& layout) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [logical, physical] : layout) {
    if (!first) out << ",";
    first = false;
    out << "\"" << logical << "\":" << physical;
  }
  out << "}";
  return out.str();
}

} // namespace qcf

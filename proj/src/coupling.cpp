#include "qcf/coupling.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace qcf {

void CouplingGraph::add_edge(int a, int b) {
  if (a == b) {
    throw std::invalid_argument("coupling graph: self-loop edge (" +
                                std::to_string(a) + "," + std::to_string(b) +
                                ")");
  }
  if (a < 0 || b < 0) {
    throw std::invalid_argument("coupling graph: negative qubit index");
  }
  edges_.insert(make_edge(a, b));
}

bool CouplingGraph::contains(int a, int b) const {
  return edges_.count(make_edge(a, b)) > 0;
}

bool CouplingGraph::subgraph_of(const CouplingGraph& other) const {
  for (const Edge& e : edges_) {
    if (!other.contains(e)) return false;
  }
  return true;
}

void CouplingGraph::merge(const CouplingGraph& other) {
  edges_.insert(other.edges_.begin(), other.edges_.end());
}

CouplingGraph CouplingGraph::induced(const std::set<int>& qubits) const {
  CouplingGraph sub(num_qubits_);
  for (const Edge& e : edges_) {
    if (qubits.count(e.first) && qubits.count(e.second)) {
      sub.edges_.insert(e);
    }
  }
  return sub;
}

bool CouplingGraph::connected() const {
  std::set<int> universe;
  if (num_qubits_) {
    for (int i = 0; i < *num_qubits_; ++i) universe.insert(i);
  } else {
    for (const Edge& e : edges_) {
      universe.insert(e.first);
      universe.insert(e.second);
    }
  }
  if (universe.size() <= 1) return true;

  std::map<int, std::vector<int>> adjacency;
  for (const Edge& e : edges_) {
    adjacency[e.first].push_back(e.second);
    adjacency[e.second].push_back(e.first);
  }

  std::set<int> seen;
  std::queue<int> frontier;
  frontier.push(*universe.begin());
  seen.insert(*universe.begin());
  while (!frontier.empty()) {
    int q = frontier.front();
    frontier.pop();
    for (int next : adjacency[q]) {
      if (seen.insert(next).second) frontier.push(next);
    }
  }
  return seen.size() == universe.size();
}

std::string CouplingGraph::to_json() const {
  nlohmann::ordered_json j;
  if (num_qubits_) j["num_qubits"] = *num_qubits_;
  auto edge_list = nlohmann::ordered_json::array();
  for (const Edge& e : edges_) {
    edge_list.push_back({e.first, e.second});
  }
  j["edges"] = std::move(edge_list);
  return j.dump();
}

CouplingGraph CouplingGraph::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("coupling graph JSON: ") +
                                e.what());
  }
  if (!j.is_object() || !j.contains("edges") || !j["edges"].is_array()) {
    throw std::invalid_argument(
        "coupling graph JSON: expected object with an \"edges\" array");
  }
  CouplingGraph g;
  if (j.contains("num_qubits")) {
    if (!j["num_qubits"].is_number_integer() ||
        j["num_qubits"].get<int>() < 0) {
      throw std::invalid_argument(
          "coupling graph JSON: num_qubits must be a non-negative integer");
    }
    g.num_qubits_ = j["num_qubits"].get<int>();
  }
  for (const auto& pair : j["edges"]) {
    if (!pair.is_array() || pair.size() != 2 ||
        !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
      throw std::invalid_argument(
          "coupling graph JSON: each edge must be a pair of integers");
    }
    g.add_edge(pair[0].get<int>(), pair[1].get<int>());
  }
  if (g.num_qubits_) {
    for (const Edge& e : g.edges_) {
      if (e.second >= *g.num_qubits_) {
        throw std::invalid_argument(
            "coupling graph JSON: edge endpoint " + std::to_string(e.second) +
            " out of range for num_qubits " + std::to_string(*g.num_qubits_));
      }
    }
  }
  return g;
}

CouplingGraph CouplingGraph::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open coupling graph file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_json(buffer.str());
}

void CouplingGraph::save_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) {
    throw std::invalid_argument("cannot write coupling graph file: " + path);
  }
  out << to_json() << "\n";
}

int hamming_distance(const CouplingGraph& g1, const CouplingGraph& g2) {
  int differing = 0;
  for (const Edge& e : g1.edges()) {
    if (!g2.contains(e)) ++differing;
  }
  for (const Edge& e : g2.edges()) {
    if (!g1.contains(e)) ++differing;
  }
  return differing;
}

double edge_coverage_percent(const CouplingGraph& derived,
                             const CouplingGraph& truth) {
  if (truth.empty()) {
    throw std::invalid_argument("edge coverage: truth graph has no edges");
  }
  std::size_t shared = 0;
  for (const Edge& e : derived.edges()) {
    if (truth.contains(e)) ++shared;
  }
  return 100.0 * static_cast<double>(shared) /
         static_cast<double>(truth.edge_count());
}

} // namespace qcf

#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qcf {

using Edge = std::pair<int, int>; // canonical: first < second

inline Edge make_edge(int a, int b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

/// Undirected coupling map over integer-labeled physical qubits. Edges are
/// stored once in canonical (min,max) order; self-loops are rejected.
class CouplingGraph {
 public:
  CouplingGraph() = default;
  explicit CouplingGraph(std::optional<int> num_qubits)
      : num_qubits_(num_qubits) {}

  void add_edge(int a, int b);
  bool contains(int a, int b) const;
  bool contains(const Edge& e) const { return edges_.count(e) > 0; }

  const std::set<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  std::optional<int> num_qubits() const { return num_qubits_; }
  void set_num_qubits(std::optional<int> n) { num_qubits_ = n; }

  /// True iff every edge of this graph appears in `other` with identical
  /// labels.
  bool subgraph_of(const CouplingGraph& other) const;

  void merge(const CouplingGraph& other);

  /// Induced subgraph: edges with both endpoints in `qubits`.
  CouplingGraph induced(const std::set<int>& qubits) const;

  /// True iff the graph, viewed over its declared qubit universe (or over
  /// the qubits that appear in edges when no universe is declared), is
  /// connected. The empty graph counts as connected only for universes of
  /// size <= 1.
  bool connected() const;

  bool operator==(const CouplingGraph& other) const {
    return edges_ == other.edges_;
  }

  /// Canonical JSON form {"num_qubits": n, "edges": [[a,b],...]} with edges
  /// sorted lexicographically. num_qubits is omitted when unknown.
  std::string to_json() const;
  static CouplingGraph from_json(const std::string& text);

  static CouplingGraph load_file(const std::string& path);
  void save_file(const std::string& path) const;

 private:
  std::set<Edge> edges_;
  std::optional<int> num_qubits_;
};

/// Graph Hamming distance: cardinality of the symmetric difference of the
/// two canonical edge sets.
int hamming_distance(const CouplingGraph& g1, const CouplingGraph& g2);

/// 100 * |derived ∩ truth| / |truth|. Throws std::invalid_argument when the
/// truth graph has no edges.
double edge_coverage_percent(const CouplingGraph& derived,
                             const CouplingGraph& truth);

} // namespace qcf

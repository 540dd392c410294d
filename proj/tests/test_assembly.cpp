#include "qcf/assembly.hpp"

#include "qcf/extraction.hpp"
#include "qcf/synth.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace qcf;

namespace {

NamedGraph named(const std::string& name, std::vector<Edge> edges) {
  CouplingGraph g;
  for (const Edge& e : edges) g.add_edge(e.first, e.second);
  return {name, std::move(g)};
}

} // namespace

TEST_CASE("assemble unions the pool") {
  const AssemblyReport report =
      assemble({named("a", {{0, 1}}), named("b", {{1, 2}})});
  CHECK(report.assembled.edge_count() == 2);
  CHECK(report.assembled.contains(0, 1));
  CHECK(report.assembled.contains(1, 2));
  CHECK(report.per_circuit.size() == 2);
  CHECK(report.coverage_curve.empty());
}

TEST_CASE("empty pool yields an empty graph and no curve") {
  const AssemblyReport report = assemble({});
  CHECK(report.assembled.empty());
  CHECK(report.coverage_curve.empty());
}

TEST_CASE("coverage curve against a truth graph") {
  CouplingGraph truth(4);
  truth.add_edge(0, 1);
  truth.add_edge(1, 2);
  truth.add_edge(2, 3);

  const AssemblyReport report = assemble(
      {named("a", {{0, 1}}), named("b", {{0, 1}, {1, 2}}),
       named("c", {{2, 3}})},
      truth);
  REQUIRE(report.coverage_curve.size() == 3);
  CHECK(report.coverage_curve[0].first == 1);
  CHECK(report.coverage_curve[0].second == doctest::Approx(100.0 / 3));
  CHECK(report.coverage_curve[1].second == doctest::Approx(200.0 / 3));
  CHECK(report.coverage_curve[2].second == 100.0);

  // Monotone non-decreasing by construction.
  for (std::size_t i = 1; i < report.coverage_curve.size(); ++i) {
    CHECK(report.coverage_curve[i].second >=
          report.coverage_curve[i - 1].second);
  }
}

TEST_CASE("assembled union is order-insensitive, curves are not") {
  std::mt19937 rng(55);
  std::vector<NamedGraph> pool;
  for (int k = 0; k < 8; ++k) {
    CouplingGraph g;
    for (int e = 0; e < 5; ++e) {
      const int a = static_cast<int>(rng() % 10);
      const int b = static_cast<int>(rng() % 10);
      if (a != b) g.add_edge(a, b);
    }
    pool.push_back({"g" + std::to_string(k), std::move(g)});
  }
  const CouplingGraph forward = assemble(pool).assembled;
  std::vector<NamedGraph> shuffled = pool;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  CHECK(assemble(shuffled).assembled == forward);
}

TEST_CASE("monotone coverage under pool growth") {
  CouplingGraph truth(6);
  for (int i = 0; i < 5; ++i) truth.add_edge(i, i + 1);

  std::mt19937 rng(66);
  std::vector<NamedGraph> pool;
  double last_final = 0.0;
  for (int k = 0; k < 10; ++k) {
    CouplingGraph g;
    const int a = static_cast<int>(rng() % 5);
    g.add_edge(a, a + 1);
    pool.push_back({"g" + std::to_string(k), std::move(g)});
    const AssemblyReport report = assemble(pool, truth);
    const double final_coverage = report.coverage_curve.back().second;
    CHECK(final_coverage >= last_final);
    last_final = final_coverage;
  }
}

TEST_CASE("soundness lifts through the union") {
  std::mt19937 rng(77);
  CouplingGraph truth(8);
  for (int i = 0; i < 7; ++i) truth.add_edge(i, i + 1);
  truth.add_edge(0, 7);

  std::vector<NamedGraph> pool;
  for (int k = 0; k < 6; ++k) {
    CouplingGraph g;
    for (int e = 0; e < 3; ++e) {
      auto it = truth.edges().begin();
      std::advance(it, static_cast<long>(rng() % truth.edge_count()));
      g.add_edge(it->first, it->second);
    }
    pool.push_back({"g" + std::to_string(k), std::move(g)});
  }
  const AssemblyReport report = assemble(pool, truth);
  CHECK(report.assembled.subgraph_of(truth));
}

TEST_CASE("coverage curve CSV export") {
  CouplingGraph truth(3);
  truth.add_edge(0, 1);
  truth.add_edge(1, 2);
  const AssemblyReport report =
      assemble({named("a", {{0, 1}}), named("b", {{1, 2}})}, truth);
  CHECK(report.coverage_csv() ==
        "circuits_used,coverage_percent\n1,50\n2,100\n");
}

TEST_CASE("projection basics") {
  CouplingGraph derived(4);
  derived.add_edge(0, 1);
  derived.add_edge(1, 2);
  derived.add_edge(2, 3);
  const std::map<int, int> identity{{0, 0}, {1, 1}, {2, 2}, {3, 3}};

  SUBCASE("induced subgraph on a user slice") {
    const CouplingGraph sub = project_user_subgraph(derived, identity, {0, 1});
    CHECK(sub.edge_count() == 1);
    CHECK(sub.contains(0, 1));
  }
  SUBCASE("projecting on all logicals is the identity") {
    CHECK(project_user_subgraph(derived, identity, {0, 1, 2, 3}) == derived);
  }
  SUBCASE("missing logical index") {
    CHECK_THROWS_AS(project_user_subgraph(derived, identity, {0, 9}),
                    std::invalid_argument);
  }
  SUBCASE("non-identity layout routes through physical indices") {
    const std::map<int, int> layout{{0, 3}, {1, 2}, {2, 1}, {3, 0}};
    const CouplingGraph sub = project_user_subgraph(derived, layout, {0, 1});
    // Logicals 0,1 sit at physicals 3,2: the (2,3) edge.
    CHECK(sub.edge_count() == 1);
    CHECK(sub.contains(2, 3));
  }
}

TEST_CASE("multi-tenant projection matches user-segment recomputation") {
  std::mt19937 rng(91);
  for (int trial = 0; trial < 40; ++trial) {
    TopologySpec topology =
        (trial % 2) ? linear_topology(10 + static_cast<int>(rng() % 6))
                    : loop_topology(10 + static_cast<int>(rng() % 6));
    SynthConfig config;
    config.num_logical = 8;
    config.user_boundary = 4;
    config.num_2q_ops = 12 + static_cast<int>(rng() % 10);
    config.seed = static_cast<unsigned>(rng());
    config.layout_mode = (rng() % 2) ? SynthConfig::LayoutMode::Random
                                     : SynthConfig::LayoutMode::Identity;
    config.disguise = {SwapDisguise::Direct, SwapDisguise::ThreeCnot};

    const SynthResult fixture = synthesize(topology, config);
    REQUIRE(fixture.user_instruction_begin.has_value());
    CHECK(fixture.user_logicals == std::set<int>{4, 5, 6, 7});

    const CouplingGraph whole = derive_coupling_map(fixture.circuit);
    const CouplingGraph projected =
        project_user_subgraph(whole, fixture.layout, fixture.user_logicals);

    // Brute force: re-derive from the user-segment instructions alone.
    ParsedCircuit user_segment;
    user_segment.num_qubits = fixture.circuit.num_qubits;
    user_segment.instructions.assign(
        fixture.circuit.instructions.begin() +
            static_cast<std::ptrdiff_t>(*fixture.user_instruction_begin),
        fixture.circuit.instructions.end());
    const CouplingGraph recomputed = derive_coupling_map(user_segment);

    CHECK(projected == recomputed);
    CHECK(projected.subgraph_of(fixture.ground_truth));

    // The user segment never touches dummy physicals.
    std::set<int> user_physicals;
    for (int logical : fixture.user_logicals) {
      user_physicals.insert(fixture.layout.at(logical));
    }
    for (const Instruction& instruction : user_segment.instructions) {
      for (int q : instruction.qubits) {
        CHECK(user_physicals.count(q) == 1);
      }
    }
  }
}

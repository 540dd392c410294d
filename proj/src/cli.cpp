#include "qcf/cli.hpp"

#include "qcf/assembly.hpp"
#include "qcf/extraction.hpp"
#include "qcf/qasm.hpp"
#include "qcf/synth.hpp"
#include "qcf/tracing.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>

namespace qcf {

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitAnomaly = 1;
constexpr int kExitInputError = 2;

struct CommonFlags {
  std::string aliases_file;
  double tolerance = 1e-6;
  bool strict_unitary = false;
  bool include_swap_edges = false;
  std::string format = "json";
};

void add_recognizer_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--aliases", flags.aliases_file,
                  "file with SWAP alias gate names, one per line");
  cmd->add_option("--tolerance", flags.tolerance,
                  "unitary matching tolerance");
  cmd->add_flag("--strict-unitary", flags.strict_unitary,
                "verify pattern-matched SWAPs by composing their unitaries");
}

RecognizerConfig recognizer_from(const CommonFlags& flags) {
  RecognizerConfig config;
  if (!flags.aliases_file.empty()) {
    config.aliases = load_alias_file(flags.aliases_file);
  }
  config.unitary_tolerance = flags.tolerance;
  config.strict_unitary = flags.strict_unitary;
  return config;
}

ParsedCircuit load_circuit(const std::string& path) {
  ParsedCircuit circuit = parse_qasm_file(path);
  circuit.source_name = fs::path(path).filename().string();
  const fs::path sidecar = fs::path(path).replace_extension(".layout.json");
  if (fs::exists(sidecar)) {
    circuit.layout = load_layout_file(sidecar.string());
  }
  return circuit;
}

void write_text_file(const fs::path& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) {
    throw std::invalid_argument("cannot write file: " + path.string());
  }
  out << contents;
}

int cmd_extract(const std::vector<std::string>& files,
                const CommonFlags& flags, const std::string& out_dir,
                std::ostream& out) {
  const RecognizerConfig config = recognizer_from(flags);
  const ExtractOptions options{flags.include_swap_edges};
  for (const std::string& file : files) {
    const ParsedCircuit circuit = load_circuit(file);
    const ExtractionResult result = extract_coupling(circuit, config, options);
    if (flags.format == "table") {
      out << circuit.source_name << ": " << result.graph.edge_count()
          << " edge(s)";
      for (const Edge& e : result.graph.edges()) {
        out << " (" << e.first << "," << e.second << ")";
      }
      out << "\n";
    } else {
      out << result.graph.to_json() << "\n";
    }
    if (!out_dir.empty()) {
      const fs::path target =
          fs::path(out_dir) /
          fs::path(file).filename().replace_extension(".topology.json");
      write_text_file(target, result.graph.to_json() + "\n");
    }
  }
  return kExitOk;
}

int cmd_assemble(const std::vector<std::string>& files,
                 const CommonFlags& flags, const std::string& truth_file,
                 std::optional<unsigned> shuffle_seed,
                 const std::string& csv_file, std::ostream& out) {
  const RecognizerConfig config = recognizer_from(flags);
  const ExtractOptions options{flags.include_swap_edges};

  std::vector<std::string> ordered = files;
  if (shuffle_seed) {
    std::mt19937 rng(*shuffle_seed);
    std::shuffle(ordered.begin(), ordered.end(), rng);
  }

  std::vector<NamedGraph> pool;
  for (const std::string& file : ordered) {
    const ParsedCircuit circuit = load_circuit(file);
    pool.push_back(
        {circuit.source_name, extract_coupling(circuit, config, options).graph});
  }
  std::optional<CouplingGraph> truth;
  if (!truth_file.empty()) {
    truth = CouplingGraph::load_file(truth_file);
  }
  const AssemblyReport report = assemble(pool, truth);

  if (flags.format == "table") {
    out << "assembled: " << report.assembled.edge_count() << " edge(s)\n";
    for (const auto& [used, percent] : report.coverage_curve) {
      out << "  after " << used << " circuit(s): " << percent << "%\n";
    }
  } else {
    out << report.to_json() << "\n";
  }
  if (!csv_file.empty()) {
    write_text_file(csv_file, report.coverage_csv());
  }
  return kExitOk;
}

int cmd_trace(const std::vector<std::string>& files, const CommonFlags& flags,
              const std::string& registry_file, const std::string& labels_file,
              bool strict, std::ostream& out) {
  const RecognizerConfig config = recognizer_from(flags);
  const std::vector<BackendRecord> registry = load_registry(registry_file);
  std::optional<std::map<std::string, std::string>> labels;
  if (!labels_file.empty()) {
    labels = load_labels(labels_file);
  }
  std::vector<ParsedCircuit> circuits;
  for (const std::string& file : files) {
    circuits.push_back(load_circuit(file));
  }
  const PoolTraceReport report = trace_pool(circuits, registry, config, labels);
  if (flags.format == "table") {
    out << report.to_table();
  } else {
    out << report.to_json() << "\n";
  }
  if (strict) {
    for (const auto& [source, outcome] : report.outcomes) {
      if (outcome.verdict == TraceOutcome::Verdict::Unmatched) {
        return kExitAnomaly;
      }
    }
  }
  return kExitOk;
}

int cmd_hamming(const std::string& file1, const std::string& file2,
                std::ostream& out) {
  const CouplingGraph g1 = CouplingGraph::load_file(file1);
  const CouplingGraph g2 = CouplingGraph::load_file(file2);
  out << hamming_distance(g1, g2) << "\n";
  return kExitOk;
}

TopologySpec topology_from_flag(const std::string& topology, int qubits) {
  if (topology == "linear") return linear_topology(qubits);
  if (topology == "loop") return loop_topology(qubits);
  if (topology == "t") return t_topology_for(qubits);
  if (topology == "h") return h_topology_for(qubits);
  // Otherwise a coupling-graph JSON file; "<name>.topology.json" labels the
  // fixtures "<name>".
  std::string label = fs::path(topology).stem().string();
  if (label.size() > 9 && label.ends_with(".topology")) {
    label.resize(label.size() - 9);
  }
  return explicit_topology(label, CouplingGraph::load_file(topology));
}

std::vector<SwapDisguise> disguises_from_flag(const std::string& flag) {
  std::vector<SwapDisguise> disguises;
  std::string token;
  std::istringstream in(flag);
  while (std::getline(in, token, ',')) {
    if (token == "direct") {
      disguises.push_back(SwapDisguise::Direct);
    } else if (token == "threecnot") {
      disguises.push_back(SwapDisguise::ThreeCnot);
    } else if (token == "iswapphase") {
      disguises.push_back(SwapDisguise::IswapPhase);
    } else if (token == "paulitriple") {
      disguises.push_back(SwapDisguise::PauliRotationTriple);
    } else {
      throw std::invalid_argument("unknown disguise '" + token + "'");
    }
  }
  if (disguises.empty()) {
    throw std::invalid_argument("disguise list is empty");
  }
  return disguises;
}

int cmd_synth(const std::string& topology_flag, int qubits, int logical,
              int ops, const std::string& disguise_flag, unsigned seed,
              int count, const std::string& layout_mode,
              std::optional<int> tenant_boundary, const std::string& out_dir,
              std::ostream& out) {
  const TopologySpec topology = topology_from_flag(topology_flag, qubits);
  SynthConfig config;
  config.num_logical = logical > 0 ? logical : topology.qubit_count();
  config.num_2q_ops = ops;
  config.disguise = disguises_from_flag(disguise_flag);
  config.layout_mode = layout_mode == "random"
                           ? SynthConfig::LayoutMode::Random
                           : SynthConfig::LayoutMode::Identity;
  config.user_boundary = tenant_boundary;

  fs::create_directories(out_dir);
  const fs::path truth_path =
      fs::path(out_dir) / (topology.label + ".topology.json");
  write_text_file(truth_path, topology.graph.to_json() + "\n");

  for (int k = 0; k < count; ++k) {
    config.seed = seed + static_cast<unsigned>(k);
    const SynthResult result = synthesize(topology, config);
    const std::string stem =
        topology.label + "-seed" + std::to_string(config.seed);
    write_text_file(fs::path(out_dir) / (stem + ".qasm"),
                    emit_qasm(result.circuit));
    write_text_file(fs::path(out_dir) / (stem + ".layout.json"),
                    layout_to_json(result.layout) + "\n");
    out << stem << ".qasm: " << result.circuit.instructions.size()
        << " instruction(s)\n";
  }
  return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"coupling-map forensics for transpiled quantum circuits"};
  app.require_subcommand(1);

  CommonFlags flags;

  // extract
  auto* extract = app.add_subcommand(
      "extract", "derive the coupling map of each transpiled circuit");
  std::vector<std::string> extract_files;
  std::string extract_out_dir;
  extract->add_option("files", extract_files, "QASM circuit files")
      ->required();
  add_recognizer_flags(extract, flags);
  extract->add_flag("--include-swap-edges", flags.include_swap_edges,
                    "also count SWAP pairs as edges");
  extract->add_option("--format", flags.format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));
  extract->add_option("--out-dir", extract_out_dir,
                      "write <file>.topology.json files here");

  // assemble
  auto* assemble_cmd = app.add_subcommand(
      "assemble", "union the derived maps of a circuit pool");
  std::vector<std::string> assemble_files;
  std::string truth_file;
  std::string csv_file;
  std::optional<unsigned> shuffle_seed;
  unsigned shuffle_value = 0;
  assemble_cmd->add_option("files", assemble_files, "QASM circuit files")
      ->required();
  add_recognizer_flags(assemble_cmd, flags);
  assemble_cmd->add_flag("--include-swap-edges", flags.include_swap_edges,
                         "also count SWAP pairs as edges");
  assemble_cmd->add_option("--truth", truth_file,
                           "backend topology JSON for coverage curve");
  auto* shuffle_opt = assemble_cmd->add_option(
      "--shuffle", shuffle_value, "shuffle the pool with this seed");
  assemble_cmd->add_option("--csv", csv_file, "write the coverage curve CSV");
  assemble_cmd->add_option("--format", flags.format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  // trace
  auto* trace_cmd = app.add_subcommand(
      "trace", "trace circuits to backends in a registry");
  std::vector<std::string> trace_files;
  std::string registry_file;
  std::string labels_file;
  bool strict = false;
  trace_cmd->add_option("files", trace_files, "QASM circuit files")
      ->required();
  trace_cmd->add_option("--registry", registry_file, "backend registry JSON")
      ->required();
  trace_cmd->add_option("--labels", labels_file,
                        "ground-truth labels JSON for accuracy");
  add_recognizer_flags(trace_cmd, flags);
  trace_cmd->add_flag("--strict", strict,
                      "exit 1 when any circuit is unmatched");
  trace_cmd->add_option("--format", flags.format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  // hamming
  auto* hamming_cmd = app.add_subcommand(
      "hamming", "Hamming distance between two coupling-map files");
  std::string hamming_file1;
  std::string hamming_file2;
  hamming_cmd->add_option("graph1", hamming_file1, "coupling graph JSON")
      ->required();
  hamming_cmd->add_option("graph2", hamming_file2, "coupling graph JSON")
      ->required();

  // synth
  auto* synth_cmd = app.add_subcommand(
      "synth", "generate transpiled-like fixtures with known ground truth");
  std::string topology_flag = "linear";
  int qubits = 5;
  int logical = 0;
  int ops = 10;
  std::string disguise_flag = "direct";
  unsigned seed = 0;
  int count = 1;
  std::string layout_mode = "identity";
  int tenant_boundary_value = -1;
  std::string synth_out_dir = ".";
  synth_cmd->add_option("--topology", topology_flag,
                        "linear|loop|t|h or a coupling-graph JSON file");
  synth_cmd->add_option("--qubits", qubits, "topology qubit count");
  synth_cmd->add_option("--logical", logical,
                        "logical qubits (default: all physical)");
  synth_cmd->add_option("--ops", ops, "number of random 2-qubit operations");
  synth_cmd->add_option("--disguise", disguise_flag,
                        "comma list: direct,threecnot,iswapphase,paulitriple");
  synth_cmd->add_option("--seed", seed, "base RNG seed");
  synth_cmd->add_option("--count", count, "number of circuits to generate");
  synth_cmd->add_option("--layout", layout_mode, "identity or random")
      ->check(CLI::IsMember({"identity", "random"}));
  auto* tenant_opt = synth_cmd->add_option(
      "--tenant-boundary", tenant_boundary_value,
      "logical index where the appended user program begins");
  synth_cmd->add_option("--out-dir", synth_out_dir, "output directory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInputError;
  }

  if (*shuffle_opt) shuffle_seed = shuffle_value;

  try {
    if (extract->parsed()) {
      return cmd_extract(extract_files, flags, extract_out_dir, out);
    }
    if (assemble_cmd->parsed()) {
      return cmd_assemble(assemble_files, flags, truth_file, shuffle_seed,
                          csv_file, out);
    }
    if (trace_cmd->parsed()) {
      return cmd_trace(trace_files, flags, registry_file, labels_file, strict,
                       out);
    }
    if (hamming_cmd->parsed()) {
      return cmd_hamming(hamming_file1, hamming_file2, out);
    }
    if (synth_cmd->parsed()) {
      std::optional<int> tenant_boundary;
      if (*tenant_opt) tenant_boundary = tenant_boundary_value;
      return cmd_synth(topology_flag, qubits, logical, ops, disguise_flag,
                       seed, count, layout_mode, tenant_boundary,
                       synth_out_dir, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  err << "no subcommand selected\n";
  return kExitInputError;
}

} // namespace qcf

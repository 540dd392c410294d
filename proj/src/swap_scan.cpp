#include "qcf/swap_scan.hpp"

#include "qcf/qasm.hpp"
#include "qcf/unitary.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace qcf {

namespace {

constexpr double kPi = std::numbers::pi;

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

struct Candidate {
  SwapEvent event;
  bool needs_strict_check = false;
};

class Scanner {
 public:
  Scanner(const ParsedCircuit& circuit, const RecognizerConfig& config)
      : circuit_(circuit), config_(config) {
    for (const std::string& name : config.aliases) {
      aliases_.insert(lower(name));
    }
  }

  ScanReport run() {
    ScanReport report;
    const std::size_t n = circuit_.instructions.size();
    std::size_t i = 0;
    while (i < n) {
      std::vector<Candidate> candidates = match_at(i, report.diagnostics);
      // Longest span wins; kind order breaks ties at equal span.
      std::stable_sort(candidates.begin(), candidates.end(),
                       [](const Candidate& a, const Candidate& b) {
                         return a.event.span_length() > b.event.span_length();
                       });
      bool matched = false;
      for (const Candidate& candidate : candidates) {
        if (candidate.needs_strict_check && config_.strict_unitary &&
            !verify_span(candidate.event)) {
          report.diagnostics.push_back(
              {i, std::string("demoted ") +
                      swap_kind_name(candidate.event.kind) + " at index " +
                      std::to_string(i) +
                      ": composed unitary is not SWAP up to global phase"});
          continue;
        }
        report.events.push_back(candidate.event);
        i = candidate.event.end;
        matched = true;
        break;
      }
      if (!matched) ++i;
    }
    return report;
  }

 private:
  const Instruction& at(std::size_t i) const { return circuit_.instructions[i]; }

  bool is_phase_on(const Instruction& ins, int qubit) const {
    if (ins.qubits.size() != 1 || ins.qubits[0] != qubit) return false;
    if (ins.name == "s" || ins.name == "sdg") return true;
    if (ins.name == "rz" && ins.params.size() == 1) {
      const double theta = ins.params[0];
      return std::abs(theta - kPi / 2.0) <= config_.unitary_tolerance ||
             std::abs(theta + kPi / 2.0) <= config_.unitary_tolerance;
    }
    return false;
  }

  bool verify_span(const SwapEvent& event) const {
    const std::span<const Instruction> span(
        circuit_.instructions.data() + event.begin, event.span_length());
    const Matrix4c u = compose_span_unitary(span, event.pair);
    return equal_up_to_global_phase(u, swap_matrix(),
                                    config_.unitary_tolerance);
  }

  // A custom gate is a SWAP alias when its fully inlined body is recognized
  // as exactly one SwapEvent spanning the whole body on the two actual
  // qubits.
  bool definition_is_swap(const Instruction& ins,
                          std::vector<ScanDiagnostic>& diagnostics,
                          std::size_t index) const {
    auto it = circuit_.definitions.find(ins.name);
    if (it == circuit_.definitions.end()) return false;
    if (it->second.formal_qubits.size() != 2) return false;
    std::vector<Instruction> body;
    try {
      body = inline_definition(it->second, ins.params, ins.qubits,
                               circuit_.definitions);
    } catch (const std::exception& e) {
      diagnostics.push_back(
          {index, std::string("cannot inline gate '") + ins.name +
                      "': " + e.what()});
      return false;
    }
    if (body.empty()) return false;
    ParsedCircuit expanded;
    expanded.instructions = std::move(body);
    expanded.num_qubits = circuit_.num_qubits;
    RecognizerConfig inner = config_;
    inner.aliases = aliases_;
    ScanReport inner_report = scan_swaps(expanded, inner);
    if (inner_report.events.size() != 1) return false;
    const SwapEvent& inner_event = inner_report.events.front();
    return inner_event.begin == 0 &&
           inner_event.end == expanded.instructions.size() &&
           inner_event.pair == make_pair_sorted(ins.qubits[0], ins.qubits[1]);
  }

  static std::pair<int, int> make_pair_sorted(int a, int b) {
    return a < b ? std::pair<int, int>{a, b} : std::pair<int, int>{b, a};
  }

  std::vector<Candidate> match_at(std::size_t i,
                                  std::vector<ScanDiagnostic>& diagnostics) {
    std::vector<Candidate> candidates;
    const Instruction& ins = at(i);
    if (ins.qubits.size() != 2) return candidates;
    const int a = ins.qubits[0];
    const int b = ins.qubits[1];
    const auto pair = make_pair_sorted(a, b);
    const std::size_t n = circuit_.instructions.size();

    auto add = [&](SwapEvent::Kind kind, std::size_t end, bool strict) {
      candidates.push_back(
          {SwapEvent{pair, i, end, kind}, strict});
    };

    if (ins.name == "swap") {
      add(SwapEvent::Kind::Direct, i + 1, false);
    }
    if (aliases_.count(lower(ins.name)) ||
        (!is_standard_gate(ins.name) &&
         definition_is_swap(ins, diagnostics, i))) {
      add(SwapEvent::Kind::NamedAlias, i + 1, false);
    }
    if (ins.matrix) {
      if (unitarity_defect(*ins.matrix) > 1e-9) {
        diagnostics.push_back(
            {i, "explicit matrix on '" + ins.name +
                    "' is not unitary within 1e-9; ignored"});
      } else if (equal_up_to_global_phase(*ins.matrix, swap_matrix(),
                                          config_.unitary_tolerance)) {
        add(SwapEvent::Kind::UnitaryMatch, i + 1, false);
      }
    }
    if (ins.name == "cx" && i + 2 < n) {
      const Instruction& second = at(i + 1);
      const Instruction& third = at(i + 2);
      if (second.name == "cx" && third.name == "cx" &&
          second.qubits == std::vector<int>{b, a} &&
          third.qubits == ins.qubits) {
        add(SwapEvent::Kind::ThreeCnot, i + 3, true);
      }
    }
    if (ins.name == "iswap") {
      std::size_t end = i + 1;
      int consumed_on = -1;
      while (end < n && end < i + 3) {
        const Instruction& next = at(end);
        const bool on_a = is_phase_on(next, a) && consumed_on != a;
        const bool on_b = is_phase_on(next, b) && consumed_on != b;
        if (!on_a && !on_b) break;
        consumed_on = on_a ? a : b;
        ++end;
      }
      if (end > i + 1) {
        add(SwapEvent::Kind::IswapPhase, end, true);
      }
    }
    if ((ins.name == "rxx" || ins.name == "ryy" || ins.name == "rzz") &&
        i + 2 < n) {
      std::set<std::string> names = {ins.name};
      bool ok = ins.params.size() == 1 &&
                std::abs(ins.params[0] - kPi / 2.0) <= config_.unitary_tolerance;
      for (std::size_t k = i + 1; ok && k < i + 3; ++k) {
        const Instruction& next = at(k);
        ok = (next.name == "rxx" || next.name == "ryy" ||
              next.name == "rzz") &&
             next.qubits.size() == 2 &&
             make_pair_sorted(next.qubits[0], next.qubits[1]) == pair &&
             next.params.size() == 1 &&
             std::abs(next.params[0] - kPi / 2.0) <=
                 config_.unitary_tolerance &&
             names.insert(next.name).second;
      }
      if (ok && names.size() == 3) {
        add(SwapEvent::Kind::PauliRotationTriple, i + 3, true);
      }
    }
    return candidates;
  }

  const ParsedCircuit& circuit_;
  const RecognizerConfig& config_;
  std::set<std::string> aliases_;
};

} // namespace

const char* swap_kind_name(SwapEvent::Kind kind) {
  switch (kind) {
    case SwapEvent::Kind::Direct: return "direct";
    case SwapEvent::Kind::NamedAlias: return "named-alias";
    case SwapEvent::Kind::UnitaryMatch: return "unitary-match";
    case SwapEvent::Kind::ThreeCnot: return "three-cnot";
    case SwapEvent::Kind::IswapPhase: return "iswap-phase";
    case SwapEvent::Kind::PauliRotationTriple: return "pauli-rotation-triple";
  }
  return "?";
}

ScanReport scan_swaps(const ParsedCircuit& circuit,
                      const RecognizerConfig& config) {
  if (!(config.unitary_tolerance > 0.0)) {
    throw std::invalid_argument("recognizer tolerance must be positive");
  }
  Scanner scanner(circuit, config);
  return scanner.run();
}

std::set<std::string> load_alias_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open alias file: " + path);
  }
  std::set<std::string> aliases;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    std::string name = line.substr(first, last - first + 1);
    if (name.empty() || name[0] == '#') continue;
    aliases.insert(lower(std::move(name)));
  }
  return aliases;
}

} // namespace qcf

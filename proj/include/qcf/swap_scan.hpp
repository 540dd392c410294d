#pragma once

#include "qcf/instruction.hpp"

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace qcf {

/// One recognized SWAP occurrence: the qubit pair exchanged and the half-open
/// instruction range [begin,end) consumed by the match.
struct SwapEvent {
  enum class Kind {
    Direct,
    NamedAlias,
    UnitaryMatch,
    ThreeCnot,
    IswapPhase,
    PauliRotationTriple,
  };

  std::pair<int, int> pair; // canonical (min,max)
  std::size_t begin = 0;
  std::size_t end = 0;
  Kind kind = Kind::Direct;

  std::size_t span_length() const { return end - begin; }
};

const char* swap_kind_name(SwapEvent::Kind kind);

struct RecognizerConfig {
  /// Lowercase gate names treated as SWAP by name. Matching is
  /// case-insensitive.
  std::set<std::string> aliases;
  double unitary_tolerance = 1e-6;
  /// When true, pattern-matched events (ThreeCnot, IswapPhase,
  /// PauliRotationTriple) are verified by composing their unitaries against
  /// SWAP up to global phase; failures are demoted to diagnostics.
  bool strict_unitary = false;
};

struct ScanDiagnostic {
  std::size_t index = 0;
  std::string message;
};

struct ScanReport {
  std::vector<SwapEvent> events;
  std::vector<ScanDiagnostic> diagnostics;
};

/// Greedy left-to-right scan for SWAP manifestations, longest match first at
/// equal start. Event spans never overlap. Pure analysis: malformed data
/// (non-unitary explicit matrices, cyclic definitions) becomes a diagnostic,
/// never an exception. Throws only on invalid config (tolerance <= 0).
ScanReport scan_swaps(const ParsedCircuit& circuit,
                      const RecognizerConfig& config = {});

/// Loads an alias set from plain text, one gate name per line. Blank lines
/// and lines starting with '#' are skipped; names are lowercased.
std::set<std::string> load_alias_file(const std::string& path);

} // namespace qcf

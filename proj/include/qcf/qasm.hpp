#pragma once

#include "qcf/instruction.hpp"

#include <stdexcept>
#include <string>

namespace qcf {

/// Parse failure with source position. Positions are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(col) + ": " + message),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

/// Parses OpenQASM 2.0 text (the transpiled-circuit subset: header, qelib1
/// include, qreg/creg, gate definitions, gate applications, barrier, measure,
/// reset, line comments). barrier/measure/reset are dropped from the stream;
/// qubit indices are flattened across registers in declaration order; custom
/// gate applications stay symbolic with their definitions recorded.
ParsedCircuit parse_qasm(const std::string& text,
                         const std::string& source_name = "");

ParsedCircuit parse_qasm_file(const std::string& path);

/// Parses a layout sidecar: a JSON object mapping logical indices (as string
/// keys) to physical indices, e.g. {"0": 12, "1": 15}. Must be injective.
std::map<int, int> parse_layout_sidecar(const std::string& text);

std::map<int, int> load_layout_file(const std::string& path);

/// Expands a gate definition applied to actual parameters and qubits into
/// concrete instructions, recursively inlining nested custom gates through
/// `table`. Throws on arity mismatch and on definition cycles.
std::vector<Instruction> inline_definition(const GateDefinition& defn,
                                           const std::vector<double>& params,
                                           const std::vector<int>& qubits,
                                           const GateDefinitionTable& table);

} // namespace qcf

#pragma once

#include <Eigen/Dense>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qcf {

using Matrix4c = Eigen::Matrix4cd;
using Matrix2c = Eigen::Matrix2cd;

/// One gate application on physical qubits. Names are lowercase; rotation
/// angles are radians. `matrix` is set only for explicit two-qubit unitary
/// instructions constructed programmatically (the QASM subset has no matrix
/// literal).
struct Instruction {
  std::string name;
  std::vector<int> qubits;
  std::vector<double> params;
  std::optional<Matrix4c> matrix;

  Instruction() = default;
  Instruction(std::string gate_name, std::vector<int> operands,
              std::vector<double> angles = {})
      : name(std::move(gate_name)),
        qubits(std::move(operands)),
        params(std::move(angles)) {}

  bool operator==(const Instruction& other) const;
};

/// Parameter expression template used inside gate definitions, where angles
/// may reference formal parameters and are only foldable at application time.
struct ParamExpr {
  enum class Kind { Constant, Formal, Negate, Add, Sub, Mul, Div };

  Kind kind = Kind::Constant;
  double value = 0.0;   // Constant
  int formal_index = 0; // Formal
  std::vector<ParamExpr> operands;

  static ParamExpr constant(double v);
  static ParamExpr formal(int index);
  static ParamExpr unary(Kind k, ParamExpr inner);
  static ParamExpr binary(Kind k, ParamExpr lhs, ParamExpr rhs);

  /// Evaluates with the given actual parameter values.
  double evaluate(const std::vector<double>& actuals) const;
};

/// One instruction template inside a gate body: operands index into the
/// definition's formal qubit list, params are expression templates.
struct BodyInstruction {
  std::string name;
  std::vector<int> formal_qubit_indices;
  std::vector<ParamExpr> params;
};

/// A user-declared QASM gate, kept symbolic for lazy inlining.
struct GateDefinition {
  std::string name;
  std::vector<std::string> formal_params;
  std::vector<std::string> formal_qubits;
  std::vector<BodyInstruction> body;
};

using GateDefinitionTable = std::map<std::string, GateDefinition>;

/// Normalized instruction stream over a flat physical qubit index space.
/// barrier/measure/reset never appear here; custom gate applications are
/// retained under their declared name with `definitions` recording the body.
struct ParsedCircuit {
  std::vector<Instruction> instructions;
  int num_qubits = 0;
  std::optional<std::map<int, int>> layout; // logical -> physical
  std::string source_name;
  GateDefinitionTable definitions;
};

} // namespace qcf

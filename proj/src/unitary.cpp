#include "qcf/unitary.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <stdexcept>

namespace qcf {

namespace {

using Complex = std::complex<double>;
constexpr Complex kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

struct GateSpec {
  int arity;
  int param_count;
};

const std::map<std::string, GateSpec>& gate_table() {
  static const std::map<std::string, GateSpec> table = {
      {"u1", {1, 1}},  {"u2", {1, 2}},   {"u3", {1, 3}},  {"id", {1, 0}},
      {"x", {1, 0}},   {"y", {1, 0}},    {"z", {1, 0}},   {"h", {1, 0}},
      {"s", {1, 0}},   {"sdg", {1, 0}},  {"t", {1, 0}},   {"tdg", {1, 0}},
      {"rx", {1, 1}},  {"ry", {1, 1}},   {"rz", {1, 1}},  {"cx", {2, 0}},
      {"cz", {2, 0}},  {"swap", {2, 0}}, {"iswap", {2, 0}},
      {"ccx", {3, 0}}, {"rxx", {2, 1}},  {"ryy", {2, 1}}, {"rzz", {2, 1}},
  };
  return table;
}

Matrix4c kron(const Matrix2c& a, const Matrix2c& b) {
  Matrix4c m;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      m.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return m;
}

Matrix2c u3(double theta, double phi, double lambda) {
  Matrix2c m;
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  m << c, -std::exp(kI * lambda) * s, std::exp(kI * phi) * s,
      std::exp(kI * (phi + lambda)) * c;
  return m;
}

void check_param_count(const std::string& name, std::size_t got,
                       int expected) {
  if (got != static_cast<std::size_t>(expected)) {
    throw std::invalid_argument("gate " + name + " expects " +
                                std::to_string(expected) + " parameter(s), got " +
                                std::to_string(got));
  }
}

// Two-qubit unitary of a standard two-qubit gate in the slot basis
// |slot0 slot1>, with `flipped` meaning the instruction's first operand sits
// in slot 1.
Matrix4c two_qubit_unitary(const std::string& name,
                           std::span<const double> params, bool flipped) {
  Matrix4c m = Matrix4c::Zero();
  if (name == "cx") {
    if (!flipped) {
      m << 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0;
    } else {
      m << 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0;
    }
    return m;
  }
  if (name == "cz") {
    m = Matrix4c::Identity();
    m(3, 3) = -1.0;
    return m;
  }
  if (name == "swap") {
    return swap_matrix();
  }
  if (name == "iswap") {
    m(0, 0) = 1.0;
    m(1, 2) = kI;
    m(2, 1) = kI;
    m(3, 3) = 1.0;
    return m;
  }
  if (name == "rxx" || name == "ryy" || name == "rzz") {
    check_param_count(name, params.size(), 1);
    const double half = params[0] / 2.0;
    const Complex c = std::cos(half);
    const Complex isin = kI * std::sin(half);
    if (name == "rzz") {
      m(0, 0) = std::exp(-kI * half);
      m(1, 1) = std::exp(kI * half);
      m(2, 2) = std::exp(kI * half);
      m(3, 3) = std::exp(-kI * half);
      return m;
    }
    // rxx/ryy are symmetric in the two qubits, as are swap/cz/rzz above.
    m(0, 0) = c;
    m(1, 1) = c;
    m(2, 2) = c;
    m(3, 3) = c;
    if (name == "rxx") {
      m(0, 3) = -isin;
      m(1, 2) = -isin;
      m(2, 1) = -isin;
      m(3, 0) = -isin;
    } else {
      m(0, 3) = isin;
      m(1, 2) = -isin;
      m(2, 1) = -isin;
      m(3, 0) = isin;
    }
    return m;
  }
  throw std::invalid_argument("no unitary for two-qubit gate: " + name);
}

} // namespace

Matrix4c swap_matrix() {
  Matrix4c m = Matrix4c::Zero();
  m(0, 0) = 1.0;
  m(1, 2) = 1.0;
  m(2, 1) = 1.0;
  m(3, 3) = 1.0;
  return m;
}

bool is_standard_gate(const std::string& name) {
  return gate_table().count(name) > 0;
}

int standard_gate_arity(const std::string& name) {
  auto it = gate_table().find(name);
  if (it == gate_table().end()) {
    throw std::invalid_argument("not a standard gate: " + name);
  }
  return it->second.arity;
}

int standard_gate_param_count(const std::string& name) {
  auto it = gate_table().find(name);
  if (it == gate_table().end()) {
    throw std::invalid_argument("not a standard gate: " + name);
  }
  return it->second.param_count;
}

Matrix2c single_qubit_unitary(const std::string& name,
                              std::span<const double> params) {
  Matrix2c m;
  if (name == "id") {
    return Matrix2c::Identity();
  }
  if (name == "x") {
    m << 0, 1, 1, 0;
    return m;
  }
  if (name == "y") {
    m << 0, -kI, kI, 0;
    return m;
  }
  if (name == "z") {
    m << 1, 0, 0, -1;
    return m;
  }
  if (name == "h") {
    const double r = 1.0 / std::sqrt(2.0);
    m << r, r, r, -r;
    return m;
  }
  if (name == "s") {
    m << 1, 0, 0, kI;
    return m;
  }
  if (name == "sdg") {
    m << 1, 0, 0, -kI;
    return m;
  }
  if (name == "t") {
    m << 1, 0, 0, std::exp(kI * (kPi / 4.0));
    return m;
  }
  if (name == "tdg") {
    m << 1, 0, 0, std::exp(-kI * (kPi / 4.0));
    return m;
  }
  if (name == "rx") {
    check_param_count(name, params.size(), 1);
    const double half = params[0] / 2.0;
    m << std::cos(half), -kI * std::sin(half), -kI * std::sin(half),
        std::cos(half);
    return m;
  }
  if (name == "ry") {
    check_param_count(name, params.size(), 1);
    const double half = params[0] / 2.0;
    m << std::cos(half), -std::sin(half), std::sin(half), std::cos(half);
    return m;
  }
  if (name == "rz") {
    check_param_count(name, params.size(), 1);
    const double half = params[0] / 2.0;
    m << std::exp(-kI * half), 0, 0, std::exp(kI * half);
    return m;
  }
  if (name == "u1") {
    check_param_count(name, params.size(), 1);
    m << 1, 0, 0, std::exp(kI * params[0]);
    return m;
  }
  if (name == "u2") {
    check_param_count(name, params.size(), 2);
    return u3(kPi / 2.0, params[0], params[1]);
  }
  if (name == "u3") {
    check_param_count(name, params.size(), 3);
    return u3(params[0], params[1], params[2]);
  }
  throw std::invalid_argument("no unitary for single-qubit gate: " + name);
}

Matrix4c pair_unitary(const Instruction& instruction,
                      std::pair<int, int> pair) {
  for (int q : instruction.qubits) {
    if (q != pair.first && q != pair.second) {
      throw std::invalid_argument("instruction " + instruction.name +
                                  " acts outside the qubit pair");
    }
  }
  if (instruction.qubits.size() == 1) {
    const Matrix2c u = single_qubit_unitary(instruction.name,
                                            instruction.params);
    const Matrix2c eye = Matrix2c::Identity();
    return instruction.qubits[0] == pair.first ? kron(u, eye) : kron(eye, u);
  }
  if (instruction.qubits.size() == 2) {
    if (instruction.matrix) {
      // Explicit matrices are stored in operand order; flip into slot order
      // when the operands arrive reversed.
      if (instruction.qubits[0] == pair.first) {
        return *instruction.matrix;
      }
      const Matrix4c s = swap_matrix();
      return s * (*instruction.matrix) * s;
    }
    const bool flipped = instruction.qubits[0] == pair.second;
    return two_qubit_unitary(instruction.name, instruction.params, flipped);
  }
  throw std::invalid_argument("pair unitary requires a 1- or 2-qubit gate");
}

Matrix4c compose_span_unitary(std::span<const Instruction> instructions,
                              std::pair<int, int> pair) {
  Matrix4c product = Matrix4c::Identity();
  for (const Instruction& instruction : instructions) {
    product = (pair_unitary(instruction, pair) * product).eval();
  }
  return product;
}

double unitarity_defect(const Matrix4c& matrix) {
  const Matrix4c deviation = matrix * matrix.adjoint() - Matrix4c::Identity();
  return deviation.cwiseAbs().maxCoeff();
}

bool unitary_equals_swap(const Matrix4c& matrix, double tolerance) {
  if (unitarity_defect(matrix) > 1e-9) {
    throw std::invalid_argument(
        "unitary_equals_swap: input matrix is not unitary within 1e-9");
  }
  return equal_up_to_global_phase(matrix, swap_matrix(), tolerance);
}

bool equal_up_to_global_phase(const Matrix4c& matrix, const Matrix4c& target,
                              double tolerance) {
  Eigen::Index row = 0;
  Eigen::Index col = 0;
  matrix.cwiseAbs().maxCoeff(&row, &col);
  const std::complex<double> anchor = target(row, col);
  if (std::abs(anchor) < 1e-12) {
    // Largest entry sits where the target vanishes: no phase can match it.
    return false;
  }
  std::complex<double> phase = matrix(row, col) / anchor;
  const double magnitude = std::abs(phase);
  if (magnitude < 1e-12) return false;
  phase /= magnitude;
  return (matrix - phase * target).cwiseAbs().maxCoeff() <= tolerance;
}

} // namespace qcf

#pragma once

#include "qcf/instruction.hpp"

#include <span>
#include <utility>

namespace qcf {

/// The SWAP unitary in the |q_a q_b> basis (basis index = 2*bit_a + bit_b).
Matrix4c swap_matrix();

/// True iff the name is in the built-in qelib1 table handled by the parser
/// and the unitary composer.
bool is_standard_gate(const std::string& name);

/// Number of qubit operands a standard gate takes (1, 2 or 3).
int standard_gate_arity(const std::string& name);

/// Number of angle parameters a standard gate takes.
int standard_gate_param_count(const std::string& name);

/// 2x2 unitary of a standard single-qubit gate.
Matrix2c single_qubit_unitary(const std::string& name,
                              std::span<const double> params);

/// 4x4 unitary of `instruction` restricted to the ordered qubit pair
/// (pair.first -> slot 0, pair.second -> slot 1). Single-qubit gates are
/// promoted by tensoring with identity on the other slot. Throws on gates
/// that are neither standard nor matrix-carrying, and on instructions that
/// touch qubits outside the pair.
Matrix4c pair_unitary(const Instruction& instruction,
                      std::pair<int, int> pair);

/// Ordered product of the instructions' unitaries on the given pair, with
/// the leftmost instruction applied first. The empty span composes to the
/// identity.
Matrix4c compose_span_unitary(std::span<const Instruction> instructions,
                              std::pair<int, int> pair);

/// Max absolute entry deviation of M*M^dagger from the identity.
double unitarity_defect(const Matrix4c& matrix);

/// True iff there is a unit-modulus scalar phi with max-entry
/// |matrix - phi*SWAP| <= tolerance. phi is fixed constructively from the
/// largest-magnitude entry of `matrix` against the corresponding SWAP entry.
/// Throws std::invalid_argument when `matrix` is not unitary within 1e-9.
bool unitary_equals_swap(const Matrix4c& matrix, double tolerance);

/// Phase-insensitive comparison against an arbitrary target, same
/// constructive rule as unitary_equals_swap. No unitarity contract.
bool equal_up_to_global_phase(const Matrix4c& matrix, const Matrix4c& target,
                              double tolerance);

} // namespace qcf

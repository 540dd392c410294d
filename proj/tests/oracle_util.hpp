// Test-only oracles, deliberately independent of the library's Eigen-based
// unitary code: a tiny 4x4 complex matrix type plus gate constructions from
// first principles (basis permutations and the exp(-i a P) = cos(a) I -
// i sin(a) P identity for involutory P).
#pragma once

#include "qcf/coupling.hpp"
#include "qcf/instruction.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace qcf::testing {

using Complex = std::complex<double>;

struct TinyMat {
  std::array<Complex, 16> a{};

  static TinyMat identity() {
    TinyMat m;
    for (int i = 0; i < 4; ++i) m.at(i, i) = 1.0;
    return m;
  }

  Complex& at(int r, int c) { return a[static_cast<std::size_t>(4 * r + c)]; }
  Complex at(int r, int c) const {
    return a[static_cast<std::size_t>(4 * r + c)];
  }
};

inline TinyMat multiply(const TinyMat& lhs, const TinyMat& rhs) {
  TinyMat out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      Complex sum = 0.0;
      for (int k = 0; k < 4; ++k) sum += lhs.at(r, k) * rhs.at(k, c);
      out.at(r, c) = sum;
    }
  }
  return out;
}

inline double max_abs_diff(const TinyMat& lhs, const TinyMat& rhs) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 16; ++i) {
    worst = std::max(worst, std::abs(lhs.a[i] - rhs.a[i]));
  }
  return worst;
}

// Exhaustive phase search: equal up to global phase iff some phase taken
// from a nonzero entry pair aligns every entry.
inline bool equal_up_to_phase_oracle(const TinyMat& m, const TinyMat& target,
                                     double tolerance) {
  for (std::size_t i = 0; i < 16; ++i) {
    if (std::abs(target.a[i]) < 1e-12 || std::abs(m.a[i]) < 1e-12) continue;
    Complex phase = m.a[i] / target.a[i];
    phase /= std::abs(phase);
    double worst = 0.0;
    for (std::size_t k = 0; k < 16; ++k) {
      worst = std::max(worst, std::abs(m.a[k] - phase * target.a[k]));
    }
    if (worst <= tolerance) return true;
  }
  return false;
}

// Basis permutation |q0 q1> -> |q1 q0>.
inline TinyMat swap_oracle() {
  TinyMat m;
  for (int q0 = 0; q0 < 2; ++q0) {
    for (int q1 = 0; q1 < 2; ++q1) {
      m.at(2 * q1 + q0, 2 * q0 + q1) = 1.0;
    }
  }
  return m;
}

// |c t> -> |c, t xor c>, control in slot `control_slot`.
inline TinyMat cnot_oracle(int control_slot) {
  TinyMat m;
  for (int b0 = 0; b0 < 2; ++b0) {
    for (int b1 = 0; b1 < 2; ++b1) {
      const int control = control_slot == 0 ? b0 : b1;
      int o0 = b0;
      int o1 = b1;
      if (control_slot == 0) {
        o1 ^= control;
      } else {
        o0 ^= control;
      }
      m.at(2 * o0 + o1, 2 * b0 + b1) = 1.0;
    }
  }
  return m;
}

// |01> -> i|10>, |10> -> i|01>, diagonal otherwise.
inline TinyMat iswap_oracle() {
  TinyMat m;
  const Complex i{0.0, 1.0};
  m.at(0, 0) = 1.0;
  m.at(2, 1) = i;
  m.at(1, 2) = i;
  m.at(3, 3) = 1.0;
  return m;
}

inline TinyMat pauli_pair(char p) {
  // X, Y or Z tensored with itself.
  const Complex i{0.0, 1.0};
  std::array<Complex, 4> single{};
  switch (p) {
    case 'x': single = {0.0, 1.0, 1.0, 0.0}; break;
    case 'y': single = {0.0, -i, i, 0.0}; break;
    case 'z': single = {1.0, 0.0, 0.0, -1.0}; break;
    default: throw std::invalid_argument("pauli_pair");
  }
  TinyMat m;
  for (int r0 = 0; r0 < 2; ++r0) {
    for (int c0 = 0; c0 < 2; ++c0) {
      for (int r1 = 0; r1 < 2; ++r1) {
        for (int c1 = 0; c1 < 2; ++c1) {
          m.at(2 * r0 + r1, 2 * c0 + c1) =
              single[static_cast<std::size_t>(2 * r0 + c0)] *
              single[static_cast<std::size_t>(2 * r1 + c1)];
        }
      }
    }
  }
  return m;
}

// exp(-i (theta/2) P) for involutory P: cos(theta/2) I - i sin(theta/2) P.
inline TinyMat pauli_rotation_oracle(char p, double theta) {
  const Complex i{0.0, 1.0};
  const TinyMat pp = pauli_pair(p);
  TinyMat m = TinyMat::identity();
  for (std::size_t k = 0; k < 16; ++k) {
    m.a[k] = std::cos(theta / 2.0) * m.a[k] -
             i * std::sin(theta / 2.0) * pp.a[k];
  }
  return m;
}

// One-qubit phase matrices promoted to the pair, slot 0 or 1.
inline TinyMat diag_on_slot(Complex d0, Complex d1, int slot) {
  TinyMat m;
  for (int b0 = 0; b0 < 2; ++b0) {
    for (int b1 = 0; b1 < 2; ++b1) {
      const int bit = slot == 0 ? b0 : b1;
      m.at(2 * b0 + b1, 2 * b0 + b1) = bit == 0 ? d0 : d1;
    }
  }
  return m;
}

// --- Independent replay of the extraction algorithm -------------------------
//
// Recognizes exactly the generator's disguise forms (direct swap, 3 adjacent
// cx, iswap + sdg + sdg, rxx/ryy/rzz at pi/2) and replays the one-pass
// history walk. Used to cross-check library extraction on synthesized
// streams.
inline CouplingGraph naive_extraction_oracle(const ParsedCircuit& circuit) {
  constexpr double kPi = std::numbers::pi;
  const auto& ins = circuit.instructions;
  std::vector<std::vector<bool>> history(
      static_cast<std::size_t>(circuit.num_qubits),
      std::vector<bool>(static_cast<std::size_t>(circuit.num_qubits), false));
  CouplingGraph graph(circuit.num_qubits);

  auto is_cx = [&](std::size_t k, int a, int b) {
    return k < ins.size() && ins[k].name == "cx" &&
           ins[k].qubits == std::vector<int>{a, b};
  };
  auto is_rot = [&](std::size_t k, const char* name, int a, int b) {
    return k < ins.size() && ins[k].name == name &&
           ins[k].qubits == std::vector<int>{a, b} &&
           ins[k].params.size() == 1 &&
           std::abs(ins[k].params[0] - kPi / 2.0) < 1e-12;
  };
  auto is_sdg = [&](std::size_t k, int q) {
    return k < ins.size() && ins[k].name == "sdg" &&
           ins[k].qubits == std::vector<int>{q};
  };

  std::size_t i = 0;
  while (i < ins.size()) {
    int swap_a = -1;
    int swap_b = -1;
    std::size_t consumed = 0;
    if (ins[i].qubits.size() == 2) {
      const int a = ins[i].qubits[0];
      const int b = ins[i].qubits[1];
      if (ins[i].name == "swap") {
        swap_a = a;
        swap_b = b;
        consumed = 1;
      } else if (ins[i].name == "cx" && is_cx(i + 1, b, a) &&
                 is_cx(i + 2, a, b)) {
        swap_a = a;
        swap_b = b;
        consumed = 3;
      } else if (ins[i].name == "iswap" && is_sdg(i + 1, a) &&
                 is_sdg(i + 2, b)) {
        swap_a = a;
        swap_b = b;
        consumed = 3;
      } else if (is_rot(i, "rxx", a, b) && is_rot(i + 1, "ryy", a, b) &&
                 is_rot(i + 2, "rzz", a, b)) {
        swap_a = a;
        swap_b = b;
        consumed = 3;
      }
    }
    if (consumed > 0) {
      history[static_cast<std::size_t>(swap_a)]
             [static_cast<std::size_t>(swap_b)] = true;
      history[static_cast<std::size_t>(swap_b)]
             [static_cast<std::size_t>(swap_a)] = true;
      i += consumed;
      continue;
    }
    if (ins[i].qubits.size() == 2) {
      const int a = ins[i].qubits[0];
      const int b = ins[i].qubits[1];
      if (!history[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
        graph.add_edge(a, b);
      }
    }
    ++i;
  }
  return graph;
}

} // namespace qcf::testing

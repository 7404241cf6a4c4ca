#pragma once

#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "corrsim/gates.hpp"

namespace corrsim {

struct Circuit;

// Channel <-> spin encoding.
//
// Channel alpha in {1, ..., 2^mq} labels the spin configuration whose bit
// list (b_1, ..., b_mq), b_j in {0, 1}, is the bitwise complement of the
// big-endian binary digits of alpha - 1; the spin values are s_j = 2 b_j - 1.
// Channel 1 is all spins up, channel 2^mq all spins down, and for mq = 3 the
// channels 1..8 carry (1,1,1), (1,1,0), (1,0,1), (1,0,0), (0,1,1), (0,1,0),
// (0,0,1), (0,0,0). Qubit indices are 1-based; qubit 1 owns the most
// significant bit.

std::vector<int> channel_to_bits(int alpha, int mq);
int bits_to_channel(const std::vector<int>& bits);

/// Spin value s_j = +/-1 of qubit `qubit` in basis channel `alpha`.
int spin_value(int alpha, int qubit, int mq);

/// Phase rotation of one qubit: every basis state whose bit j is 0 picks up
/// the phase exp(i * delta).
struct Rotation {
  int qubit = 0;
  double delta = 0.0;
};

struct Hadamard {
  int qubit = 0;
};

/// Controlled NOT in the control-on-zero convention: the target bit flips on
/// basis states whose control bit is 0 (spin down). The textbook
/// control-on-one gate is this gate conjugated by a spin flip of the control
/// qubit; no silent conversion is performed anywhere.
struct Cnot {
  int control = 0;
  int target = 0;
};

using QubitGate = std::variant<Rotation, Hadamard, Cnot>;

/// One phase shift over the 2^{mq-1} channels whose bit `qubit` is 0.
PhaseShift compile_rotation(int qubit, double delta, int mq);

/// 2^{mq-2} disjoint switches; each pairs two channels that agree everywhere
/// except the target bit and have control bit 0. Requires mq >= 2.
std::vector<CorrelationGate> compile_cnot(int control, int target, int mq);

/// 2^{mq-1} disjoint canonical beam splits; each pairs the two channels that
/// differ only in bit `qubit`, with the bit-1 channel in the upper slot.
std::vector<CorrelationGate> compile_hadamard(int qubit, int mq);

std::vector<CorrelationGate> compile_gate(const QubitGate& gate, int mq);

/// Lowers a whole circuit, preserving temporal order; channel-level
/// instructions pass through unchanged. Errors are rethrown with the
/// offending instruction's position attached.
std::vector<CorrelationGate> compile_circuit(const Circuit& circuit);

/// Tensor-product oracle: the dense 2^mq x 2^mq matrix of a qubit gate,
/// built from 2x2 (or 4x4) factors and the channel encoding alone. This is
/// the reference the compiled gate sequences are verified against; it shares
/// no code with the compiled path.
Eigen::MatrixXcd qubit_gate_matrix(const QubitGate& gate, int mq);

/// Embeds an operator on the listed qubits (first listed qubit = most
/// significant sub-index) into the full channel space, identity elsewhere.
Eigen::MatrixXcd embed_qubit_operator(const Eigen::MatrixXcd& op,
                                      const std::vector<int>& qubits, int mq);

/// Product of the per-instruction oracle matrices of a circuit, first
/// instruction rightmost. Channel-level instructions contribute their own
/// gate matrix.
Eigen::MatrixXcd oracle_matrix(const Circuit& circuit);

}  // namespace corrsim

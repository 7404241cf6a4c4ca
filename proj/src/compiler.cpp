#include "corrsim/compiler.hpp"

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "corrsim/circuit.hpp"

namespace corrsim {

namespace {

void check_qubit_count(int mq) {
  if (mq < 1 || mq > 30) {
    throw std::invalid_argument("qubit count must be in 1..30, got " +
                                std::to_string(mq));
  }
}

void check_qubit(int qubit, int mq) {
  check_qubit_count(mq);
  if (qubit < 1 || qubit > mq) {
    throw std::out_of_range("qubit " + std::to_string(qubit) +
                            " out of range 1.." + std::to_string(mq));
  }
}

// Bit of qubit j in the 0-based channel index: 1 means spin down (b_j = 0).
int index_bit(int a, int qubit, int mq) { return (a >> (mq - qubit)) & 1; }

Eigen::Matrix2cd rotation_factor(double delta) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
  m(1, 1) = std::polar(1.0, delta);
  return m;
}

Eigen::Matrix2cd hadamard_factor() {
  const double s = 1.0 / std::numbers::sqrt2;
  Eigen::Matrix2cd m;
  m << s, s, s, -s;
  return m;
}

// 4x4 controlled-NOT factor on (control, target) sub-indices; flips the
// target when the control bit is 0, i.e. when the control sub-index is 1.
Eigen::Matrix4cd cnot_factor() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(2, 3) = 1.0;
  m(3, 2) = 1.0;
  return m;
}

void check_channel_index(int channel, Eigen::Index n) {
  if (channel < 1 || channel > n) {
    throw std::out_of_range("channel " + std::to_string(channel) +
                            " out of range 1.." + std::to_string(n));
  }
}

void check_channel_gate(const PhaseShift& g, Eigen::Index n) {
  for (const auto& [channel, angle] : g.phases) {
    (void)angle;
    check_channel_index(channel, n);
  }
}

void check_channel_gate(const Switch& g, Eigen::Index n) {
  check_channel_index(g.a, n);
  check_channel_index(g.b, n);
}

void check_channel_gate(const BeamSplit& g, Eigen::Index n) {
  check_channel_index(g.a, n);
  check_channel_index(g.b, n);
}

}  // namespace

std::vector<int> channel_to_bits(int alpha, int mq) {
  check_qubit_count(mq);
  const int n = 1 << mq;
  if (alpha < 1 || alpha > n) {
    throw std::out_of_range("channel " + std::to_string(alpha) +
                            " out of range 1.." + std::to_string(n));
  }
  std::vector<int> bits(mq);
  for (int j = 1; j <= mq; ++j) {
    bits[j - 1] = 1 - index_bit(alpha - 1, j, mq);
  }
  return bits;
}

int bits_to_channel(const std::vector<int>& bits) {
  const int mq = static_cast<int>(bits.size());
  check_qubit_count(mq);
  int a = 0;
  for (int j = 1; j <= mq; ++j) {
    if (bits[j - 1] != 0 && bits[j - 1] != 1) {
      throw std::invalid_argument("bit list entries must be 0 or 1");
    }
    a |= (1 - bits[j - 1]) << (mq - j);
  }
  return a + 1;
}

int spin_value(int alpha, int qubit, int mq) {
  check_qubit(qubit, mq);
  const int n = 1 << mq;
  if (alpha < 1 || alpha > n) {
    throw std::out_of_range("channel " + std::to_string(alpha) +
                            " out of range 1.." + std::to_string(n));
  }
  return 1 - 2 * index_bit(alpha - 1, qubit, mq);
}

PhaseShift compile_rotation(int qubit, double delta, int mq) {
  check_qubit(qubit, mq);
  PhaseShift shift;
  const int n = 1 << mq;
  for (int a = 0; a < n; ++a) {
    if (index_bit(a, qubit, mq) == 1) {
      shift.phases.emplace(a + 1, delta);
    }
  }
  return shift;
}

std::vector<CorrelationGate> compile_cnot(int control, int target, int mq) {
  if (mq < 2) {
    throw std::invalid_argument("compile_cnot: need at least 2 qubits");
  }
  check_qubit(control, mq);
  check_qubit(target, mq);
  if (control == target) {
    throw std::invalid_argument("compile_cnot: control and target must differ");
  }
  std::vector<CorrelationGate> switches;
  switches.reserve(std::size_t{1} << (mq - 2));
  const int n = 1 << mq;
  const int target_mask = 1 << (mq - target);
  for (int a = 0; a < n; ++a) {
    if (index_bit(a, control, mq) == 1 && index_bit(a, target, mq) == 0) {
      switches.emplace_back(Switch(a + 1, (a | target_mask) + 1));
    }
  }
  return switches;
}

std::vector<CorrelationGate> compile_hadamard(int qubit, int mq) {
  check_qubit(qubit, mq);
  std::vector<CorrelationGate> splits;
  splits.reserve(std::size_t{1} << (mq - 1));
  const int n = 1 << mq;
  const int mask = 1 << (mq - qubit);
  for (int a = 0; a < n; ++a) {
    if (index_bit(a, qubit, mq) == 0) {
      splits.emplace_back(BeamSplit(a + 1, (a | mask) + 1));
    }
  }
  return splits;
}

std::vector<CorrelationGate> compile_gate(const QubitGate& gate, int mq) {
  return std::visit(
      [mq](const auto& g) -> std::vector<CorrelationGate> {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, Rotation>) {
          return {compile_rotation(g.qubit, g.delta, mq)};
        } else if constexpr (std::is_same_v<G, Hadamard>) {
          return compile_hadamard(g.qubit, mq);
        } else {
          return compile_cnot(g.control, g.target, mq);
        }
      },
      gate);
}

std::vector<CorrelationGate> compile_circuit(const Circuit& circuit) {
  check_qubit_count(circuit.mq);
  std::vector<CorrelationGate> gates;
  std::size_t position = 0;
  for (const Instruction& instruction : circuit.instructions) {
    ++position;
    try {
      std::visit(
          [&](const auto& instr) {
            using T = std::decay_t<decltype(instr)>;
            if constexpr (std::is_same_v<T, Rotation> ||
                          std::is_same_v<T, Hadamard> ||
                          std::is_same_v<T, Cnot>) {
              auto lowered = compile_gate(QubitGate(instr), circuit.mq);
              gates.insert(gates.end(),
                           std::make_move_iterator(lowered.begin()),
                           std::make_move_iterator(lowered.end()));
            } else {
              // Channel-level gates pass through; only range-check them.
              check_channel_gate(instr, circuit.channel_count());
              gates.emplace_back(instr);
            }
          },
          instruction);
    } catch (const std::exception& e) {
      throw std::invalid_argument("instruction " + std::to_string(position) +
                                  ": " + e.what());
    }
  }
  return gates;
}

Eigen::MatrixXcd embed_qubit_operator(const Eigen::MatrixXcd& op,
                                      const std::vector<int>& qubits, int mq) {
  check_qubit_count(mq);
  const int k = static_cast<int>(qubits.size());
  if (k < 1 || k > mq) {
    throw std::invalid_argument("embed_qubit_operator: bad qubit list size");
  }
  const Eigen::Index dim = Eigen::Index{1} << k;
  if (op.rows() != dim || op.cols() != dim) {
    throw std::invalid_argument(
        "embed_qubit_operator: operator must be 2^k x 2^k for k listed qubits");
  }
  for (int i = 0; i < k; ++i) {
    check_qubit(qubits[i], mq);
    for (int j = i + 1; j < k; ++j) {
      if (qubits[i] == qubits[j]) {
        throw std::invalid_argument("embed_qubit_operator: repeated qubit");
      }
    }
  }
  const Eigen::Index n = Eigen::Index{1} << mq;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    int row_sub = 0;
    for (int i = 0; i < k; ++i) {
      row_sub = (row_sub << 1) | index_bit(static_cast<int>(r), qubits[i], mq);
    }
    for (Eigen::Index col_sub = 0; col_sub < dim; ++col_sub) {
      Eigen::Index c = r;
      for (int i = 0; i < k; ++i) {
        const Eigen::Index mask = Eigen::Index{1} << (mq - qubits[i]);
        if ((col_sub >> (k - 1 - i)) & 1) {
          c |= mask;
        } else {
          c &= ~mask;
        }
      }
      m(r, c) += op(row_sub, col_sub);
    }
  }
  return m;
}

Eigen::MatrixXcd qubit_gate_matrix(const QubitGate& gate, int mq) {
  return std::visit(
      [mq](const auto& g) -> Eigen::MatrixXcd {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, Rotation>) {
          check_qubit(g.qubit, mq);
          return embed_qubit_operator(rotation_factor(g.delta), {g.qubit}, mq);
        } else if constexpr (std::is_same_v<G, Hadamard>) {
          check_qubit(g.qubit, mq);
          return embed_qubit_operator(hadamard_factor(), {g.qubit}, mq);
        } else {
          if (g.control == g.target) {
            throw std::invalid_argument("Cnot: control and target must differ");
          }
          check_qubit(g.control, mq);
          check_qubit(g.target, mq);
          return embed_qubit_operator(cnot_factor(), {g.control, g.target}, mq);
        }
      },
      gate);
}

Eigen::MatrixXcd oracle_matrix(const Circuit& circuit) {
  check_qubit_count(circuit.mq);
  const Eigen::Index n = circuit.channel_count();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n, n);
  for (const Instruction& instruction : circuit.instructions) {
    std::visit(
        [&](const auto& instr) {
          using T = std::decay_t<decltype(instr)>;
          if constexpr (std::is_same_v<T, Rotation> ||
                        std::is_same_v<T, Hadamard> ||
                        std::is_same_v<T, Cnot>) {
            m = qubit_gate_matrix(QubitGate(instr), circuit.mq) * m;
          } else {
            m = gate_matrix(CorrelationGate(instr), n) * m;
          }
        },
        instruction);
  }
  return m;
}

}  // namespace corrsim

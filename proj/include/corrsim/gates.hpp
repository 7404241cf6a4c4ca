#pragma once

#include <map>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "corrsim/state.hpp"

namespace corrsim {

// The three hardware primitives acting on channel amplitudes, plus a dense
// escape hatch. Channel indices are 1-based. Switch and BeamSplit touch two
// amplitudes and cost O(1) regardless of the channel count; PhaseShift costs
// O(size of its phase map).

/// Multiplies channel alpha by exp(i * gamma_alpha). Channels absent from the
/// map keep phase 0.
struct PhaseShift {
  std::map<int, double> phases;
};

/// Exchanges the amplitudes of channels a and b.
struct Switch {
  int a = 0;
  int b = 0;

  Switch(int a, int b);
};

/// Redistributes two channels through the 2x2 splitter
///   (1/sqrt(2)) [[e^{i gamma}, e^{i gamma'}], [e^{i delta}, e^{i delta'}]]
/// acting on (psi_a, psi_b). The phases must satisfy the unitarity relation
/// exp(i(delta - delta')) = -exp(i(gamma - gamma')); constructors reject
/// violations. The default phases (0, 0, 0, pi) make the splitter exactly the
/// 2x2 Hadamard matrix.
struct BeamSplit {
  int a = 0;
  int b = 0;
  double gamma = 0.0;
  double gamma_p = 0.0;
  double delta = 0.0;
  double delta_p = 0.0;

  BeamSplit(int a, int b);
  BeamSplit(int a, int b, double gamma, double gamma_p, double delta,
            double delta_p);

  Eigen::Matrix2cd splitter() const;
  bool is_canonical() const;
};

/// Dense unitary over the whole channel space.
struct GenericUnitary {
  Eigen::MatrixXcd u;

  explicit GenericUnitary(Eigen::MatrixXcd u);
};

using CorrelationGate = std::variant<PhaseShift, Switch, BeamSplit, GenericUnitary>;

/// Hermitian generator of a unitary step, step = exp(-i * eps * h).
struct HamiltonianMatrix {
  Eigen::MatrixXcd h;
  double eps = 1.0;
};

// Gate lists are temporal: the first element acts on the state first. As a
// matrix product this is right-to-left, compose({g1, g2}) = M(g2) * M(g1).

/// Applies one gate; pass an rvalue to update in place without copying.
ComplexState apply_gate(const CorrelationGate& gate, ComplexState psi);

/// In-place core of apply_gate, operating on raw amplitudes.
void apply_in_place(const CorrelationGate& gate, Eigen::VectorXcd& psi);

/// Dense matrix of one gate on n_channels channels.
Eigen::MatrixXcd gate_matrix(const CorrelationGate& gate,
                             Eigen::Index n_channels);

/// m <- M(gate) * m without forming M(gate) densely.
void left_apply(const CorrelationGate& gate, Eigen::MatrixXcd& m);

/// Product of the gate matrices, first gate rightmost.
Eigen::MatrixXcd compose(const std::vector<CorrelationGate>& gates,
                         Eigen::Index n_channels);

/// True iff the two gate matrices commute entrywise within tol.
bool commutes(const CorrelationGate& g1, const CorrelationGate& g2,
              Eigen::Index n_channels, double tol = kMatrixTol);

/// Hermitian h with u = exp(-i * eps * h), from the principal matrix
/// logarithm (eigenphases in (-pi, pi)). Throws std::domain_error when an
/// eigenphase sits at pi, where the logarithm branch is ambiguous.
HamiltonianMatrix generator_of_step(const Eigen::MatrixXcd& u, double eps);

/// Three-gate sequence (phase shift, the given split, phase shift) whose
/// composition is exactly the Hadamard matrix on the split's channel pair,
/// for any phases satisfying the unitarity relation.
std::vector<CorrelationGate> hadamard_factorization(const BeamSplit& split);

}  // namespace corrsim

#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "corrsim/gates.hpp"

namespace corrsim {

/// Product of spin values s_{j1} s_{j2} ... over distinct qubits.
struct SpinObservable {
  std::vector<int> qubits;

  /// "s1s3" style label.
  std::string name() const;
};

/// Operator that is diagonal in the channel basis (one eigenvalue per
/// channel); spin products are of this kind.
struct DiagonalOperator {
  Eigen::VectorXd diag;
};

/// Expectation of a spin product from channel probabilities alone:
/// sum_alpha pbar_alpha * prod_j s_j(alpha).
double spin_expectation(const Eigen::VectorXd& pbar, const SpinObservable& obs,
                        int mq);

/// The spin product as a diagonal operator.
DiagonalOperator spin_diagonal(const SpinObservable& obs, int mq);

/// Real expectation value psi^dagger op psi of a Hermitian operator.
double operator_expectation(const ComplexState& psi,
                            const Eigen::MatrixXcd& op);

/// Conjugates an operator backwards through a gate sequence: U op U^dagger
/// with U = compose(gates). Measuring the result on the evolved state equals
/// measuring op on the original state.
Eigen::MatrixXcd heisenberg_operator(const Eigen::MatrixXcd& op,
                                     const std::vector<CorrelationGate>& gates,
                                     Eigen::Index n_channels);

Eigen::Matrix2cd pauli_x();
Eigen::Matrix2cd pauli_z();

/// Measurement settings for a CHSH evaluation: two observables per side,
/// each a 2x2 Hermitian involution (eigenvalues +/-1).
struct ChshSettings {
  Eigen::Matrix2cd a;
  Eigen::Matrix2cd a_alt;
  Eigen::Matrix2cd b;
  Eigen::Matrix2cd b_alt;
};

/// Settings that maximize the CHSH value on a maximally entangled pair:
/// a = pauli_z, a' = pauli_x, b = (pauli_z + pauli_x)/sqrt(2),
/// b' = (pauli_z - pauli_x)/sqrt(2).
ChshSettings chsh_optimal_settings();

/// |<A B> + <A B'> + <A' B> - <A' B'>| with the settings embedded on qubits
/// (qubit_a, qubit_b). Bounded by 2 sqrt(2) for any state and valid settings.
double chsh_value(const ComplexState& psi, const ChshSettings& settings,
                  int qubit_a, int qubit_b);

}  // namespace corrsim

#pragma once

#include <Eigen/Dense>

#include "corrsim/linalg.hpp"

namespace corrsim {

// Wave functions live on waveguide channels. Channel alpha (1-based in every
// public interface) owns the interleaved pair of real amplitudes
// (q[2a], q[2a+1]) with a = alpha - 1, which hold the real and imaginary part
// of the complex amplitude psi_alpha. All states are unit vectors; the squared
// amplitudes are the relative channel intensities, i.e. the probabilities.

/// Classical wave function: 2 * n_channels real amplitudes, unit norm.
struct RealState {
  Eigen::VectorXd q;

  /// Validates that the length is a power of two (>= 2) and the norm is 1
  /// within kNormTol.
  explicit RealState(Eigen::VectorXd amplitudes);

  Eigen::Index channel_count() const { return q.size() / 2; }
};

/// Complex wave function over 2^mq channels, unit norm.
struct ComplexState {
  Eigen::VectorXcd psi;
  int mq = 0;

  explicit ComplexState(Eigen::VectorXcd amplitudes);

  /// All intensity concentrated in one channel (1-based).
  static ComplexState basis(int mq, int channel);

  Eigen::Index channel_count() const { return psi.size(); }
};

struct NormalizedFields {
  RealState state;
  double total_intensity;
};

/// Normalizes raw field values into a classical wave function,
/// q = F / sqrt(sum F^2), and reports the total intensity sum F^2.
/// The squared components of the result are the relative intensities.
/// Throws std::domain_error when every field value is zero.
NormalizedFields normalize_fields(const Eigen::VectorXd& fields);

/// psi_alpha = q[2a] + i q[2a+1].
ComplexState to_complex(const RealState& state);

/// Inverse of to_complex.
RealState to_real(const ComplexState& state);

/// Channel probabilities |psi_alpha|^2.
Eigen::VectorXd probabilities(const ComplexState& state);

/// Pair (k, i) of anticommuting real matrices with k^2 = 1 and i^2 = -1.
/// Under the interleaved pairing, k acts as complex conjugation and i as
/// multiplication by the imaginary unit.
struct ComplexStructure {
  Eigen::MatrixXd k;
  Eigen::MatrixXd i;
};

/// Block-diagonal standard structure: per channel, k = diag(1, -1) and
/// i = [[0, -1], [1, 0]].
ComplexStructure standard_complex_structure(Eigen::Index n_channels);

/// True iff the orthogonal step commutes with cs.i entrywise within tol, in
/// which case the step is representable as a unitary on the complex state
/// (see induced_unitary). Throws std::invalid_argument for non-orthogonal
/// input.
bool is_compatible(const Eigen::MatrixXd& step, const ComplexStructure& cs,
                   double tol = kMatrixTol);

/// Real 2n x 2n matrix acting on RealState exactly as u acts on ComplexState.
Eigen::MatrixXd embed_unitary(const Eigen::MatrixXcd& u);

/// Complex n x n matrix read off a compatible real step; inverse of
/// embed_unitary on the compatible subgroup.
Eigen::MatrixXcd induced_unitary(const Eigen::MatrixXd& step);

}  // namespace corrsim

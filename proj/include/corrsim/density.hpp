#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "corrsim/gates.hpp"

namespace corrsim {

/// Channel density matrix: Hermitian, unit trace, positive semidefinite.
/// The diagonal holds the channel probabilities.
struct DensityMatrix {
  Eigen::MatrixXcd rho;

  explicit DensityMatrix(Eigen::MatrixXcd rho);

  Eigen::Index channel_count() const { return rho.rows(); }
};

struct EnsembleMember {
  double weight;
  ComplexState state;
};

enum class PhaseMode {
  Fixed,          ///< every member uses the phases in fixed_phases
  UniformRandom,  ///< independent uniform phases on [0, 2pi) per member
};

/// Ensemble of wave functions sharing the intensity profile pbar, with
/// member phases drawn per `mode`. Sampling is deterministic in `seed`.
struct PhaseEnsembleSpec {
  Eigen::VectorXd pbar;
  PhaseMode mode = PhaseMode::UniformRandom;
  Eigen::VectorXd fixed_phases;
  int samples = 1;
  std::uint64_t seed = 0;
};

/// rho = sum_m w_m psi^(m) psi^(m)dagger, accumulated in member order.
/// Weights must be non-negative and sum to 1 within 1e-10.
DensityMatrix density_from_ensemble(const std::vector<EnsembleMember>& members);

/// One evolution step rho -> U rho U^dagger with U = compose(gates).
DensityMatrix evolve_density(const DensityMatrix& rho,
                             const std::vector<CorrelationGate>& gates);

/// Draws `samples` equal-weight members psi_alpha = sqrt(pbar_alpha) *
/// exp(i phi_alpha) with phases per the spec's mode.
std::vector<EnsembleMember> sample_ensemble(const PhaseEnsembleSpec& spec);

/// Analytic limit of infinitely many uniform-phase samples: diag(pbar).
DensityMatrix dephased_density(const Eigen::VectorXd& pbar);

/// Largest |rho_ab| over a != b; 0 for a 1x1 matrix.
double max_offdiagonal(const DensityMatrix& rho);

/// tr(rho^2); 1 exactly for pure states, invariant under unitary evolution.
double purity(const DensityMatrix& rho);

}  // namespace corrsim

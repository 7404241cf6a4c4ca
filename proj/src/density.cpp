#include "corrsim/density.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Eigenvalues>

namespace corrsim {

namespace {

constexpr double kDensityTol = 1e-10;

}  // namespace

DensityMatrix::DensityMatrix(Eigen::MatrixXcd rho_in) : rho(std::move(rho_in)) {
  if (rho.rows() != rho.cols() || rho.rows() < 1) {
    throw std::invalid_argument("DensityMatrix: matrix must be square");
  }
  if (!is_hermitian(rho, kDensityTol)) {
    throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
  }
  const std::complex<double> trace = rho.trace();
  if (std::abs(trace - 1.0) > kDensityTol) {
    throw std::invalid_argument("DensityMatrix: trace deviates from 1 by " +
                                std::to_string(std::abs(trace - 1.0)));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho,
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("DensityMatrix: eigenvalue computation failed");
  }
  if (solver.eigenvalues().minCoeff() < -kDensityTol) {
    throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                std::to_string(solver.eigenvalues().minCoeff()));
  }
}

DensityMatrix density_from_ensemble(
    const std::vector<EnsembleMember>& members) {
  if (members.empty()) {
    throw std::invalid_argument("density_from_ensemble: empty ensemble");
  }
  const Eigen::Index n = members.front().state.channel_count();
  double total_weight = 0.0;
  for (const EnsembleMember& member : members) {
    if (member.weight < 0.0) {
      throw std::invalid_argument("density_from_ensemble: negative weight");
    }
    if (member.state.channel_count() != n) {
      throw std::invalid_argument(
          "density_from_ensemble: members have mixed channel counts");
    }
    total_weight += member.weight;
  }
  if (std::abs(total_weight - 1.0) > kDensityTol) {
    throw std::invalid_argument(
        "density_from_ensemble: weights sum to " + std::to_string(total_weight));
  }
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(n, n);
  for (const EnsembleMember& member : members) {
    rho.noalias() +=
        member.weight * (member.state.psi * member.state.psi.adjoint());
  }
  return DensityMatrix(std::move(rho));
}

DensityMatrix evolve_density(const DensityMatrix& rho,
                             const std::vector<CorrelationGate>& gates) {
  const Eigen::MatrixXcd u = compose(gates, rho.channel_count());
  return DensityMatrix(u * rho.rho * u.adjoint());
}

std::vector<EnsembleMember> sample_ensemble(const PhaseEnsembleSpec& spec) {
  const Eigen::Index n = spec.pbar.size();
  if (n < 1 || !is_power_of_two(n)) {
    throw std::invalid_argument("sample_ensemble: pbar length must be 2^mq");
  }
  if (spec.pbar.minCoeff() < 0.0 || std::abs(spec.pbar.sum() - 1.0) > 1e-9) {
    throw std::invalid_argument(
        "sample_ensemble: pbar is not a probability vector");
  }
  if (spec.samples < 1) {
    throw std::invalid_argument("sample_ensemble: need at least one sample");
  }
  if (spec.mode == PhaseMode::Fixed && spec.fixed_phases.size() != n) {
    throw std::invalid_argument(
        "sample_ensemble: fixed_phases length must match pbar");
  }

  const Eigen::VectorXd roots = spec.pbar.cwiseSqrt();
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

  std::vector<EnsembleMember> members;
  members.reserve(spec.samples);
  const double weight = 1.0 / spec.samples;
  for (int m = 0; m < spec.samples; ++m) {
    Eigen::VectorXcd psi(n);
    for (Eigen::Index a = 0; a < n; ++a) {
      const double phi =
          spec.mode == PhaseMode::Fixed ? spec.fixed_phases[a] : angle(rng);
      psi[a] = std::polar(roots[a], phi);
    }
    members.push_back({weight, ComplexState(std::move(psi))});
  }
  return members;
}

DensityMatrix dephased_density(const Eigen::VectorXd& pbar) {
  return DensityMatrix(pbar.cast<std::complex<double>>().asDiagonal());
}

double max_offdiagonal(const DensityMatrix& rho) {
  const Eigen::Index n = rho.channel_count();
  double largest = 0.0;
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      if (r != c) largest = std::max(largest, std::abs(rho.rho(r, c)));
    }
  }
  return largest;
}

double purity(const DensityMatrix& rho) {
  // tr(rho^2) = ||rho||_F^2 for Hermitian rho.
  return rho.rho.squaredNorm();
}

}  // namespace corrsim

#include "corrsim/wdynamics.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Eigenvalues>

#include "corrsim/gates.hpp"

namespace corrsim {

namespace {

constexpr double kBranchTol = 1e-9;

void check_distinct_channels(const std::vector<int>& channels,
                             Eigen::Index n_channels) {
  if (channels.empty()) {
    throw std::invalid_argument("stochastic_gate: empty channel list");
  }
  for (std::size_t i = 0; i < channels.size(); ++i) {
    if (channels[i] < 1 || channels[i] > n_channels) {
      throw std::out_of_range("stochastic_gate: channel " +
                              std::to_string(channels[i]) +
                              " out of range 1.." + std::to_string(n_channels));
    }
    for (std::size_t j = i + 1; j < channels.size(); ++j) {
      if (channels[i] == channels[j]) {
        throw std::invalid_argument("stochastic_gate: repeated channel");
      }
    }
  }
}

}  // namespace

OrthogonalStep::OrthogonalStep(Eigen::MatrixXd s_in) : s(std::move(s_in)) {
  if (!is_orthogonal(s)) {
    throw std::invalid_argument("OrthogonalStep: matrix is not orthogonal");
  }
}

RealState apply_orthogonal(const OrthogonalStep& step, const RealState& q) {
  if (step.dimension() != q.q.size()) {
    throw std::invalid_argument("apply_orthogonal: step is " +
                                std::to_string(step.dimension()) +
                                "-dimensional, state has " +
                                std::to_string(q.q.size()) + " components");
  }
  return RealState(step.s * q.q);
}

AntisymmetricGenerator generator(const OrthogonalStep& step, double eps) {
  if (eps <= 0.0) {
    throw std::invalid_argument("generator: eps must be positive");
  }
  // Orthogonal matrices are normal; the principal logarithm comes from the
  // complex Schur form, and is real because eigenphases pair up as +/-theta.
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(
      step.s.cast<std::complex<double>>());
  if (schur.info() != Eigen::Success) {
    throw std::runtime_error("generator: Schur decomposition failed");
  }
  const Eigen::Index n = step.dimension();
  Eigen::VectorXcd log_eigenvalues(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double theta = std::arg(schur.matrixT()(k, k));
    if (std::numbers::pi - std::abs(theta) < kBranchTol) {
      throw std::domain_error(
          "generator: eigenvalue at -1, principal logarithm is undefined");
    }
    log_eigenvalues[k] = std::complex<double>(0.0, theta);
  }
  const Eigen::MatrixXcd& q = schur.matrixU();
  const Eigen::MatrixXcd log_s =
      q * log_eigenvalues.asDiagonal() * q.adjoint();
  Eigen::MatrixXd w = log_s.real() / eps;
  w = 0.5 * (w - w.transpose()).eval();
  return {std::move(w), eps};
}

AntilinearParts antilinear_split(const OrthogonalStep& step,
                                 const ComplexStructure& cs) {
  if (step.dimension() != cs.i.rows()) {
    throw std::invalid_argument("antilinear_split: dimension mismatch");
  }
  const Eigen::MatrixXd conjugated = cs.i * step.s * cs.i;
  return {0.5 * (step.s - conjugated), 0.5 * (step.s + conjugated)};
}

OrthogonalStep stochastic_gate(StochasticKind kind,
                               const std::vector<int>& channels,
                               Eigen::Index n_channels, std::uint64_t seed) {
  if (n_channels < 1) {
    throw std::invalid_argument("stochastic_gate: need >= 1 channel");
  }
  check_distinct_channels(channels, n_channels);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

  if (kind == StochasticKind::Phase) {
    Eigen::MatrixXd s =
        Eigen::MatrixXd::Identity(2 * n_channels, 2 * n_channels);
    for (int channel : channels) {
      const double gamma = angle(rng);
      const Eigen::Index a = 2 * (channel - 1);
      s(a, a) = std::cos(gamma);
      s(a, a + 1) = -std::sin(gamma);
      s(a + 1, a) = std::sin(gamma);
      s(a + 1, a + 1) = std::cos(gamma);
    }
    return OrthogonalStep(std::move(s));
  }

  if (channels.size() != 2) {
    throw std::invalid_argument(
        "stochastic_gate: a beam split needs exactly two channels");
  }
  const double gamma = angle(rng);
  const double gamma_p = angle(rng);
  const double delta = angle(rng);
  const double delta_p = delta - gamma + gamma_p - std::numbers::pi;
  const BeamSplit split(channels[0], channels[1], gamma, gamma_p, delta,
                        delta_p);
  return OrthogonalStep(embed_unitary(gate_matrix(split, n_channels)));
}

}  // namespace corrsim

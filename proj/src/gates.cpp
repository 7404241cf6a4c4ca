#include "corrsim/gates.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Eigenvalues>

namespace corrsim {

namespace {

using std::complex;

// Tolerance for the beam-split phase relation.
constexpr double kPhaseRelationTol = 1e-12;

// Eigenphases closer than this to pi are treated as branch-ambiguous.
constexpr double kBranchTol = 1e-9;

void check_channel(int channel, Eigen::Index n_channels, const char* what) {
  if (channel < 1 || channel > n_channels) {
    throw std::out_of_range(std::string(what) + ": channel " +
                            std::to_string(channel) + " out of range 1.." +
                            std::to_string(n_channels));
  }
}

void check_phase_relation(double gamma, double gamma_p, double delta,
                          double delta_p) {
  const complex<double> lhs = std::polar(1.0, delta - delta_p);
  const complex<double> rhs = -std::polar(1.0, gamma - gamma_p);
  if (std::abs(lhs - rhs) > kPhaseRelationTol) {
    throw std::invalid_argument(
        "BeamSplit: phases violate exp(i(delta-delta')) = -exp(i(gamma-gamma')) "
        "by " +
        std::to_string(std::abs(lhs - rhs)));
  }
}

}  // namespace

Switch::Switch(int a, int b) : a(a), b(b) {
  if (a < 1 || b < 1) {
    throw std::invalid_argument("Switch: channel indices are 1-based");
  }
  if (a == b) {
    throw std::invalid_argument("Switch: channels must differ");
  }
}

BeamSplit::BeamSplit(int a, int b)
    : BeamSplit(a, b, 0.0, 0.0, 0.0, std::numbers::pi) {}

BeamSplit::BeamSplit(int a, int b, double gamma, double gamma_p, double delta,
                     double delta_p)
    : a(a), b(b), gamma(gamma), gamma_p(gamma_p), delta(delta),
      delta_p(delta_p) {
  if (a < 1 || b < 1) {
    throw std::invalid_argument("BeamSplit: channel indices are 1-based");
  }
  if (a == b) {
    throw std::invalid_argument("BeamSplit: channels must differ");
  }
  check_phase_relation(gamma, gamma_p, delta, delta_p);
}

Eigen::Matrix2cd BeamSplit::splitter() const {
  const double s = 1.0 / std::numbers::sqrt2;
  Eigen::Matrix2cd m;
  m << s * std::polar(1.0, gamma), s * std::polar(1.0, gamma_p),
      s * std::polar(1.0, delta), s * std::polar(1.0, delta_p);
  return m;
}

bool BeamSplit::is_canonical() const {
  return gamma == 0.0 && gamma_p == 0.0 && delta == 0.0 &&
         delta_p == std::numbers::pi;
}

GenericUnitary::GenericUnitary(Eigen::MatrixXcd u_in) : u(std::move(u_in)) {
  if (!is_unitary(u)) {
    throw std::invalid_argument("GenericUnitary: matrix is not unitary");
  }
}

void apply_in_place(const CorrelationGate& gate, Eigen::VectorXcd& psi) {
  const Eigen::Index n = psi.size();
  std::visit(
      [&](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, PhaseShift>) {
          for (const auto& [channel, angle] : g.phases) {
            check_channel(channel, n, "PhaseShift");
            psi[channel - 1] *= std::polar(1.0, angle);
          }
        } else if constexpr (std::is_same_v<G, Switch>) {
          check_channel(g.a, n, "Switch");
          check_channel(g.b, n, "Switch");
          std::swap(psi[g.a - 1], psi[g.b - 1]);
        } else if constexpr (std::is_same_v<G, BeamSplit>) {
          check_channel(g.a, n, "BeamSplit");
          check_channel(g.b, n, "BeamSplit");
          const Eigen::Matrix2cd m = g.splitter();
          const complex<double> pa = psi[g.a - 1];
          const complex<double> pb = psi[g.b - 1];
          psi[g.a - 1] = m(0, 0) * pa + m(0, 1) * pb;
          psi[g.b - 1] = m(1, 0) * pa + m(1, 1) * pb;
        } else {
          if (g.u.rows() != n) {
            throw std::invalid_argument(
                "GenericUnitary: state has " + std::to_string(n) +
                " channels, matrix is " + std::to_string(g.u.rows()) + "x" +
                std::to_string(g.u.cols()));
          }
          psi = g.u * psi;
        }
      },
      gate);
}

ComplexState apply_gate(const CorrelationGate& gate, ComplexState psi) {
  apply_in_place(gate, psi.psi);
  return psi;
}

void left_apply(const CorrelationGate& gate, Eigen::MatrixXcd& m) {
  const Eigen::Index n = m.rows();
  std::visit(
      [&](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, PhaseShift>) {
          for (const auto& [channel, angle] : g.phases) {
            check_channel(channel, n, "PhaseShift");
            m.row(channel - 1) *= std::polar(1.0, angle);
          }
        } else if constexpr (std::is_same_v<G, Switch>) {
          check_channel(g.a, n, "Switch");
          check_channel(g.b, n, "Switch");
          m.row(g.a - 1).swap(m.row(g.b - 1));
        } else if constexpr (std::is_same_v<G, BeamSplit>) {
          check_channel(g.a, n, "BeamSplit");
          check_channel(g.b, n, "BeamSplit");
          const Eigen::Matrix2cd s = g.splitter();
          const Eigen::RowVectorXcd ra = m.row(g.a - 1);
          const Eigen::RowVectorXcd rb = m.row(g.b - 1);
          m.row(g.a - 1) = s(0, 0) * ra + s(0, 1) * rb;
          m.row(g.b - 1) = s(1, 0) * ra + s(1, 1) * rb;
        } else {
          if (g.u.rows() != n) {
            throw std::invalid_argument("GenericUnitary: dimension mismatch");
          }
          m = g.u * m;
        }
      },
      gate);
}

Eigen::MatrixXcd gate_matrix(const CorrelationGate& gate,
                             Eigen::Index n_channels) {
  if (n_channels < 1) {
    throw std::invalid_argument("gate_matrix: need >= 1 channel");
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n_channels, n_channels);
  left_apply(gate, m);
  return m;
}

Eigen::MatrixXcd compose(const std::vector<CorrelationGate>& gates,
                         Eigen::Index n_channels) {
  if (n_channels < 1) {
    throw std::invalid_argument("compose: need >= 1 channel");
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n_channels, n_channels);
  for (const CorrelationGate& gate : gates) {
    left_apply(gate, m);
  }
  return m;
}

bool commutes(const CorrelationGate& g1, const CorrelationGate& g2,
              Eigen::Index n_channels, double tol) {
  const Eigen::MatrixXcd m1 = gate_matrix(g1, n_channels);
  const Eigen::MatrixXcd m2 = gate_matrix(g2, n_channels);
  return max_abs((m1 * m2 - m2 * m1).eval()) < tol;
}

HamiltonianMatrix generator_of_step(const Eigen::MatrixXcd& u, double eps) {
  if (eps <= 0.0) {
    throw std::invalid_argument("generator_of_step: eps must be positive");
  }
  if (!is_unitary(u)) {
    throw std::invalid_argument("generator_of_step: matrix is not unitary");
  }
  // A unitary matrix is normal, so its Schur form is diagonal up to rounding
  // and the principal logarithm is Q log(T) Q^dagger on the eigenphases.
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(u);
  if (schur.info() != Eigen::Success) {
    throw std::runtime_error("generator_of_step: Schur decomposition failed");
  }
  const Eigen::Index n = u.rows();
  Eigen::VectorXd phases(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double theta = std::arg(schur.matrixT()(k, k));
    if (std::numbers::pi - std::abs(theta) < kBranchTol) {
      throw std::domain_error(
          "generator_of_step: eigenphase at pi, logarithm branch is "
          "ambiguous");
    }
    phases[k] = theta;
  }
  const Eigen::MatrixXcd& q = schur.matrixU();
  Eigen::MatrixXcd h =
      q * (-phases / eps).asDiagonal() * q.adjoint();
  h = 0.5 * (h + h.adjoint()).eval();
  return {std::move(h), eps};
}

std::vector<CorrelationGate> hadamard_factorization(const BeamSplit& split) {
  PhaseShift pre{{{split.a, -split.gamma}, {split.b, -split.gamma_p}}};
  PhaseShift post{{{split.b, split.gamma - split.delta}}};
  return {pre, split, post};
}

}  // namespace corrsim

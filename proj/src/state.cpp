#include "corrsim/state.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace corrsim {

namespace {

void check_unit_norm(double squared_norm, const char* what) {
  if (std::abs(squared_norm - 1.0) > kNormTol) {
    throw std::invalid_argument(std::string(what) +
                                ": squared norm deviates from 1 by " +
                                std::to_string(squared_norm - 1.0));
  }
}

}  // namespace

RealState::RealState(Eigen::VectorXd amplitudes) : q(std::move(amplitudes)) {
  if (q.size() < 2 || !is_power_of_two(q.size())) {
    throw std::invalid_argument(
        "RealState: length must be 2 * 2^mq, got " + std::to_string(q.size()));
  }
  check_unit_norm(q.squaredNorm(), "RealState");
}

ComplexState::ComplexState(Eigen::VectorXcd amplitudes)
    : psi(std::move(amplitudes)) {
  if (psi.size() < 1 || !is_power_of_two(psi.size())) {
    throw std::invalid_argument("ComplexState: channel count must be 2^mq, got " +
                                std::to_string(psi.size()));
  }
  mq = 0;
  while ((Eigen::Index{1} << mq) < psi.size()) ++mq;
  check_unit_norm(psi.squaredNorm(), "ComplexState");
}

ComplexState ComplexState::basis(int mq, int channel) {
  if (mq < 0 || mq > 30) {
    throw std::invalid_argument("ComplexState::basis: invalid qubit count");
  }
  const Eigen::Index n = Eigen::Index{1} << mq;
  if (channel < 1 || channel > n) {
    throw std::out_of_range("ComplexState::basis: channel " +
                            std::to_string(channel) + " out of range 1.." +
                            std::to_string(n));
  }
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(n);
  psi[channel - 1] = 1.0;
  return ComplexState(std::move(psi));
}

NormalizedFields normalize_fields(const Eigen::VectorXd& fields) {
  if (fields.size() < 2 || !is_power_of_two(fields.size())) {
    throw std::invalid_argument(
        "normalize_fields: need 2 * 2^mq field values, got " +
        std::to_string(fields.size()));
  }
  const double total = fields.squaredNorm();
  if (!std::isfinite(total)) {
    throw std::invalid_argument("normalize_fields: non-finite field values");
  }
  if (total == 0.0) {
    throw std::domain_error(
        "normalize_fields: all field values are zero, relative intensities "
        "are undefined");
  }
  return {RealState(fields / std::sqrt(total)), total};
}

ComplexState to_complex(const RealState& state) {
  const Eigen::Index n = state.channel_count();
  Eigen::VectorXcd psi(n);
  for (Eigen::Index a = 0; a < n; ++a) {
    psi[a] = std::complex<double>(state.q[2 * a], state.q[2 * a + 1]);
  }
  return ComplexState(std::move(psi));
}

RealState to_real(const ComplexState& state) {
  const Eigen::Index n = state.channel_count();
  Eigen::VectorXd q(2 * n);
  for (Eigen::Index a = 0; a < n; ++a) {
    q[2 * a] = state.psi[a].real();
    q[2 * a + 1] = state.psi[a].imag();
  }
  return RealState(std::move(q));
}

Eigen::VectorXd probabilities(const ComplexState& state) {
  return state.psi.cwiseAbs2();
}

ComplexStructure standard_complex_structure(Eigen::Index n_channels) {
  if (n_channels < 1) {
    throw std::invalid_argument("standard_complex_structure: need >= 1 channel");
  }
  const Eigen::Index n = 2 * n_channels;
  ComplexStructure cs{Eigen::MatrixXd::Zero(n, n), Eigen::MatrixXd::Zero(n, n)};
  for (Eigen::Index a = 0; a < n_channels; ++a) {
    cs.k(2 * a, 2 * a) = 1.0;
    cs.k(2 * a + 1, 2 * a + 1) = -1.0;
    cs.i(2 * a, 2 * a + 1) = -1.0;
    cs.i(2 * a + 1, 2 * a) = 1.0;
  }
  return cs;
}

bool is_compatible(const Eigen::MatrixXd& step, const ComplexStructure& cs,
                   double tol) {
  if (step.rows() != cs.i.rows() || step.cols() != cs.i.cols()) {
    throw std::invalid_argument("is_compatible: dimension mismatch");
  }
  if (!is_orthogonal(step, tol)) {
    throw std::invalid_argument("is_compatible: step is not orthogonal");
  }
  return max_abs_diff((step * cs.i).eval(), (cs.i * step).eval()) < tol;
}

Eigen::MatrixXd embed_unitary(const Eigen::MatrixXcd& u) {
  if (u.rows() != u.cols()) {
    throw std::invalid_argument("embed_unitary: matrix must be square");
  }
  const Eigen::Index n = u.rows();
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      const double re = u(a, b).real();
      const double im = u(a, b).imag();
      s(2 * a, 2 * b) = re;
      s(2 * a, 2 * b + 1) = -im;
      s(2 * a + 1, 2 * b) = im;
      s(2 * a + 1, 2 * b + 1) = re;
    }
  }
  return s;
}

Eigen::MatrixXcd induced_unitary(const Eigen::MatrixXd& step) {
  if (step.rows() != step.cols() || step.rows() % 2 != 0) {
    throw std::invalid_argument("induced_unitary: need a square even-sized matrix");
  }
  const Eigen::Index n = step.rows() / 2;
  Eigen::MatrixXcd u(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      u(a, b) = std::complex<double>(step(2 * a, 2 * b), step(2 * a + 1, 2 * b));
    }
  }
  return u;
}

}  // namespace corrsim

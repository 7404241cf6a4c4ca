#pragma once

#include <Eigen/Dense>

namespace corrsim {

/// Tolerance for wave-function normalization invariants.
inline constexpr double kNormTol = 1e-12;

/// Tolerance for matrix identities (orthogonality, unitarity, Hermiticity).
inline constexpr double kMatrixTol = 1e-10;

/// Largest absolute entry of a matrix (0 for empty input).
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// Largest absolute entry of a - b.
template <typename DerivedA, typename DerivedB>
double max_abs_diff(const Eigen::MatrixBase<DerivedA>& a,
                    const Eigen::MatrixBase<DerivedB>& b) {
  return max_abs((a - b).eval());
}

inline bool is_unitary(const Eigen::MatrixXcd& m, double tol = kMatrixTol) {
  if (m.rows() != m.cols() || m.size() == 0) return false;
  auto residual = m.adjoint() * m -
                  Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  return max_abs(residual.eval()) <= tol;
}

inline bool is_orthogonal(const Eigen::MatrixXd& m, double tol = kMatrixTol) {
  if (m.rows() != m.cols() || m.size() == 0) return false;
  auto residual =
      m.transpose() * m - Eigen::MatrixXd::Identity(m.rows(), m.cols());
  return max_abs(residual.eval()) <= tol;
}

inline bool is_hermitian(const Eigen::MatrixXcd& m, double tol = kMatrixTol) {
  if (m.rows() != m.cols() || m.size() == 0) return false;
  return max_abs_diff(m, m.adjoint().eval()) <= tol;
}

inline bool is_power_of_two(Eigen::Index n) {
  return n >= 1 && (n & (n - 1)) == 0;
}

}  // namespace corrsim

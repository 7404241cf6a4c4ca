#include "corrsim/observables.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "corrsim/compiler.hpp"

namespace corrsim {

namespace {

void check_observable(const SpinObservable& obs, int mq) {
  if (obs.qubits.empty()) {
    throw std::invalid_argument("SpinObservable: empty qubit set");
  }
  for (std::size_t i = 0; i < obs.qubits.size(); ++i) {
    if (obs.qubits[i] < 1 || obs.qubits[i] > mq) {
      throw std::out_of_range("SpinObservable: qubit " +
                              std::to_string(obs.qubits[i]) +
                              " out of range 1.." + std::to_string(mq));
    }
    for (std::size_t j = i + 1; j < obs.qubits.size(); ++j) {
      if (obs.qubits[i] == obs.qubits[j]) {
        throw std::invalid_argument("SpinObservable: repeated qubit " +
                                    std::to_string(obs.qubits[i]));
      }
    }
  }
}

void check_involution(const Eigen::Matrix2cd& setting, const char* which) {
  if (!is_hermitian(setting)) {
    throw std::invalid_argument(std::string("chsh_value: setting ") + which +
                                " is not Hermitian");
  }
  if (max_abs_diff((setting * setting).eval(), Eigen::Matrix2cd::Identity()) >
      kMatrixTol) {
    throw std::invalid_argument(std::string("chsh_value: setting ") + which +
                                " must square to the identity");
  }
}

}  // namespace

std::string SpinObservable::name() const {
  std::string label;
  for (int q : qubits) {
    label += "s" + std::to_string(q);
  }
  return label;
}

double spin_expectation(const Eigen::VectorXd& pbar, const SpinObservable& obs,
                        int mq) {
  check_observable(obs, mq);
  const Eigen::Index n = Eigen::Index{1} << mq;
  if (pbar.size() != n) {
    throw std::invalid_argument("spin_expectation: probability vector has " +
                                std::to_string(pbar.size()) +
                                " entries, expected " + std::to_string(n));
  }
  if (std::abs(pbar.sum() - 1.0) > 1e-9) {
    throw std::invalid_argument(
        "spin_expectation: probabilities do not sum to 1");
  }
  double value = 0.0;
  for (Eigen::Index a = 0; a < n; ++a) {
    int sign = 1;
    for (int q : obs.qubits) {
      sign *= spin_value(static_cast<int>(a) + 1, q, mq);
    }
    value += sign * pbar[a];
  }
  return value;
}

DiagonalOperator spin_diagonal(const SpinObservable& obs, int mq) {
  check_observable(obs, mq);
  const Eigen::Index n = Eigen::Index{1} << mq;
  Eigen::VectorXd diag(n);
  for (Eigen::Index a = 0; a < n; ++a) {
    int sign = 1;
    for (int q : obs.qubits) {
      sign *= spin_value(static_cast<int>(a) + 1, q, mq);
    }
    diag[a] = sign;
  }
  return {diag};
}

double operator_expectation(const ComplexState& psi,
                            const Eigen::MatrixXcd& op) {
  if (op.rows() != psi.channel_count() || op.cols() != psi.channel_count()) {
    throw std::invalid_argument("operator_expectation: dimension mismatch");
  }
  if (!is_hermitian(op)) {
    throw std::invalid_argument("operator_expectation: operator is not "
                                "Hermitian");
  }
  const std::complex<double> value = psi.psi.dot(op * psi.psi);
  if (std::abs(value.imag()) > kMatrixTol) {
    throw std::runtime_error(
        "operator_expectation: expectation has a non-negligible imaginary "
        "part");
  }
  return value.real();
}

Eigen::MatrixXcd heisenberg_operator(const Eigen::MatrixXcd& op,
                                     const std::vector<CorrelationGate>& gates,
                                     Eigen::Index n_channels) {
  if (op.rows() != n_channels || op.cols() != n_channels) {
    throw std::invalid_argument("heisenberg_operator: operator must be " +
                                std::to_string(n_channels) + "x" +
                                std::to_string(n_channels));
  }
  const Eigen::MatrixXcd u = compose(gates, n_channels);
  return u * op * u.adjoint();
}

Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

ChshSettings chsh_optimal_settings() {
  const double s = 1.0 / std::numbers::sqrt2;
  return {pauli_z(), pauli_x(), s * (pauli_z() + pauli_x()),
          s * (pauli_z() - pauli_x())};
}

double chsh_value(const ComplexState& psi, const ChshSettings& settings,
                  int qubit_a, int qubit_b) {
  if (psi.mq < 2) {
    throw std::invalid_argument("chsh_value: need at least 2 qubits");
  }
  if (qubit_a == qubit_b) {
    throw std::invalid_argument("chsh_value: qubits must differ");
  }
  check_involution(settings.a, "a");
  check_involution(settings.a_alt, "a'");
  check_involution(settings.b, "b");
  check_involution(settings.b_alt, "b'");

  auto pair_expectation = [&](const Eigen::Matrix2cd& alice,
                              const Eigen::Matrix2cd& bob) {
    Eigen::Matrix4cd product;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        product.block<2, 2>(2 * i, 2 * j) = alice(i, j) * bob;
      }
    }
    const Eigen::MatrixXcd embedded =
        embed_qubit_operator(product, {qubit_a, qubit_b}, psi.mq);
    return operator_expectation(psi, embedded);
  };

  const double value = pair_expectation(settings.a, settings.b) +
                       pair_expectation(settings.a, settings.b_alt) +
                       pair_expectation(settings.a_alt, settings.b) -
                       pair_expectation(settings.a_alt, settings.b_alt);
  return std::abs(value);
}

}  // namespace corrsim

#include <doctest.h>

#include <complex>
#include <numbers>

#include "corrsim/state.hpp"
#include "test_util.hpp"

using namespace corrsim;
using testing::random_state;

TEST_CASE("normalize_fields on a single occupied channel") {
  Eigen::VectorXd fields(4);
  fields << 1, 0, 0, 0;
  const auto [state, total] = normalize_fields(fields);
  CHECK(total == 1.0);
  CHECK(state.q[0] == 1.0);
  CHECK(state.q.tail(3).norm() == 0.0);
}

TEST_CASE("normalize_fields reproduces relative intensities") {
  Eigen::VectorXd fields(2);
  fields << 3, 4;
  const auto [state, total] = normalize_fields(fields);
  CHECK(total == doctest::Approx(25.0).epsilon(1e-15));
  CHECK(state.q[0] == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(state.q[1] == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(state.q[0] * state.q[0] == doctest::Approx(0.36).epsilon(1e-15));
  CHECK(state.q[1] * state.q[1] == doctest::Approx(0.64).epsilon(1e-15));
}

TEST_CASE("normalize_fields rejects degenerate input") {
  Eigen::VectorXd zero = Eigen::VectorXd::Zero(2);
  CHECK_THROWS_AS(normalize_fields(zero), std::domain_error);
  Eigen::VectorXd short_input(1);
  short_input << 1;
  CHECK_THROWS_AS(normalize_fields(short_input), std::invalid_argument);
  Eigen::VectorXd odd_length(6);
  odd_length << 1, 0, 0, 0, 0, 0;
  CHECK_THROWS_AS(normalize_fields(odd_length), std::invalid_argument);
}

TEST_CASE("normalize_fields squared output scales back to the raw intensities") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> gauss;
  Eigen::VectorXd fields(8);
  for (int i = 0; i < 8; ++i) fields[i] = gauss(rng);
  const auto [state, total] = normalize_fields(fields);
  for (int i = 0; i < 8; ++i) {
    CHECK(state.q[i] * state.q[i] * total ==
          doctest::Approx(fields[i] * fields[i]).epsilon(1e-13));
  }
}

TEST_CASE("to_complex pairs interleaved components") {
  Eigen::VectorXd q(4);
  q << 1, 0, 0, 0;
  const ComplexState psi = to_complex(RealState(q));
  CHECK(psi.psi[0] == std::complex<double>(1, 0));
  CHECK(psi.psi[1] == std::complex<double>(0, 0));

  q << 0, 1, 0, 0;
  const ComplexState psi2 = to_complex(RealState(q));
  CHECK(psi2.psi[0] == std::complex<double>(0, 1));
}

TEST_CASE("to_real inverts to_complex") {
  Eigen::VectorXcd amp(2);
  amp << std::complex<double>(0, 1), 0.0;
  const RealState q = to_real(ComplexState(amp));
  CHECK(q.q[0] == 0.0);
  CHECK(q.q[1] == 1.0);
  CHECK(q.q[2] == 0.0);
  CHECK(q.q[3] == 0.0);

  const double s = 1.0 / std::numbers::sqrt2;
  amp << std::complex<double>(s, s), 0.0;
  const RealState q2 = to_real(ComplexState(amp));
  CHECK(q2.q[0] == doctest::Approx(s).epsilon(1e-15));
  CHECK(q2.q[1] == doctest::Approx(s).epsilon(1e-15));
}

TEST_CASE("real/complex round trip is the identity") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexState psi = random_state(3, rng);
    const RealState q = to_real(psi);
    CHECK(max_abs_diff(to_complex(q).psi, psi.psi) == 0.0);
    CHECK(max_abs_diff(to_real(to_complex(q)).q, q.q) == 0.0);
  }
}

TEST_CASE("real/complex maps preserve inner products") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexState psi = random_state(2, rng);
    const ComplexState phi = random_state(2, rng);
    const double real_dot = to_real(psi).q.dot(to_real(phi).q);
    const double complex_dot = psi.psi.dot(phi.psi).real();
    CHECK(real_dot == doctest::Approx(complex_dot).epsilon(1e-12));
  }
}

TEST_CASE("probabilities of basis and uniform states") {
  const ComplexState basis = ComplexState::basis(3, 3);
  const Eigen::VectorXd p = probabilities(basis);
  CHECK(p[2] == 1.0);
  CHECK(p.sum() == 1.0);

  Eigen::VectorXcd uniform =
      Eigen::VectorXcd::Constant(8, 1.0 / std::sqrt(8.0));
  const Eigen::VectorXd pu = probabilities(ComplexState(uniform));
  for (int a = 0; a < 8; ++a) {
    CHECK(pu[a] == doctest::Approx(0.125).epsilon(1e-14));
  }
  CHECK(pu.sum() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("standard complex structure for one channel") {
  const ComplexStructure cs = standard_complex_structure(1);
  Eigen::MatrixXd k_expected(2, 2);
  k_expected << 1, 0, 0, -1;
  Eigen::MatrixXd i_expected(2, 2);
  i_expected << 0, -1, 1, 0;
  CHECK(max_abs_diff(cs.k, k_expected) == 0.0);
  CHECK(max_abs_diff(cs.i, i_expected) == 0.0);
}

TEST_CASE("complex structure identities hold exactly") {
  const ComplexStructure cs = standard_complex_structure(4);
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(8, 8);
  CHECK(max_abs_diff((cs.k * cs.k).eval(), id) == 0.0);
  CHECK(max_abs_diff((cs.i * cs.i).eval(), (-id).eval()) == 0.0);
  CHECK(max_abs((cs.k * cs.i + cs.i * cs.k).eval()) == 0.0);
  CHECK(is_orthogonal(cs.k, 0.0));
  CHECK(is_orthogonal(cs.i, 0.0));
}

TEST_CASE("structure maps mirror conjugation and multiplication by i") {
  std::mt19937_64 rng(21);
  const ComplexStructure cs = standard_complex_structure(4);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexState psi = random_state(2, rng);
    const RealState q = to_real(psi);
    const ComplexState i_psi = to_complex(RealState(cs.i * q.q));
    CHECK(max_abs_diff(i_psi.psi,
                       (std::complex<double>(0, 1) * psi.psi).eval()) < 1e-15);
    const ComplexState k_psi = to_complex(RealState(cs.k * q.q));
    CHECK(max_abs_diff(k_psi.psi, psi.psi.conjugate().eval()) < 1e-15);
  }
}

TEST_CASE("compatibility of phase embeddings, identity, and conjugation") {
  const ComplexStructure cs = standard_complex_structure(2);
  Eigen::VectorXcd phases(2);
  phases << std::polar(1.0, 0.3), std::polar(1.0, -1.2);
  const Eigen::MatrixXd phase_step = embed_unitary(phases.asDiagonal());
  CHECK(is_compatible(phase_step, cs));
  CHECK(is_compatible(Eigen::MatrixXd::Identity(4, 4), cs));
  CHECK_FALSE(is_compatible(cs.k, cs));
  CHECK_THROWS_AS(
      is_compatible(2.0 * Eigen::MatrixXd::Identity(4, 4), cs),
      std::invalid_argument);
}

TEST_CASE("compatible steps act as unitaries on the complex state") {
  std::mt19937_64 rng(31);
  const ComplexStructure cs = standard_complex_structure(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::MatrixXcd u = testing::random_unitary(4, rng);
    const Eigen::MatrixXd s = embed_unitary(u);
    REQUIRE(is_compatible(s, cs));
    const Eigen::MatrixXcd induced = induced_unitary(s);
    CHECK(is_unitary(induced));
    CHECK(max_abs_diff(induced, u) < 1e-14);
    const ComplexState psi = random_state(2, rng);
    const ComplexState via_real = to_complex(RealState(s * to_real(psi).q));
    CHECK(max_abs_diff(via_real.psi, (u * psi.psi).eval()) < 1e-12);
  }
}

TEST_CASE("state constructors enforce the invariants") {
  Eigen::VectorXd not_unit(2);
  not_unit << 1, 1;
  CHECK_THROWS_AS(RealState(not_unit), std::invalid_argument);
  Eigen::VectorXcd three = Eigen::VectorXcd::Zero(3);
  three[0] = 1.0;
  CHECK_THROWS_AS(ComplexState(three), std::invalid_argument);
  CHECK_THROWS_AS(ComplexState::basis(2, 5), std::out_of_range);
  CHECK_THROWS_AS(ComplexState::basis(2, 0), std::out_of_range);
}

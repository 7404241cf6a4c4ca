#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "corrsim/fieldmap.hpp"

using namespace corrsim;

namespace {

const double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("snapshot at phase zero returns the mode amplitudes") {
  const FieldMode mode{0.3, -1.2, 2.0, 5.0};
  const FieldSample sample = field_snapshot(mode, 0.0, 0.0);
  CHECK(sample.f1 == 0.3);
  CHECK(sample.f2 == -1.2);
}

TEST_CASE("snapshot a quarter period later rotates the pair") {
  const FieldMode mode{1.0, 0.0, 1.0, 1.0};
  // beta z - omega t = pi/2 at z = pi/2, t = 0.
  const FieldSample sample = field_snapshot(mode, kPi / 2, 0.0);
  CHECK(sample.f1 == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(sample.f2 == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("snapshot intensity is invariant over position and time") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> coord(-50.0, 50.0);
  const FieldMode mode{0.8, -0.6, 3.0, 7.0};
  const double reference = mode.f1 * mode.f1 + mode.f2 * mode.f2;
  for (int trial = 0; trial < 100; ++trial) {
    const FieldSample s = field_snapshot(mode, coord(rng), coord(rng));
    CHECK(std::abs(s.f1 * s.f1 + s.f2 * s.f2 - reference) < 1e-12);
  }
}

TEST_CASE("extract_channel reads intensity and phase") {
  const ChannelReadout readout = extract_channel({1.0, 0.0, 1.0, 1.0}, 0.0, 0.0);
  CHECK(readout.intensity == 1.0);
  CHECK(readout.phase == 0.0);
  CHECK_THROWS_AS(extract_channel({0.0, 0.0, 1.0, 1.0}, 0.0, 0.0),
                  std::domain_error);
}

TEST_CASE("co-moving readout keeps the phase constant") {
  const FieldMode mode{0.4, 0.9, 2.5, 4.0};
  const double z_bar = 1.3;
  const double phase0 =
      extract_channel(mode, z_bar + mode.omega * 0.0 / mode.beta, 0.0).phase;
  for (double t : {0.1, 0.57, 2.9, 10.0}) {
    const double z0 = z_bar + mode.omega * t / mode.beta;
    CHECK(extract_channel(mode, z0, t).phase ==
          doctest::Approx(phase0).epsilon(1e-12));
  }
}

TEST_CASE("fixed-point readout advances the phase by -omega eps") {
  const FieldMode mode{0.4, 0.9, 2.5, 4.0};
  const double z0 = 0.7;
  const double eps = 0.31;
  for (double t : {0.0, 1.1, 6.4}) {
    const double before = extract_channel(mode, z0, t).phase;
    const double after = extract_channel(mode, z0, t + eps).phase;
    const std::complex<double> ratio =
        std::polar(1.0, after) * std::conj(std::polar(1.0, before));
    CHECK(std::abs(ratio - std::polar(1.0, -mode.omega * eps)) < 1e-12);
  }
}

TEST_CASE("assemble_state concentrates on the only occupied mode") {
  std::vector<FieldMode> modes(4);
  modes[2] = {0.6, 0.8, 1.0, 1.0};
  const ComplexState psi =
      assemble_state(modes, FrameConvention::FixedPoint, 0.0);
  CHECK(std::abs(psi.psi[2]) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::arg(psi.psi[2]) ==
        doctest::Approx(extract_channel(modes[2], 0.0, 0.0).phase)
            .epsilon(1e-15));
  CHECK(std::abs(psi.psi[0]) == 0.0);
}

TEST_CASE("identical modes assemble into a uniform state") {
  const std::vector<FieldMode> modes(8, FieldMode{1.0, 0.5, 2.0, 3.0});
  const ComplexState psi =
      assemble_state(modes, FrameConvention::FixedPoint, 0.4);
  const std::complex<double> first = psi.psi[0];
  for (int a = 0; a < 8; ++a) {
    CHECK(std::abs(psi.psi[a]) ==
          doctest::Approx(1.0 / std::sqrt(8.0)).epsilon(1e-14));
    CHECK(std::abs(psi.psi[a] - first) < 1e-15);
  }
}

TEST_CASE("fixed-point assembly evolves by a global phase per step") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  const double omega = 2.2;
  const double eps = 0.45;
  std::vector<FieldMode> modes;
  for (int a = 0; a < 4; ++a) {
    modes.push_back({amp(rng), amp(rng), omega, 3.1});
  }
  const ComplexState before =
      assemble_state(modes, FrameConvention::FixedPoint, 1.0);
  const ComplexState after =
      assemble_state(modes, FrameConvention::FixedPoint, 1.0 + eps);
  const Eigen::VectorXcd expected =
      std::polar(1.0, -omega * eps) * before.psi;
  CHECK(max_abs_diff(after.psi, expected) < 1e-12);
}

TEST_CASE("frame conventions differ by a global phase only") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  std::vector<FieldMode> modes;
  for (int a = 0; a < 4; ++a) {
    modes.push_back({amp(rng), amp(rng), 2.7, 1.9});
  }
  for (double t : {0.0, 0.8, 3.3}) {
    const ComplexState fixed =
        assemble_state(modes, FrameConvention::FixedPoint, t, 0.5);
    const ComplexState comoving =
        assemble_state(modes, FrameConvention::CoMoving, t, 0.5);
    CHECK(std::abs(fixed.psi.dot(comoving.psi)) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("assemble_state rejects empty input") {
  CHECK_THROWS_AS(assemble_state({}, FrameConvention::FixedPoint, 0.0),
                  std::invalid_argument);
  const std::vector<FieldMode> silent(4);
  CHECK_THROWS_AS(assemble_state(silent, FrameConvention::FixedPoint, 0.0),
                  std::domain_error);
  const FieldMode bad_mode{1.0, 0.0, -1.0, 1.0};
  CHECK_THROWS_AS(field_snapshot(bad_mode, 0.0, 0.0), std::invalid_argument);
}

#include "corrsim/fieldmap.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace corrsim {

namespace {

void check_mode(const FieldMode& mode) {
  if (mode.omega <= 0.0 || mode.beta <= 0.0) {
    throw std::invalid_argument("FieldMode: omega and beta must be positive");
  }
}

}  // namespace

FieldSample field_snapshot(const FieldMode& mode, double z, double t) {
  check_mode(mode);
  const double phase = mode.beta * z - mode.omega * t;
  const double c = std::cos(phase);
  const double s = std::sin(phase);
  return {mode.f1 * c - mode.f2 * s, mode.f2 * c + mode.f1 * s};
}

ChannelReadout extract_channel(const FieldMode& mode, double z0, double t) {
  check_mode(mode);
  if (mode.f1 == 0.0 && mode.f2 == 0.0) {
    throw std::domain_error("extract_channel: empty mode has no phase");
  }
  const FieldSample sample = field_snapshot(mode, z0, t);
  return {mode.f1 * mode.f1 + mode.f2 * mode.f2,
          std::atan2(sample.f2, sample.f1)};
}

ComplexState assemble_state(const std::vector<FieldMode>& modes,
                            FrameConvention frame, double t, double z0) {
  if (modes.empty()) {
    throw std::invalid_argument("assemble_state: no modes");
  }
  double total = 0.0;
  for (const FieldMode& mode : modes) {
    check_mode(mode);
    total += mode.f1 * mode.f1 + mode.f2 * mode.f2;
  }
  if (total == 0.0) {
    throw std::domain_error("assemble_state: all modes are empty");
  }
  Eigen::VectorXcd psi(static_cast<Eigen::Index>(modes.size()));
  for (std::size_t a = 0; a < modes.size(); ++a) {
    const FieldMode& mode = modes[a];
    if (mode.f1 == 0.0 && mode.f2 == 0.0) {
      psi[static_cast<Eigen::Index>(a)] = 0.0;
      continue;
    }
    const double z_read = frame == FrameConvention::CoMoving
                              ? z0 + mode.omega * t / mode.beta
                              : z0;
    const ChannelReadout readout = extract_channel(mode, z_read, t);
    psi[static_cast<Eigen::Index>(a)] =
        std::polar(std::sqrt(readout.intensity / total), readout.phase);
  }
  return ComplexState(std::move(psi));
}

}  // namespace corrsim

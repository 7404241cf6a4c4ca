#pragma once

#include <vector>

#include "corrsim/state.hpp"

namespace corrsim {

/// Co-rotating mode amplitude pair of one waveguide channel, sampled at the
/// reference transverse point. The instantaneous field components are
///   F1(z, t) = f1 cos(beta z - omega t) - f2 sin(beta z - omega t),
///   F2(z, t) = f2 cos(beta z - omega t) + f1 sin(beta z - omega t),
/// so F1^2 + F2^2 = f1^2 + f2^2 at all (z, t).
struct FieldMode {
  double f1 = 0.0;
  double f2 = 0.0;
  double omega = 1.0;  ///< angular frequency, rad/time
  double beta = 1.0;   ///< propagation constant, rad/length
};

struct FieldSample {
  double f1;
  double f2;
};

struct ChannelReadout {
  double intensity;  ///< f1^2 + f2^2, independent of (z, t)
  double phase;      ///< arg(F1 + i F2) in (-pi, pi]
};

/// Where the channel phase is read off: at a fixed point z0, where free
/// evolution advances the phase by -omega * dt, or co-moving with the wave,
/// z0(t) = z0 + omega t / beta, where the phase is constant.
enum class FrameConvention { FixedPoint, CoMoving };

FieldSample field_snapshot(const FieldMode& mode, double z, double t);

/// Intensity and phase of one channel read at (z0, t). Throws
/// std::domain_error for an empty mode (f1 = f2 = 0), whose phase is
/// undefined.
ChannelReadout extract_channel(const FieldMode& mode, double z0, double t);

/// Complex wave function from one mode per channel:
/// psi_alpha = sqrt(I_alpha / I_tot) * exp(i phi_alpha), with phases read per
/// the frame convention at reference position z0.
ComplexState assemble_state(const std::vector<FieldMode>& modes,
                            FrameConvention frame, double t, double z0 = 0.0);

}  // namespace corrsim

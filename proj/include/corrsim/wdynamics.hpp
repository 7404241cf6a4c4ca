#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "corrsim/state.hpp"

namespace corrsim {

// Evolution in the real picture. Orthogonal steps conserve total intensity
// whether or not they respect a complex structure; the compatible ones are
// exactly the real embeddings of unitaries.

/// One orthogonal step of the real evolution.
struct OrthogonalStep {
  Eigen::MatrixXd s;

  explicit OrthogonalStep(Eigen::MatrixXd s);

  Eigen::Index dimension() const { return s.rows(); }
};

/// Antisymmetric generator w of a step, step = exp(eps * w).
struct AntisymmetricGenerator {
  Eigen::MatrixXd w;
  double eps = 1.0;
};

struct AntilinearParts {
  Eigen::MatrixXd linear;      ///< commutes with cs.i
  Eigen::MatrixXd antilinear;  ///< anticommutes with cs.i
};

enum class StochasticKind { Phase, BeamSplit };

RealState apply_orthogonal(const OrthogonalStep& step, const RealState& q);

/// Principal-branch antisymmetric logarithm, w = log(s) / eps. Throws
/// std::domain_error when s has an eigenvalue at -1, where the principal
/// logarithm does not exist.
AntisymmetricGenerator generator(const OrthogonalStep& step, double eps = 1.0);

/// Splits a step into the part that commutes with cs.i and the part that
/// anticommutes; the two sum to the step exactly. The antilinear part
/// vanishes precisely when the step is compatible with cs, i.e. when the
/// step acts as a complex-linear (unitary) map rather than mixing the wave
/// function with its conjugate.
AntilinearParts antilinear_split(const OrthogonalStep& step,
                                 const ComplexStructure& cs);

/// Orthogonal step with uniformly random phases, deterministic in the seed.
/// Phase kind rotates each listed channel's amplitude pair by an independent
/// random angle; BeamSplit kind mixes exactly two channels through a random
/// splitter satisfying the unitarity phase relation. Magnitudes are never
/// randomized, so the step is orthogonal by construction.
OrthogonalStep stochastic_gate(StochasticKind kind,
                               const std::vector<int>& channels,
                               Eigen::Index n_channels, std::uint64_t seed);

}  // namespace corrsim

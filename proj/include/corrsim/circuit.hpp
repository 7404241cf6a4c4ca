#pragma once

#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "corrsim/compiler.hpp"

namespace corrsim {

/// One circuit-file instruction: either a qubit-level gate that the compiler
/// lowers, or a channel-level correlation gate applied as written.
using Instruction =
    std::variant<Rotation, Hadamard, Cnot, PhaseShift, Switch, BeamSplit>;

struct Circuit {
  int mq = 0;
  std::vector<Instruction> instructions;

  Eigen::Index channel_count() const { return Eigen::Index{1} << mq; }
};

/// Rejected circuit text, with the 1-based line and column of the offending
/// token; what() carries "line L, column C: message".
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Circuit file grammar (UTF-8, LF or CRLF line endings):
//
//   qubits <Mq>
//   H <j>                          Hadamard on qubit j
//   ROT <j> [<angle>]              qubit phase rotation, default angle pi/4
//   CNOT <c> <t>                   control-on-zero CNOT
//   PHASE <alpha> <angle>          channel phase shift
//   SWITCH <a> <b>                 channel exchange
//   BSPLIT <a> <b> [<g> <g'> <d> <d'>]   beam split, canonical when no phases
//
// '#' starts a comment (whole line or trailing). Indices are 1-based. Angles
// are radians written as decimal literals or fractions of pi: "pi", "-pi/4",
// "3pi/2", "0.25". Explicit BSPLIT phases must satisfy the beam-split
// unitarity relation.

inline constexpr int kMaxQubits = 24;
inline constexpr double kDefaultRotationAngle = std::numbers::pi / 4;

Circuit parse_circuit(std::string_view text);

/// Canonical text form; parse(serialize(parse(x))) == parse(x). Multi-channel
/// phase shifts serialize to one PHASE line per channel; canonical beam
/// splits omit their phases.
std::string serialize_circuit(const Circuit& circuit);

/// Formats an angle canonically, preferring exact small fractions of pi
/// ("pi/4", "-3pi/2") and falling back to a round-tripping decimal.
std::string format_angle(double radians);

}  // namespace corrsim

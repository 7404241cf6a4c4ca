#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "corrsim/circuit.hpp"
#include "corrsim/observables.hpp"

namespace corrsim {

/// Outcome of a state-vector run: final amplitudes, channel probabilities,
/// requested expectations, and the compiled gate count. Seed and sample count
/// are set by ensemble runs only.
struct RunResult {
  Eigen::VectorXcd amplitudes;
  Eigen::VectorXd probabilities;
  std::vector<std::pair<std::string, double>> expectations;
  std::size_t gate_count = 0;
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;
};

/// All single spins followed by all pairs, in index order.
std::vector<SpinObservable> default_observables(int mq);

/// Parses a label like "s1" or "s2s3" into a spin observable.
SpinObservable parse_observable(const std::string& token, int mq);

/// Compiles and runs a circuit on the given input state.
RunResult simulate_circuit(const Circuit& circuit, ComplexState input,
                           const std::vector<SpinObservable>& observables);

using CompileFn = std::function<std::vector<CorrelationGate>(const Circuit&)>;

/// Largest entrywise deviation between the composed compiled gates and the
/// tensor-product oracle of the circuit.
double verification_deviation(const Circuit& circuit,
                              const CompileFn& compiler = compile_circuit);

}  // namespace corrsim

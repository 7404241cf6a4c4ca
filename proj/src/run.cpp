#include "corrsim/run.hpp"

#include <stdexcept>
#include <utility>

namespace corrsim {

std::vector<SpinObservable> default_observables(int mq) {
  std::vector<SpinObservable> observables;
  for (int j = 1; j <= mq; ++j) {
    observables.push_back({{j}});
  }
  for (int i = 1; i <= mq; ++i) {
    for (int j = i + 1; j <= mq; ++j) {
      observables.push_back({{i, j}});
    }
  }
  return observables;
}

SpinObservable parse_observable(const std::string& token, int mq) {
  SpinObservable obs;
  std::size_t i = 0;
  while (i < token.size()) {
    if (token[i] != 's') {
      throw std::invalid_argument("bad observable '" + token +
                                  "': expected labels like s1 or s2s3");
    }
    ++i;
    std::size_t start = i;
    while (i < token.size() && token[i] >= '0' && token[i] <= '9') ++i;
    if (start == i) {
      throw std::invalid_argument("bad observable '" + token +
                                  "': missing qubit index");
    }
    obs.qubits.push_back(std::stoi(token.substr(start, i - start)));
  }
  if (obs.qubits.empty()) {
    throw std::invalid_argument("bad observable '" + token + "'");
  }
  for (std::size_t a = 0; a < obs.qubits.size(); ++a) {
    if (obs.qubits[a] < 1 || obs.qubits[a] > mq) {
      throw std::invalid_argument("bad observable '" + token + "': qubit " +
                                  std::to_string(obs.qubits[a]) +
                                  " out of range 1.." + std::to_string(mq));
    }
    for (std::size_t b = a + 1; b < obs.qubits.size(); ++b) {
      if (obs.qubits[a] == obs.qubits[b]) {
        throw std::invalid_argument("bad observable '" + token +
                                    "': repeated qubit");
      }
    }
  }
  return obs;
}

RunResult simulate_circuit(const Circuit& circuit, ComplexState input,
                           const std::vector<SpinObservable>& observables) {
  if (input.mq != circuit.mq) {
    throw std::invalid_argument("simulate_circuit: input state has " +
                                std::to_string(input.mq) +
                                " qubits, circuit needs " +
                                std::to_string(circuit.mq));
  }
  const std::vector<CorrelationGate> gates = compile_circuit(circuit);
  for (const CorrelationGate& gate : gates) {
    input = apply_gate(gate, std::move(input));
  }

  RunResult result;
  result.gate_count = gates.size();
  result.probabilities = probabilities(input);
  result.amplitudes = std::move(input.psi);
  for (const SpinObservable& obs : observables) {
    result.expectations.emplace_back(
        obs.name(), spin_expectation(result.probabilities, obs, circuit.mq));
  }
  return result;
}

double verification_deviation(const Circuit& circuit,
                              const CompileFn& compiler) {
  const Eigen::MatrixXcd compiled =
      compose(compiler(circuit), circuit.channel_count());
  return max_abs_diff(compiled, oracle_matrix(circuit));
}

}  // namespace corrsim

#include "corrsim/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "corrsim/density.hpp"
#include "corrsim/wdynamics.hpp"

namespace corrsim {

namespace {

using nlohmann::ordered_json;

// Dense verification and real-representation runs materialize 2^mq x 2^mq
// matrices; refuse circuits where that stops being desk-scale.
constexpr int kMaxDenseQubits = 10;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Circuit load_circuit(const std::string& path) {
  try {
    return parse_circuit(read_file(path));
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

bool parse_int_token(const std::string& token, int& value) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  return ec == std::errc() && ptr == end;
}

std::vector<std::string> split(const std::string& text, char separator) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(separator, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

// Amplitudes file: one "re im" pair per channel, whitespace separated.
ComplexState read_amplitudes(const std::string& path, int mq) {
  std::istringstream in(read_file(path));
  std::vector<double> values;
  double v = 0.0;
  while (in >> v) values.push_back(v);
  const Eigen::Index n = Eigen::Index{1} << mq;
  if (static_cast<Eigen::Index>(values.size()) != 2 * n) {
    throw std::runtime_error("'" + path + "': expected " + std::to_string(2 * n) +
                             " numbers (re im per channel), got " +
                             std::to_string(values.size()));
  }
  Eigen::VectorXcd psi(n);
  for (Eigen::Index a = 0; a < n; ++a) {
    psi[a] = std::complex<double>(values[2 * a], values[2 * a + 1]);
  }
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > 1e-6) {
    throw std::runtime_error("'" + path + "': amplitudes have norm " +
                             std::to_string(norm) + ", expected 1");
  }
  return ComplexState(psi / norm);
}

ComplexState resolve_input(const std::string& input_spec, int mq) {
  if (input_spec.empty()) {
    return ComplexState::basis(mq, 1);
  }
  int channel = 0;
  if (parse_int_token(input_spec, channel)) {
    return ComplexState::basis(mq, channel);
  }
  return read_amplitudes(input_spec, mq);
}

Eigen::VectorXd resolve_pbar(const std::string& spec) {
  std::vector<std::string> tokens = split(spec, ',');
  std::vector<double> values;
  bool inline_ok = !tokens.empty();
  for (const std::string& token : tokens) {
    double v = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end) {
      inline_ok = false;
      break;
    }
    values.push_back(v);
  }
  if (!inline_ok) {
    std::istringstream in(read_file(spec));
    values.clear();
    double v = 0.0;
    while (in >> v) values.push_back(v);
  }
  if (values.empty()) {
    throw std::runtime_error("--pbar: no values in '" + spec + "'");
  }
  return Eigen::Map<Eigen::VectorXd>(values.data(),
                                     static_cast<Eigen::Index>(values.size()));
}

std::vector<SpinObservable> resolve_observables(const std::string& spec,
                                                int mq) {
  if (spec.empty()) return default_observables(mq);
  std::vector<SpinObservable> observables;
  for (const std::string& token : split(spec, ',')) {
    observables.push_back(parse_observable(token, mq));
  }
  return observables;
}

ordered_json result_to_json(const RunResult& result) {
  ordered_json j;
  auto& amplitudes = j["amplitudes"] = ordered_json::array();
  for (Eigen::Index a = 0; a < result.amplitudes.size(); ++a) {
    amplitudes.push_back(
        {result.amplitudes[a].real(), result.amplitudes[a].imag()});
  }
  j["probabilities"] = std::vector<double>(
      result.probabilities.data(),
      result.probabilities.data() + result.probabilities.size());
  auto& expectations = j["expectations"] = ordered_json::object();
  for (const auto& [name, value] : result.expectations) {
    expectations[name] = value;
  }
  j["gate_count"] = result.gate_count;
  if (result.seed) j["seed"] = *result.seed;
  if (result.samples) j["samples"] = *result.samples;
  return j;
}

std::string bits_label(int channel, int mq) {
  std::string label = "(";
  const std::vector<int> bits = channel_to_bits(channel, mq);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (i) label += ",";
    label += std::to_string(bits[i]);
  }
  return label + ")";
}

void print_result(std::ostream& out, const RunResult& result, int mq) {
  out << "gates applied: " << result.gate_count << "\n";
  out << "channel  bits" << std::string(std::max(2 * mq - 1, 4), ' ')
      << "probability   amplitude\n";
  for (Eigen::Index a = 0; a < result.amplitudes.size(); ++a) {
    const auto amp = result.amplitudes[a];
    out << std::left << std::setw(9) << (a + 1) << std::setw(2 * mq + 5)
        << bits_label(static_cast<int>(a) + 1, mq) << std::setw(14)
        << std::setprecision(6) << result.probabilities[a]
        << std::setprecision(9) << amp.real() << (amp.imag() < 0 ? " - " : " + ")
        << std::abs(amp.imag()) << "i\n";
  }
  if (!result.expectations.empty()) {
    out << "expectations:\n";
    for (const auto& [name, value] : result.expectations) {
      out << "  <" << name << "> = " << std::setprecision(12) << value << "\n";
    }
  }
}

const char* gate_kind(const CorrelationGate& gate) {
  switch (gate.index()) {
    case 0: return "phase";
    case 1: return "switch";
    case 2: return "bsplit";
    default: return "unitary";
  }
}

int cmd_simulate(const std::string& file, const std::string& input_spec,
                 const std::string& observables_spec, bool json,
                 std::ostream& out) {
  const Circuit circuit = load_circuit(file);
  RunResult result =
      simulate_circuit(circuit, resolve_input(input_spec, circuit.mq),
                       resolve_observables(observables_spec, circuit.mq));
  if (json) {
    out << result_to_json(result).dump(2) << "\n";
  } else {
    print_result(out, result, circuit.mq);
  }
  return 0;
}

int cmd_compile(const std::string& file, bool json, std::ostream& out) {
  const Circuit circuit = load_circuit(file);
  const std::vector<CorrelationGate> gates = compile_circuit(circuit);
  if (json) {
    ordered_json j;
    j["qubits"] = circuit.mq;
    j["gate_count"] = gates.size();
    auto& list = j["gates"] = ordered_json::array();
    for (const CorrelationGate& gate : gates) {
      ordered_json entry;
      entry["type"] = gate_kind(gate);
      if (const auto* shift = std::get_if<PhaseShift>(&gate)) {
        auto& phases = entry["phases"] = ordered_json::object();
        for (const auto& [channel, angle] : shift->phases) {
          phases[std::to_string(channel)] = angle;
        }
      } else if (const auto* sw = std::get_if<Switch>(&gate)) {
        entry["a"] = sw->a;
        entry["b"] = sw->b;
      } else if (const auto* split = std::get_if<BeamSplit>(&gate)) {
        entry["a"] = split->a;
        entry["b"] = split->b;
        entry["phases"] = {split->gamma, split->gamma_p, split->delta,
                           split->delta_p};
      }
      list.push_back(std::move(entry));
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  Circuit lowered;
  lowered.mq = circuit.mq;
  for (const CorrelationGate& gate : gates) {
    std::visit(
        [&lowered](const auto& g) {
          using G = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<G, GenericUnitary>) {
            throw std::runtime_error("cannot serialize a dense unitary gate");
          } else {
            lowered.instructions.emplace_back(g);
          }
        },
        gate);
  }
  out << serialize_circuit(lowered);
  out << "# gate count: " << gates.size() << "\n";
  return 0;
}

int cmd_density(const std::string& file, const std::string& pbar_spec,
                int samples, std::uint64_t seed, bool json, std::ostream& out) {
  const Circuit circuit = load_circuit(file);
  const std::vector<CorrelationGate> gates = compile_circuit(circuit);
  PhaseEnsembleSpec spec;
  spec.pbar = resolve_pbar(pbar_spec);
  spec.mode = PhaseMode::UniformRandom;
  spec.samples = samples;
  spec.seed = seed;
  if (spec.pbar.size() != circuit.channel_count()) {
    throw std::runtime_error("--pbar: expected " +
                             std::to_string(circuit.channel_count()) +
                             " entries, got " + std::to_string(spec.pbar.size()));
  }

  std::vector<EnsembleMember> members = sample_ensemble(spec);
  for (EnsembleMember& member : members) {
    for (const CorrelationGate& gate : gates) {
      member.state = apply_gate(gate, std::move(member.state));
    }
  }
  const DensityMatrix rho = density_from_ensemble(members);

  if (json) {
    ordered_json j;
    auto& diagonal = j["diagonal"] = ordered_json::array();
    for (Eigen::Index a = 0; a < rho.channel_count(); ++a) {
      diagonal.push_back(rho.rho(a, a).real());
    }
    j["max_offdiagonal"] = max_offdiagonal(rho);
    j["purity"] = purity(rho);
    j["gate_count"] = gates.size();
    j["samples"] = samples;
    j["seed"] = seed;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "samples: " << samples << "  seed: " << seed
      << "  gates applied: " << gates.size() << "\n";
  out << "diagonal:";
  for (Eigen::Index a = 0; a < rho.channel_count(); ++a) {
    out << " " << std::setprecision(9) << rho.rho(a, a).real();
  }
  out << "\nmax off-diagonal magnitude: " << std::setprecision(6)
      << max_offdiagonal(rho) << "\n";
  out << "purity: " << purity(rho) << "\n";
  return 0;
}

int cmd_wdyn(const std::string& file, std::uint64_t seed, bool json,
             std::ostream& out) {
  const Circuit circuit = load_circuit(file);
  if (circuit.mq > kMaxDenseQubits) {
    throw std::runtime_error("wdyn runs densely; limited to " +
                             std::to_string(kMaxDenseQubits) + " qubits");
  }
  const std::vector<CorrelationGate> gates = compile_circuit(circuit);
  const Eigen::Index n = circuit.channel_count();
  const ComplexStructure cs = standard_complex_structure(n);

  RealState q = to_real(ComplexState::basis(circuit.mq, 1));
  ordered_json gate_reports = ordered_json::array();
  std::uint64_t counter = 0;
  for (const CorrelationGate& gate : gates) {
    ++counter;
    OrthogonalStep step = std::visit(
        [&](const auto& g) -> OrthogonalStep {
          using G = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<G, PhaseShift>) {
            std::vector<int> channels;
            channels.reserve(g.phases.size());
            for (const auto& [channel, angle] : g.phases) {
              (void)angle;
              channels.push_back(channel);
            }
            return stochastic_gate(StochasticKind::Phase, channels, n,
                                   seed + counter);
          } else if constexpr (std::is_same_v<G, BeamSplit>) {
            return stochastic_gate(StochasticKind::BeamSplit, {g.a, g.b}, n,
                                   seed + counter);
          } else {
            return OrthogonalStep(embed_unitary(gate_matrix(g, n)));
          }
        },
        gate);
    const AntilinearParts parts = antilinear_split(step, cs);
    const double antilinear = max_abs(parts.antilinear);
    const bool compatible = antilinear < kMatrixTol;
    if (json) {
      gate_reports.push_back({{"index", counter},
                              {"kind", gate_kind(gate)},
                              {"compatible", compatible},
                              {"antilinear_max", antilinear}});
    } else {
      out << "gate " << counter << " (" << gate_kind(gate) << "): "
          << (compatible ? "compatible" : "incompatible")
          << "  antilinear max " << std::setprecision(3) << antilinear << "\n";
    }
    q = apply_orthogonal(step, q);
  }
  const double drift = std::abs(q.q.norm() - 1.0);
  if (json) {
    ordered_json j;
    j["gates"] = std::move(gate_reports);
    j["norm_drift"] = drift;
    j["seed"] = seed;
    out << j.dump(2) << "\n";
  } else {
    out << "norm drift: " << std::setprecision(6) << drift << "  seed: " << seed
        << "\n";
  }
  return 0;
}

}  // namespace

int run_verify(const Circuit& circuit, const CompileFn& compiler,
               std::ostream& out) {
  if (circuit.mq > kMaxDenseQubits) {
    throw std::runtime_error("verify builds dense matrices; limited to " +
                             std::to_string(kMaxDenseQubits) + " qubits");
  }
  const double deviation = verification_deviation(circuit, compiler);
  out << "max deviation from oracle: " << std::scientific
      << std::setprecision(3) << deviation << "\n";
  if (deviation > kVerifyTolerance) {
    out << "FAIL (tolerance " << kVerifyTolerance << ")\n";
    return 2;
  }
  out << "OK (tolerance " << kVerifyTolerance << ")\n";
  return 0;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Simulator and compiler for correlation-gate photonic circuits"};
  app.require_subcommand(1);

  std::string file;
  std::string input_spec;
  std::string observables_spec;
  std::string pbar_spec;
  bool json = false;
  int samples = 1000;
  std::uint64_t seed = 0;

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Compile and run a circuit on a state vector");
  simulate->add_option("file", file, "circuit file")->required();
  simulate->add_option("--input", input_spec,
                       "input channel number or amplitudes file "
                       "(default: channel 1)");
  simulate->add_option("--observables", observables_spec,
                       "comma-separated spin products, e.g. s1,s2,s1s2 "
                       "(default: all singles and pairs)");
  simulate->add_flag("--json", json, "machine-readable output");

  CLI::App* compile =
      app.add_subcommand("compile", "Lower a circuit to correlation gates");
  compile->add_option("file", file, "circuit file")->required();
  compile->add_flag("--json", json, "machine-readable output");

  CLI::App* verify = app.add_subcommand(
      "verify", "Check the compiled gates against the tensor-product oracle");
  verify->add_option("file", file, "circuit file")->required();

  CLI::App* density = app.add_subcommand(
      "density", "Ensemble run with random input phases over fixed intensities");
  density->add_option("file", file, "circuit file")->required();
  density->add_option("--pbar", pbar_spec,
                      "input intensities, inline (0.25,0.25,0.25,0.25) or a "
                      "file of values")
      ->required();
  density->add_option("--samples", samples, "ensemble size")->required();
  density->add_option("--seed", seed, "random seed")->required();
  density->add_flag("--json", json, "machine-readable output");

  CLI::App* wdyn = app.add_subcommand(
      "wdyn", "Run the compiled gates with random phases in the real "
              "representation");
  wdyn->add_option("file", file, "circuit file")->required();
  wdyn->add_option("--seed", seed, "random seed")->required();
  wdyn->add_flag("--json", json, "machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (app.got_subcommand(simulate)) {
      return cmd_simulate(file, input_spec, observables_spec, json, out);
    }
    if (app.got_subcommand(compile)) {
      return cmd_compile(file, json, out);
    }
    if (app.got_subcommand(verify)) {
      return run_verify(load_circuit(file), compile_circuit, out);
    }
    if (app.got_subcommand(density)) {
      return cmd_density(file, pbar_spec, samples, seed, json, out);
    }
    return cmd_wdyn(file, seed, json, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace corrsim

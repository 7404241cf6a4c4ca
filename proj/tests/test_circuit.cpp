#include <doctest.h>

#include <numbers>
#include <string>
#include <vector>

#include "corrsim/circuit.hpp"
#include "negative_corpus.hpp"
#include "test_util.hpp"

using namespace corrsim;
using testing::random_mixed_circuit;

TEST_CASE("parses a small qubit-level program") {
  const Circuit circuit = parse_circuit("qubits 2\nH 1\nCNOT 1 2\n");
  CHECK(circuit.mq == 2);
  REQUIRE(circuit.instructions.size() == 2);
  CHECK(std::get<Hadamard>(circuit.instructions[0]).qubit == 1);
  CHECK(std::get<Cnot>(circuit.instructions[1]).control == 1);
  CHECK(std::get<Cnot>(circuit.instructions[1]).target == 2);
}

TEST_CASE("parsed rotation compiles to the documented phase pattern") {
  const Circuit circuit = parse_circuit("qubits 3\nROT 2 pi/4\n");
  const std::vector<CorrelationGate> gates = compile_circuit(circuit);
  REQUIRE(gates.size() == 1);
  const auto& shift = std::get<PhaseShift>(gates[0]);
  const std::map<int, double> expected = {{3, std::numbers::pi / 4},
                                          {4, std::numbers::pi / 4},
                                          {7, std::numbers::pi / 4},
                                          {8, std::numbers::pi / 4}};
  CHECK(shift.phases == expected);
}

TEST_CASE("ROT without an angle defaults to pi/4") {
  const Circuit circuit = parse_circuit("qubits 2\nROT 1\n");
  CHECK(std::get<Rotation>(circuit.instructions[0]).delta ==
        std::numbers::pi / 4);
}

TEST_CASE("angle syntax accepts decimals and pi fractions") {
  const Circuit circuit = parse_circuit(
      "qubits 1\nROT 1 pi\nROT 1 -pi/4\nROT 1 3pi/2\nROT 1 0.25\nROT 1 2pi\n");
  const auto delta = [&circuit](int i) {
    return std::get<Rotation>(circuit.instructions[i]).delta;
  };
  CHECK(delta(0) == std::numbers::pi);
  CHECK(delta(1) == -std::numbers::pi / 4);
  CHECK(delta(2) == 3 * std::numbers::pi / 2);
  CHECK(delta(3) == 0.25);
  CHECK(delta(4) == 2 * std::numbers::pi);
}

TEST_CASE("comments, blank lines, and CRLF endings are accepted") {
  const Circuit circuit = parse_circuit(
      "# leading comment\r\n\r\nqubits 2\r\nH 2   # trailing comment\r\n\r\n"
      "SWITCH 1 4\r\n");
  CHECK(circuit.mq == 2);
  REQUIRE(circuit.instructions.size() == 2);
  CHECK(std::get<Switch>(circuit.instructions[1]).a == 1);
}

TEST_CASE("channel range errors carry the line number") {
  try {
    parse_circuit("qubits 2\nSWITCH 1 5\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 10);
    CHECK(std::string(e.what()).find("out of range") != std::string::npos);
  }
}

TEST_CASE("beam-split phase violations are rejected at parse time") {
  try {
    parse_circuit("qubits 2\n# comment\nBSPLIT 1 2 0 0 0 0\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_NOTHROW(parse_circuit("qubits 2\nBSPLIT 1 2 0 0 0 pi\n"));
}

TEST_CASE("negative corpus is rejected with line-accurate diagnostics") {
  for (const testing::NegativeCase& item : testing::negative_corpus()) {
    CAPTURE(item.text);
    try {
      parse_circuit(item.text);
      FAIL_CHECK("accepted: ", item.text);
    } catch (const ParseError& e) {
      CHECK(e.line() == item.line);
      CHECK(e.column() >= 1);
    }
  }
}

TEST_CASE("serialization round-trips through the parser") {
  std::mt19937_64 rng(137);
  for (int trial = 0; trial < 50; ++trial) {
    const int mq = 1 + static_cast<int>(rng() % 4);
    const Circuit circuit = random_mixed_circuit(mq, 12, rng);
    const std::string once = serialize_circuit(circuit);
    const std::string twice = serialize_circuit(parse_circuit(once));
    CHECK(once == twice);

    // The reparsed program is the same circuit, not merely similar text.
    const Circuit reparsed = parse_circuit(twice);
    CHECK(max_abs_diff(oracle_matrix(reparsed), oracle_matrix(circuit)) == 0.0);
  }
}

TEST_CASE("canonical angles serialize as pi fractions") {
  Circuit circuit;
  circuit.mq = 2;
  circuit.instructions = {Rotation{1, std::numbers::pi / 4},
                          Rotation{2, -3 * std::numbers::pi / 2},
                          PhaseShift{{{3, std::numbers::pi}}},
                          Rotation{1, 0.0},
                          Rotation{2, 0.123}};
  const std::string text = serialize_circuit(circuit);
  CHECK(text == "qubits 2\n"
                "ROT 1 pi/4\n"
                "ROT 2 -3pi/2\n"
                "PHASE 3 pi\n"
                "ROT 1 0\n"
                "ROT 2 0.123\n");
}

TEST_CASE("an empty circuit serializes to the header alone") {
  Circuit circuit;
  circuit.mq = 3;
  CHECK(serialize_circuit(circuit) == "qubits 3\n");
}

TEST_CASE("multi-channel phase shifts expand to one line per channel") {
  Circuit circuit;
  circuit.mq = 2;
  circuit.instructions = {PhaseShift{{{1, 0.5}, {4, 0.25}}}};
  CHECK(serialize_circuit(circuit) ==
        "qubits 2\nPHASE 1 0.5\nPHASE 4 0.25\n");
}

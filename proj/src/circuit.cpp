#include "corrsim/circuit.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

namespace corrsim {

namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '#') {
      ++i;
    }
    tokens.push_back(
        {std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
  }
  return tokens;
}

class LineParser {
 public:
  LineParser(int line_no, const std::vector<Token>& tokens)
      : line_(line_no), tokens_(tokens) {}

  [[noreturn]] void fail(int column, const std::string& message) const {
    throw ParseError(line_, column, message);
  }

  const Token& arg(std::size_t index, const char* what) const {
    if (index >= tokens_.size()) {
      fail(tokens_.back().column +
               static_cast<int>(tokens_.back().text.size()),
           std::string("missing ") + what);
    }
    return tokens_[index];
  }

  void expect_arity(std::size_t count) const {
    if (tokens_.size() > count) {
      fail(tokens_[count].column,
           "unexpected trailing token '" + tokens_[count].text + "'");
    }
  }

  int parse_int(const Token& token, const char* what) const {
    int value = 0;
    const char* begin = token.text.data();
    const char* end = begin + token.text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
      fail(token.column,
           std::string("expected an integer ") + what + ", got '" +
               token.text + "'");
    }
    return value;
  }

  double parse_number(const Token& token) const {
    double value = 0.0;
    const char* begin = token.text.data();
    const char* end = begin + token.text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
      fail(token.column, "expected a number, got '" + token.text + "'");
    }
    return value;
  }

  // Radians as a decimal literal or a fraction of pi: "pi", "-pi/4", "3pi/2".
  double parse_angle(const Token& token) const {
    const std::string& s = token.text;
    const std::size_t p = s.find("pi");
    if (p == std::string::npos) return parse_number(token);
    double coefficient = 1.0;
    const std::string prefix = s.substr(0, p);
    if (prefix == "-") {
      coefficient = -1.0;
    } else if (prefix == "+" || prefix.empty()) {
      coefficient = 1.0;
    } else {
      coefficient = parse_number({prefix, token.column});
    }
    double denominator = 1.0;
    const std::string suffix = s.substr(p + 2);
    if (!suffix.empty()) {
      if (suffix[0] != '/') {
        fail(token.column, "malformed angle '" + s + "'");
      }
      denominator =
          parse_number({suffix.substr(1), token.column + static_cast<int>(p) + 3});
      if (denominator == 0.0) {
        fail(token.column, "zero denominator in angle '" + s + "'");
      }
    }
    return coefficient * std::numbers::pi / denominator;
  }

  int parse_qubit(const Token& token, int mq) const {
    const int q = parse_int(token, "qubit index");
    if (q < 1 || q > mq) {
      fail(token.column, "qubit " + std::to_string(q) + " out of range 1.." +
                             std::to_string(mq));
    }
    return q;
  }

  int parse_channel(const Token& token, int mq) const {
    const int limit = 1 << mq;
    const int c = parse_int(token, "channel index");
    if (c < 1 || c > limit) {
      fail(token.column, "channel " + std::to_string(c) + " out of range 1.." +
                             std::to_string(limit));
    }
    return c;
  }

 private:
  int line_;
  const std::vector<Token>& tokens_;
};

}  // namespace

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

Circuit parse_circuit(std::string_view text) {
  Circuit circuit;
  bool header_seen = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    const std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) continue;
    LineParser p(line_no, tokens);
    const Token& head = tokens[0];

    if (!header_seen) {
      if (head.text != "qubits") {
        p.fail(head.column, "expected 'qubits <Mq>' before instructions");
      }
      const int mq = p.parse_int(p.arg(1, "qubit count"), "qubit count");
      p.expect_arity(2);
      if (mq < 1 || mq > kMaxQubits) {
        p.fail(tokens[1].column, "qubit count must be in 1.." +
                                     std::to_string(kMaxQubits) + ", got " +
                                     std::to_string(mq));
      }
      circuit.mq = mq;
      header_seen = true;
      continue;
    }

    if (head.text == "qubits") {
      p.fail(head.column, "duplicate 'qubits' header");
    } else if (head.text == "H") {
      const int j = p.parse_qubit(p.arg(1, "qubit index"), circuit.mq);
      p.expect_arity(2);
      circuit.instructions.emplace_back(Hadamard{j});
    } else if (head.text == "ROT") {
      const int j = p.parse_qubit(p.arg(1, "qubit index"), circuit.mq);
      double angle = kDefaultRotationAngle;
      if (tokens.size() > 2) {
        angle = p.parse_angle(tokens[2]);
        p.expect_arity(3);
      }
      circuit.instructions.emplace_back(Rotation{j, angle});
    } else if (head.text == "CNOT") {
      const int control = p.parse_qubit(p.arg(1, "control qubit"), circuit.mq);
      const int target = p.parse_qubit(p.arg(2, "target qubit"), circuit.mq);
      p.expect_arity(3);
      if (control == target) {
        p.fail(tokens[2].column, "control and target must differ");
      }
      if (circuit.mq < 2) {
        p.fail(head.column, "CNOT needs at least 2 qubits");
      }
      circuit.instructions.emplace_back(Cnot{control, target});
    } else if (head.text == "PHASE") {
      const int channel = p.parse_channel(p.arg(1, "channel index"), circuit.mq);
      const double angle = p.parse_angle(p.arg(2, "angle"));
      p.expect_arity(3);
      circuit.instructions.emplace_back(PhaseShift{{{channel, angle}}});
    } else if (head.text == "SWITCH") {
      const int a = p.parse_channel(p.arg(1, "channel index"), circuit.mq);
      const int b = p.parse_channel(p.arg(2, "channel index"), circuit.mq);
      p.expect_arity(3);
      if (a == b) {
        p.fail(tokens[2].column, "switch channels must differ");
      }
      circuit.instructions.emplace_back(Switch(a, b));
    } else if (head.text == "BSPLIT") {
      const int a = p.parse_channel(p.arg(1, "channel index"), circuit.mq);
      const int b = p.parse_channel(p.arg(2, "channel index"), circuit.mq);
      if (a == b) {
        p.fail(tokens[2].column, "beam-split channels must differ");
      }
      if (tokens.size() == 3) {
        circuit.instructions.emplace_back(BeamSplit(a, b));
      } else {
        const double g = p.parse_angle(p.arg(3, "angle"));
        const double gp = p.parse_angle(p.arg(4, "angle"));
        const double d = p.parse_angle(p.arg(5, "angle"));
        const double dp = p.parse_angle(p.arg(6, "angle"));
        p.expect_arity(7);
        try {
          circuit.instructions.emplace_back(BeamSplit(a, b, g, gp, d, dp));
        } catch (const std::invalid_argument& e) {
          p.fail(tokens[3].column, e.what());
        }
      }
    } else {
      p.fail(head.column, "unknown instruction '" + head.text + "'");
    }
  }
  if (!header_seen) {
    throw ParseError(1, 1, "empty circuit: missing 'qubits <Mq>' header");
  }
  return circuit;
}

std::string format_angle(double radians) {
  if (radians == 0.0) return "0";
  for (int den = 1; den <= 12; ++den) {
    const double scaled = radians * den / std::numbers::pi;
    const long long num = std::llround(scaled);
    if (num == 0 || std::llabs(num) > 1000) continue;
    // Must reproduce the exact double the parser would compute.
    if (static_cast<double>(num) * std::numbers::pi / den != radians) continue;
    std::string result = num < 0 ? "-" : "";
    const long long mag = std::llabs(num);
    if (mag != 1) result += std::to_string(mag);
    result += "pi";
    if (den != 1) result += "/" + std::to_string(den);
    return result;
  }
  char buffer[32];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), radians);
  if (ec != std::errc()) {
    throw std::runtime_error("format_angle: formatting failed");
  }
  return std::string(buffer, ptr);
}

std::string serialize_circuit(const Circuit& circuit) {
  std::ostringstream out;
  out << "qubits " << circuit.mq << "\n";
  for (const Instruction& instruction : circuit.instructions) {
    std::visit(
        [&out](const auto& instr) {
          using T = std::decay_t<decltype(instr)>;
          if constexpr (std::is_same_v<T, Rotation>) {
            out << "ROT " << instr.qubit << " " << format_angle(instr.delta)
                << "\n";
          } else if constexpr (std::is_same_v<T, Hadamard>) {
            out << "H " << instr.qubit << "\n";
          } else if constexpr (std::is_same_v<T, Cnot>) {
            out << "CNOT " << instr.control << " " << instr.target << "\n";
          } else if constexpr (std::is_same_v<T, PhaseShift>) {
            for (const auto& [channel, angle] : instr.phases) {
              out << "PHASE " << channel << " " << format_angle(angle) << "\n";
            }
          } else if constexpr (std::is_same_v<T, Switch>) {
            out << "SWITCH " << instr.a << " " << instr.b << "\n";
          } else {
            out << "BSPLIT " << instr.a << " " << instr.b;
            if (!instr.is_canonical()) {
              out << " " << format_angle(instr.gamma) << " "
                  << format_angle(instr.gamma_p) << " "
                  << format_angle(instr.delta) << " "
                  << format_angle(instr.delta_p);
            }
            out << "\n";
          }
        },
        instruction);
  }
  return out.str();
}

}  // namespace corrsim

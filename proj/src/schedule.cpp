#include "qteleport/schedule.hpp"

#include <charconv>
#include <sstream>

#include "qteleport/errors.hpp"
#include "qteleport/gates.hpp"

namespace qtele {

namespace {

std::string q(unsigned i) { return "q" + std::to_string(i); }

std::string block(unsigned first, unsigned last) {
  return q(first) + ".." + q(last);
}

std::string exponent_range(char pauli, unsigned first, unsigned last) {
  std::string s(1, pauli);
  s += "^a" + std::to_string(first);
  if (last != first) s += "..a" + std::to_string(last);
  return s;
}

unsigned parse_qubit(std::string_view tok, std::string_view line) {
  unsigned v = 0;
  if (tok.size() < 2 || tok[0] != 'q') {
    throw UsageError("bad qubit token in line: " + std::string(line));
  }
  auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || v == 0) {
    throw UsageError("bad qubit token in line: " + std::string(line));
  }
  return v;
}

std::vector<unsigned> parse_block(std::string_view tok, std::string_view line) {
  const auto dots = tok.find("..");
  if (dots == std::string_view::npos) {
    const unsigned v = parse_qubit(tok, line);
    return {v, v};
  }
  return {parse_qubit(tok.substr(0, dots), line),
          parse_qubit(tok.substr(dots + 2), line)};
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Schedule circuit_schedule(unsigned n) {
  if (n == 0) throw UsageError("circuit_schedule: n must be >= 1");
  using K = Operation::Kind;
  Schedule ops;
  for (unsigned m = 1; m <= n; ++m) ops.push_back({K::H, {n + m}});
  for (unsigned m = 1; m <= n; ++m) ops.push_back({K::CNOT, {n + m, 2 * n + m}});
  for (unsigned m = 1; m <= n; ++m) ops.push_back({K::CNOT, {m, n + m}});
  for (unsigned m = 1; m <= n; ++m) ops.push_back({K::H, {m}});
  ops.push_back({K::Measure, {1, 2 * n}});
  ops.push_back({K::Correct, {2 * n + 1, 3 * n}});
  return ops;
}

std::string to_text(const Schedule& schedule) {
  std::ostringstream out;
  for (const Operation& op : schedule) {
    switch (op.kind) {
      case Operation::Kind::H:
        out << "H " << q(op.qubits[0]) << '\n';
        break;
      case Operation::Kind::X:
        out << "X " << q(op.qubits[0]) << '\n';
        break;
      case Operation::Kind::Z:
        out << "Z " << q(op.qubits[0]) << '\n';
        break;
      case Operation::Kind::CNOT:
        out << "CNOT " << q(op.qubits[0]) << ' ' << q(op.qubits[1]) << '\n';
        break;
      case Operation::Kind::Measure:
        out << "M " << block(op.qubits[0], op.qubits[1]) << '\n';
        break;
      case Operation::Kind::Correct: {
        // Bob's block has n qubits; the outcome bits are a_1..a_2n.
        const unsigned n = op.qubits[1] - op.qubits[0] + 1;
        out << "# correct " << block(op.qubits[0], op.qubits[1]) << ": ("
            << exponent_range('Z', 1, n) << ")(" << exponent_range('X', n + 1, 2 * n)
            << "), inverse of branch (" << exponent_range('X', n + 1, 2 * n)
            << ")(" << exponent_range('Z', 1, n) << ")\n";
        break;
      }
    }
  }
  return out.str();
}

Schedule parse_schedule(std::string_view text) {
  using K = Operation::Kind;
  Schedule ops;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;

    const auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "#") {
      if (toks.size() >= 3 && toks[1] == "correct") {
        std::string_view range = toks[2];
        if (!range.empty() && range.back() == ':') range.remove_suffix(1);
        ops.push_back({K::Correct, parse_block(range, line)});
      }
      continue;
    }
    if (toks[0].front() == '#') continue;

    if ((toks[0] == "H" || toks[0] == "X" || toks[0] == "Z") &&
        toks.size() == 2) {
      const K kind = toks[0] == "H" ? K::H : toks[0] == "X" ? K::X : K::Z;
      ops.push_back({kind, {parse_qubit(toks[1], line)}});
    } else if (toks[0] == "CNOT" && toks.size() == 3) {
      ops.push_back(
          {K::CNOT, {parse_qubit(toks[1], line), parse_qubit(toks[2], line)}});
    } else if (toks[0] == "M" && toks.size() == 2) {
      ops.push_back({K::Measure, parse_block(toks[1], line)});
    } else {
      throw UsageError("unrecognized schedule line: " + std::string(line));
    }
  }
  return ops;
}

StateVector replay(const Schedule& schedule, const StateVector& initial) {
  StateVector s = initial;
  for (const Operation& op : schedule) {
    switch (op.kind) {
      case Operation::Kind::H:
        s = apply_gate(s, hadamard(), op.qubits[0]);
        break;
      case Operation::Kind::X:
        s = apply_gate(s, pauli_x(), op.qubits[0]);
        break;
      case Operation::Kind::Z:
        s = apply_gate(s, pauli_z(), op.qubits[0]);
        break;
      case Operation::Kind::CNOT:
        s = apply_cnot(s, op.qubits[0], op.qubits[1]);
        break;
      case Operation::Kind::Measure:
      case Operation::Kind::Correct:
        return s;
    }
  }
  return s;
}

}  // namespace qtele

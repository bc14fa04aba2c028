#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qteleport/state_vector.hpp"

namespace qtele {

struct Operation {
  enum class Kind { H, X, Z, CNOT, Measure, Correct };

  Kind kind;
  // H/X/Z: {target}; CNOT: {control, target};
  // Measure/Correct: {first, last} of a contiguous block.
  std::vector<unsigned> qubits;

  friend bool operator==(const Operation&, const Operation&) = default;
};

using Schedule = std::vector<Operation>;

/// The N-qubit teleportation circuit in time order: Bell-pair Hadamards and
/// CNOTs, Alice's CNOTs and Hadamards, the measurement of qubits 1..2N and
/// Bob's correction on 2N+1..3N.
Schedule circuit_schedule(unsigned n);

/// One operation per line:
///   H q3 / X q7 / Z q2 / CNOT q1 q4 / M q1..q6
/// The correction is written as a trailing comment line.
std::string to_text(const Schedule& schedule);

/// Inverse of to_text. Blank lines and comments other than the correction
/// line are skipped. Throws UsageError on malformed lines.
Schedule parse_schedule(std::string_view text);

/// Runs the unitary part of `schedule` on `initial`, stopping at the first
/// measurement.
StateVector replay(const Schedule& schedule, const StateVector& initial);

}  // namespace qtele

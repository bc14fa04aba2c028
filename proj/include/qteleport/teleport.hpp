#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qteleport/bitchain.hpp"
#include "qteleport/gates.hpp"
#include "qteleport/state_vector.hpp"

namespace qtele {

// Register layout for teleporting N qubits (all qubit numbers 1-based):
//   1..N      input state psi (Alice)
//   N+1..2N   first half of the generalized Bell pair (Alice)
//   2N+1..3N  second half of the Bell pair (Bob)

/// (1/sqrt(2^n)) sum_j |j j> on 2n qubits, built by H on 1..n then
/// CNOT(m -> n+m).
StateVector prepare_generalized_bell(unsigned n);

/// CNOT(m -> n+m) for m = 1..n on a 3n-qubit register.
StateVector alice_cnot_layer(const StateVector& state, unsigned n);

/// H on qubits 1..n of a 3n-qubit register.
StateVector alice_hadamard_layer(const StateVector& state, unsigned n);

/// Alice's 2N-bit outcome a_1..a_2N maps to Z exponents a_1..a_N and
/// X exponents a_{N+1}..a_2N.
PauliCorrection correction_for(const BitChain& outcome);

/// Bob's uncorrected state for a given outcome: (X^x)(Z^z) psi.
StateVector branch_state(const BitChain& outcome, const StateVector& psi);
StateVector branch_state(const MeasurementOutcome& outcome,
                         const StateVector& psi);

/// Qubits 1..2n, the ones Alice measures.
std::vector<unsigned> alice_qubits(unsigned n);

struct TeleportTrace {
  unsigned n;
  std::optional<std::uint64_t> seed;  // empty for forced-outcome runs
  StateVector input_state;
  StateVector bell_state;
  StateVector pre_measurement_state;
  MeasurementOutcome outcome;
  StateVector bob_pre_correction;
  StateVector bob_post_correction;
  double fidelity_to_input;
  /// max |bob_post_i - psi_i|, no phase alignment
  double max_deviation_to_input;
};

/// The full protocol. The outcome is sampled from a generator seeded with
/// `seed`, so equal seeds give identical traces.
TeleportTrace teleport(const StateVector& psi, std::uint64_t seed);

/// Same pipeline with Alice's outcome fixed instead of sampled. The trace
/// still reports the outcome's Born probability.
TeleportTrace teleport_forced(const StateVector& psi, const BitChain& outcome);

/// State just before Alice measures: tensor with the Bell pair, then the
/// CNOT layer, then the Hadamard layer. Each stage is normalization-checked.
StateVector pre_measurement_state(const StateVector& psi);

}  // namespace qtele

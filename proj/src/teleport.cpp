#include "qteleport/teleport.hpp"

#include <string>

#include "qteleport/errors.hpp"

namespace qtele {

namespace {

void require_register(const StateVector& state, unsigned n, const char* op) {
  if (n == 0 || state.n_qubits() != 3 * n) {
    throw UsageError(std::string(op) + ": expected a " +
                     std::to_string(3 * n) + "-qubit register, got " +
                     std::to_string(state.n_qubits()));
  }
}

TeleportTrace finish(const StateVector& psi, StateVector bell,
                     StateVector pre, Measurement m,
                     std::optional<std::uint64_t> seed) {
  const unsigned n = psi.n_qubits();
  m.collapsed.require_normalized("measurement");
  StateVector bob_pre = trailing_given_prefix(m.collapsed, m.outcome.bits);
  StateVector bob_post = apply_pauli_correction_inverse(
      bob_pre, correction_for(m.outcome.bits), 1);
  bob_post.require_normalized("correction");
  const double fid = fidelity(psi, bob_post);
  const double dev = max_abs_deviation(psi, bob_post);
  return TeleportTrace{n,
                       seed,
                       psi,
                       std::move(bell),
                       std::move(pre),
                       m.outcome,
                       std::move(bob_pre),
                       std::move(bob_post),
                       fid,
                       dev};
}

}  // namespace

StateVector prepare_generalized_bell(unsigned n) {
  if (n == 0) throw UsageError("prepare_generalized_bell: n must be >= 1");
  if (2 * n > max_qubits()) {
    throw CapacityError("generalized Bell state on " + std::to_string(2 * n) +
                        " qubits exceeds capacity of " +
                        std::to_string(max_qubits()));
  }
  StateVector s = hadamard_layer(StateVector(2 * n), 1, n);
  for (unsigned m = 1; m <= n; ++m) s = apply_cnot(s, m, n + m);
  return s;
}

StateVector alice_cnot_layer(const StateVector& state, unsigned n) {
  require_register(state, n, "alice_cnot_layer");
  StateVector s = state;
  for (unsigned m = 1; m <= n; ++m) s = apply_cnot(s, m, n + m);
  return s;
}

StateVector alice_hadamard_layer(const StateVector& state, unsigned n) {
  require_register(state, n, "alice_hadamard_layer");
  return hadamard_layer(state, 1, n);
}

PauliCorrection correction_for(const BitChain& outcome) {
  if (outcome.width() % 2 != 0) {
    throw UsageError("outcome width must be even, got " +
                     std::to_string(outcome.width()));
  }
  const unsigned n = outcome.width() / 2;
  return PauliCorrection(outcome.slice(n + 1, n), outcome.slice(1, n));
}

StateVector branch_state(const BitChain& outcome, const StateVector& psi) {
  if (outcome.width() != 2 * psi.n_qubits()) {
    throw UsageError("branch_state: outcome width " +
                     std::to_string(outcome.width()) + " != 2 * " +
                     std::to_string(psi.n_qubits()));
  }
  return apply_pauli_correction(psi, correction_for(outcome), 1);
}

StateVector branch_state(const MeasurementOutcome& outcome,
                         const StateVector& psi) {
  return branch_state(outcome.bits, psi);
}

std::vector<unsigned> alice_qubits(unsigned n) {
  std::vector<unsigned> qs(2 * n);
  for (unsigned q = 1; q <= 2 * n; ++q) qs[q - 1] = q;
  return qs;
}

StateVector pre_measurement_state(const StateVector& psi) {
  const unsigned n = psi.n_qubits();
  psi.require_normalized("input");
  StateVector reg = tensor(psi, prepare_generalized_bell(n));
  reg.require_normalized("register assembly");
  reg = alice_cnot_layer(reg, n);
  reg.require_normalized("alice cnot layer");
  reg = alice_hadamard_layer(reg, n);
  reg.require_normalized("alice hadamard layer");
  return reg;
}

TeleportTrace teleport(const StateVector& psi, std::uint64_t seed) {
  const unsigned n = psi.n_qubits();
  StateVector bell = prepare_generalized_bell(n);
  StateVector pre = pre_measurement_state(psi);
  Rng rng(seed);
  Measurement m = measure_subset(pre, alice_qubits(n), rng);
  return finish(psi, std::move(bell), std::move(pre), std::move(m), seed);
}

TeleportTrace teleport_forced(const StateVector& psi, const BitChain& outcome) {
  const unsigned n = psi.n_qubits();
  if (outcome.width() != 2 * n) {
    throw UsageError("teleport_forced: outcome width " +
                     std::to_string(outcome.width()) + " != " +
                     std::to_string(2 * n));
  }
  StateVector bell = prepare_generalized_bell(n);
  StateVector pre = pre_measurement_state(psi);
  Measurement m = collapse_to(pre, alice_qubits(n), outcome);
  return finish(psi, std::move(bell), std::move(pre), std::move(m),
                std::nullopt);
}

}  // namespace qtele

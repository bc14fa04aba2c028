#include "qteleport/gates.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qteleport/errors.hpp"

namespace qtele {

namespace {

void require_qubit(const StateVector& state, unsigned q, const char* op) {
  if (q == 0 || q > state.n_qubits()) {
    throw UsageError(std::string(op) + ": qubit " + std::to_string(q) +
                     " out of range 1.." + std::to_string(state.n_qubits()));
  }
}

std::vector<Amplitude> copy_of(const StateVector& s) {
  return {s.amplitudes().begin(), s.amplitudes().end()};
}

void require_block(const StateVector& state, const PauliCorrection& corr,
                   unsigned base) {
  if (base == 0 || base + corr.n() - 1 > state.n_qubits()) {
    throw UsageError("pauli correction on qubits " + std::to_string(base) +
                     ".." + std::to_string(base + corr.n() - 1) +
                     " exceeds a " + std::to_string(state.n_qubits()) +
                     "-qubit register");
  }
}

void apply_z_factors(std::vector<Amplitude>& amps, unsigned n_qubits,
                     const PauliCorrection& corr, unsigned base) {
  for (unsigned m = 1; m <= corr.n(); ++m) {
    if (corr.z_exponents().bit(m)) {
      kernels::omp::apply_matrix(amps, index_bit(n_qubits, base + m - 1),
                                 pauli_z().m);
    }
  }
}

void apply_x_factors(std::vector<Amplitude>& amps, unsigned n_qubits,
                     const PauliCorrection& corr, unsigned base) {
  for (unsigned m = 1; m <= corr.n(); ++m) {
    if (corr.x_exponents().bit(m)) {
      kernels::omp::apply_matrix(amps, index_bit(n_qubits, base + m - 1),
                                 pauli_x().m);
    }
  }
}

}  // namespace

bool Gate2x2::is_unitary(double tol) const {
  // M * M^dagger
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      Amplitude sum = m[2 * r] * std::conj(m[2 * c]) +
                      m[2 * r + 1] * std::conj(m[2 * c + 1]);
      const Amplitude expected = r == c ? 1.0 : 0.0;
      if (std::abs(sum - expected) > tol) return false;
    }
  }
  return true;
}

Gate2x2 hadamard() {
  constexpr double h = std::numbers::sqrt2 / 2.0;
  return {{h, h, h, -h}};
}

Gate2x2 pauli_x() { return {{0.0, 1.0, 1.0, 0.0}}; }

Gate2x2 pauli_z() { return {{1.0, 0.0, 0.0, -1.0}}; }

Gate2x2 identity() { return {{1.0, 0.0, 0.0, 1.0}}; }

StateVector apply_gate(const StateVector& state, const Gate2x2& gate,
                       unsigned target) {
  require_qubit(state, target, "apply_gate");
  auto amps = copy_of(state);
  kernels::omp::apply_matrix(amps, index_bit(state.n_qubits(), target),
                             gate.m);
  return StateVector::from_amplitudes(std::move(amps));
}

StateVector apply_cnot(const StateVector& state, unsigned control,
                       unsigned target) {
  require_qubit(state, control, "apply_cnot");
  require_qubit(state, target, "apply_cnot");
  if (control == target) {
    throw UsageError("apply_cnot: control and target are both qubit " +
                     std::to_string(control));
  }
  auto amps = copy_of(state);
  const unsigned n = state.n_qubits();
  kernels::omp::apply_cnot(amps, index_bit(n, control), index_bit(n, target));
  return StateVector::from_amplitudes(std::move(amps));
}

StateVector hadamard_layer(const StateVector& state, unsigned first,
                           unsigned last) {
  require_qubit(state, first, "hadamard_layer");
  require_qubit(state, last, "hadamard_layer");
  if (first > last) throw UsageError("hadamard_layer: empty qubit range");
  auto amps = copy_of(state);
  const Gate2x2 h = hadamard();
  for (unsigned q = first; q <= last; ++q) {
    kernels::omp::apply_matrix(amps, index_bit(state.n_qubits(), q), h.m);
  }
  return StateVector::from_amplitudes(std::move(amps));
}

StateVector hadamard_closed_form(const BitChain& i) {
  const unsigned n = i.width();
  const std::size_t dim = std::size_t{1} << n;
  if (n > max_qubits()) {
    throw CapacityError("hadamard_closed_form: " + std::to_string(n) +
                        " qubits exceeds capacity");
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<Amplitude> amps(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    amps[k] = sign_of(iverson_delta_raw(i.value(), k)) * scale;
  }
  return StateVector::from_amplitudes(std::move(amps));
}

PauliCorrection::PauliCorrection(BitChain x_exponents, BitChain z_exponents)
    : x_(x_exponents), z_(z_exponents) {
  if (x_.width() != z_.width()) {
    throw UsageError("PauliCorrection: X and Z exponent widths differ");
  }
}

PauliCorrection PauliCorrection::identity(unsigned n) {
  return PauliCorrection(BitChain::zeros(n), BitChain::zeros(n));
}

StateVector apply_pauli_correction(const StateVector& state,
                                   const PauliCorrection& corr,
                                   unsigned base) {
  require_block(state, corr, base);
  auto amps = copy_of(state);
  apply_z_factors(amps, state.n_qubits(), corr, base);
  apply_x_factors(amps, state.n_qubits(), corr, base);
  return StateVector::from_amplitudes(std::move(amps));
}

StateVector apply_pauli_correction_inverse(const StateVector& state,
                                           const PauliCorrection& corr,
                                           unsigned base) {
  require_block(state, corr, base);
  auto amps = copy_of(state);
  apply_x_factors(amps, state.n_qubits(), corr, base);
  apply_z_factors(amps, state.n_qubits(), corr, base);
  return StateVector::from_amplitudes(std::move(amps));
}

}  // namespace qtele

#pragma once

#include "qteleport/bitchain.hpp"
#include "qteleport/state_vector.hpp"

namespace qtele {

/// 2x2 unitary, row-major.
struct Gate2x2 {
  Matrix2 m;

  bool is_unitary(double tol = 1e-12) const;
};

Gate2x2 hadamard();
Gate2x2 pauli_x();
Gate2x2 pauli_z();
Gate2x2 identity();

/// Applies `gate` to 1-based qubit `target`, identity elsewhere.
StateVector apply_gate(const StateVector& state, const Gate2x2& gate,
                       unsigned target);

StateVector apply_cnot(const StateVector& state, unsigned control,
                       unsigned target);

/// H on every qubit in [first, last] (1-based, inclusive).
StateVector hadamard_layer(const StateVector& state, unsigned first,
                           unsigned last);

/// H^{(x)N}|i> built from the Iverson delta alone:
/// amplitude (-1)^delta(i,k) / sqrt(2^N) on every |k>. No matrix is applied.
StateVector hadamard_closed_form(const BitChain& i);

/// The Pauli string (X^x_1 (x) ... (x) X^x_n)(Z^z_1 (x) ... (x) Z^z_n).
class PauliCorrection {
 public:
  PauliCorrection(BitChain x_exponents, BitChain z_exponents);

  static PauliCorrection identity(unsigned n);

  unsigned n() const { return x_.width(); }
  const BitChain& x_exponents() const { return x_; }
  const BitChain& z_exponents() const { return z_; }

 private:
  BitChain x_;
  BitChain z_;
};

/// Applies the operator on qubits base..base+n-1: every Z^z_m first, then
/// every X^x_m (the Z product is the rightmost factor).
StateVector apply_pauli_correction(const StateVector& state,
                                   const PauliCorrection& corr, unsigned base);

/// Exact inverse of apply_pauli_correction: X factors first, then Z factors.
/// inverse(forward(psi)) == psi including sign.
StateVector apply_pauli_correction_inverse(const StateVector& state,
                                           const PauliCorrection& corr,
                                           unsigned base);

}  // namespace qtele

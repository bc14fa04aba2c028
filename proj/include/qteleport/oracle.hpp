#pragma once

// Closed-form teleportation states built by direct index arithmetic. Nothing
// here touches the gate kernels, so a bug in the simulator cannot hide behind
// the same bug in its check.

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "qteleport/state_vector.hpp"

namespace qtele::oracle {

/// (1/sqrt(2^n)) sum_j |j_n j_n>, on 2n qubits.
StateVector generalized_bell(unsigned n);

/// After Alice's CNOTs: amplitude alpha_i / sqrt(2^n) on |i, j XOR i, j>.
/// `alpha` must hold 2^n amplitudes with unit norm.
StateVector after_cnot_layer(std::span<const Amplitude> alpha, unsigned n);

/// After Alice's Hadamards: sum over i, j, k of
/// (-1)^delta(i,k) alpha_i / 2^n on |k, j XOR i, j>.
StateVector after_hadamard_layer(std::span<const Amplitude> alpha, unsigned n);

/// Outcome-indexed decomposition of the pre-measurement state. Entry a
/// (a 2n-bit value a_1..a_2n) is (1/2^n) (X^{a_{n+1..2n}}) (Z^{a_{1..n}}) psi.
std::vector<StateVector> branches(std::span<const Amplitude> alpha, unsigned n);

/// sum_a |a> (x) branch[a], on 3n qubits.
StateVector reassemble(const std::vector<StateVector>& branch, unsigned n);

/// A hand-transcribed row of the expanded N-qubit pre-measurement state:
/// Alice's outcome and, for each input coefficient alpha_t, the sign and
/// Bob basis label it lands on. e.g. {"0101", "+01 -00 +11 -10"}.
struct FixtureRow {
  std::string_view outcome;
  std::string_view terms;
};

/// The four branches of the single-qubit protocol.
std::span<const FixtureRow> single_qubit_rows();
/// The sixteen branches of the two-qubit protocol.
std::span<const FixtureRow> two_qubit_rows();

/// Pre-measurement state assembled from fixture rows, each scaled by 1/2^n.
StateVector from_fixture(std::span<const FixtureRow> rows,
                         std::span<const Amplitude> alpha, unsigned n);

/// Number of rows whose outcome slice of `pre` matches the fixture within
/// `tol` for this alpha.
std::size_t matching_rows(std::span<const FixtureRow> rows,
                          const StateVector& pre,
                          std::span<const Amplitude> alpha, unsigned n,
                          double tol);

}  // namespace qtele::oracle

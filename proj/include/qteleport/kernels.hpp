#pragma once

// Low-level amplitude kernels. Every kernel exists twice: a plain serial
// loop kept as the reference, and an OpenMP version used by the library.
// Tests hold the two to bitwise-identical (or reduction-tolerance) results.
//
// Bit positions here are physical: bit 0 is the least significant bit of the
// amplitude index. The qubit-numbered API in gates.hpp converts.

#include <array>
#include <complex>
#include <cstddef>
#include <span>

namespace qtele {

using Amplitude = std::complex<double>;
using Matrix2 = std::array<Amplitude, 4>;  // row-major

namespace kernels {

// Below this many amplitudes the OpenMP kernels stay on one thread.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 12;

namespace serial {

void apply_matrix(std::span<Amplitude> amps, unsigned bit, const Matrix2& m);
void apply_cnot(std::span<Amplitude> amps, unsigned control_bit,
                unsigned target_bit);
double norm_squared(std::span<const Amplitude> amps);
Amplitude inner_product(std::span<const Amplitude> a,
                        std::span<const Amplitude> b);
/// Accumulates |amp|^2 into out[outcome], where outcome packs the listed
/// bits of each index, bits[0] most significant. out must hold 2^bits.size().
void marginal(std::span<const Amplitude> amps, std::span<const unsigned> bits,
              std::span<double> out);

}  // namespace serial

namespace omp {

void apply_matrix(std::span<Amplitude> amps, unsigned bit, const Matrix2& m);
void apply_cnot(std::span<Amplitude> amps, unsigned control_bit,
                unsigned target_bit);
double norm_squared(std::span<const Amplitude> amps);
Amplitude inner_product(std::span<const Amplitude> a,
                        std::span<const Amplitude> b);
void marginal(std::span<const Amplitude> amps, std::span<const unsigned> bits,
              std::span<double> out);

}  // namespace omp

inline std::size_t outcome_of(std::size_t index,
                              std::span<const unsigned> bits) {
  std::size_t outcome = 0;
  for (unsigned b : bits) outcome = (outcome << 1) | ((index >> b) & 1u);
  return outcome;
}

}  // namespace kernels
}  // namespace qtele

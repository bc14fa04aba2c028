#include "qteleport/kernels.hpp"

namespace qtele::kernels::serial {

void apply_matrix(std::span<Amplitude> amps, unsigned bit, const Matrix2& m) {
  const std::size_t stride = std::size_t{1} << bit;
  for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
    for (std::size_t off = 0; off < stride; ++off) {
      const std::size_t i0 = base + off;
      const std::size_t i1 = i0 + stride;
      const Amplitude a0 = amps[i0];
      const Amplitude a1 = amps[i1];
      amps[i0] = m[0] * a0 + m[1] * a1;
      amps[i1] = m[2] * a0 + m[3] * a1;
    }
  }
}

void apply_cnot(std::span<Amplitude> amps, unsigned control_bit,
                unsigned target_bit) {
  const std::size_t cmask = std::size_t{1} << control_bit;
  const std::size_t tmask = std::size_t{1} << target_bit;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    // visit each swapped pair once, from its target-clear member
    if ((i & cmask) && !(i & tmask)) std::swap(amps[i], amps[i | tmask]);
  }
}

double norm_squared(std::span<const Amplitude> amps) {
  double sum = 0.0;
  for (const Amplitude& a : amps) sum += std::norm(a);
  return sum;
}

Amplitude inner_product(std::span<const Amplitude> a,
                        std::span<const Amplitude> b) {
  Amplitude sum{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

void marginal(std::span<const Amplitude> amps, std::span<const unsigned> bits,
              std::span<double> out) {
  for (double& p : out) p = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    out[outcome_of(i, bits)] += std::norm(amps[i]);
  }
}

}  // namespace qtele::kernels::serial

#include <cstdint>

#include "qteleport/kernels.hpp"

namespace qtele::kernels::omp {

namespace {

// Inserts a zero at `bit` in k: enumerates the indices whose `bit` is clear.
inline std::size_t spread(std::size_t k, unsigned bit) {
  const std::size_t low = k & ((std::size_t{1} << bit) - 1);
  return ((k >> bit) << (bit + 1)) | low;
}

}  // namespace

void apply_matrix(std::span<Amplitude> amps, unsigned bit, const Matrix2& m) {
  const std::size_t stride = std::size_t{1} << bit;
  const std::int64_t pairs = static_cast<std::int64_t>(amps.size() / 2);
  Amplitude* data = amps.data();
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
  for (std::int64_t k = 0; k < pairs; ++k) {
    const std::size_t i0 = spread(static_cast<std::size_t>(k), bit);
    const std::size_t i1 = i0 + stride;
    const Amplitude a0 = data[i0];
    const Amplitude a1 = data[i1];
    data[i0] = m[0] * a0 + m[1] * a1;
    data[i1] = m[2] * a0 + m[3] * a1;
  }
}

void apply_cnot(std::span<Amplitude> amps, unsigned control_bit,
                unsigned target_bit) {
  const std::size_t cmask = std::size_t{1} << control_bit;
  const std::size_t tmask = std::size_t{1} << target_bit;
  const std::int64_t pairs = static_cast<std::int64_t>(amps.size() / 2);
  Amplitude* data = amps.data();
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
  for (std::int64_t k = 0; k < pairs; ++k) {
    const std::size_t i = spread(static_cast<std::size_t>(k), target_bit);
    if (i & cmask) std::swap(data[i], data[i | tmask]);
  }
}

double norm_squared(std::span<const Amplitude> amps) {
  const std::int64_t n = static_cast<std::int64_t>(amps.size());
  const Amplitude* data = amps.data();
  double sum = 0.0;
#pragma omp parallel for reduction(+ : sum) schedule(static) \
    if (amps.size() >= kParallelThreshold)
  for (std::int64_t i = 0; i < n; ++i) sum += std::norm(data[i]);
  return sum;
}

Amplitude inner_product(std::span<const Amplitude> a,
                        std::span<const Amplitude> b) {
  const std::int64_t n = static_cast<std::int64_t>(a.size());
  const Amplitude* pa = a.data();
  const Amplitude* pb = b.data();
  double re = 0.0;
  double im = 0.0;
#pragma omp parallel for reduction(+ : re, im) schedule(static) \
    if (a.size() >= kParallelThreshold)
  for (std::int64_t i = 0; i < n; ++i) {
    const Amplitude t = std::conj(pa[i]) * pb[i];
    re += t.real();
    im += t.imag();
  }
  return {re, im};
}

void marginal(std::span<const Amplitude> amps, std::span<const unsigned> bits,
              std::span<double> out) {
  const std::int64_t n = static_cast<std::int64_t>(amps.size());
  const std::size_t len = out.size();
  const Amplitude* data = amps.data();
  double* acc = out.data();
  for (std::size_t o = 0; o < len; ++o) acc[o] = 0.0;
#pragma omp parallel for reduction(+ : acc[:len]) schedule(static) \
    if (amps.size() >= kParallelThreshold)
  for (std::int64_t i = 0; i < n; ++i) {
    acc[outcome_of(static_cast<std::size_t>(i), bits)] += std::norm(data[i]);
  }
}

}  // namespace qtele::kernels::omp

#include <gtest/gtest.h>

#include <omp.h>

#include <vector>

#include "qteleport/gates.hpp"
#include "qteleport/kernels.hpp"
#include "qteleport/state_vector.hpp"

using namespace qtele;

namespace {

std::vector<Amplitude> random_amps(unsigned n, std::uint64_t seed) {
  Rng rng(seed);
  const StateVector s = random_state(n, rng);
  return {s.amplitudes().begin(), s.amplitudes().end()};
}

// Sizes straddle kParallelThreshold so both OpenMP branches run.
const unsigned kSizes[] = {1, 3, 8, 12, 14};

Matrix2 generic_unitary() {
  // Rotation with a phase; no special structure the kernels could exploit.
  const double c = std::cos(0.3), s = std::sin(0.3);
  const Amplitude ph = std::polar(1.0, 1.1);
  return {c, -s * ph, s, c * ph};
}

}  // namespace

TEST(Kernels, ThresholdSitsInsideTestedRange) {
  EXPECT_LT(std::size_t{1} << 8, kernels::kParallelThreshold);
  EXPECT_GT(std::size_t{1} << 14, kernels::kParallelThreshold);
}

TEST(Kernels, ApplyMatrixParallelMatchesSerialBitForBit) {
  for (unsigned n : kSizes) {
    for (unsigned bit = 0; bit < n; ++bit) {
      for (const Matrix2& m : {hadamard().m, pauli_x().m, generic_unitary()}) {
        auto a = random_amps(n, n * 100 + bit);
        auto b = a;
        kernels::serial::apply_matrix(a, bit, m);
        kernels::omp::apply_matrix(b, bit, m);
        ASSERT_EQ(a, b) << "n=" << n << " bit=" << bit;
      }
    }
  }
}

TEST(Kernels, CnotParallelMatchesSerialBitForBit) {
  for (unsigned n : kSizes) {
    if (n < 2) continue;
    for (unsigned c = 0; c < n; ++c) {
      for (unsigned t = 0; t < n; ++t) {
        if (c == t) continue;
        auto a = random_amps(n, c * 31 + t);
        auto b = a;
        kernels::serial::apply_cnot(a, c, t);
        kernels::omp::apply_cnot(b, c, t);
        ASSERT_EQ(a, b) << "n=" << n << " c=" << c << " t=" << t;
      }
    }
  }
}

TEST(Kernels, ReductionsAgree) {
  for (unsigned n : kSizes) {
    const auto a = random_amps(n, 7 + n);
    const auto b = random_amps(n, 70 + n);
    EXPECT_NEAR(kernels::serial::norm_squared(a),
                kernels::omp::norm_squared(a), 1e-13);
    const Amplitude s = kernels::serial::inner_product(a, b);
    const Amplitude p = kernels::omp::inner_product(a, b);
    EXPECT_NEAR(std::abs(s - p), 0.0, 1e-13);
  }
}

TEST(Kernels, MarginalsAgree) {
  for (unsigned n : kSizes) {
    const auto a = random_amps(n, 500 + n);
    std::vector<unsigned> bits;
    for (unsigned b = 0; b < n; b += 2) bits.push_back(b);
    std::vector<double> s(std::size_t{1} << bits.size());
    std::vector<double> p(s.size());
    kernels::serial::marginal(a, bits, s);
    kernels::omp::marginal(a, bits, p);
    for (std::size_t o = 0; o < s.size(); ++o) EXPECT_NEAR(s[o], p[o], 1e-14);
  }
}

TEST(Kernels, ResultsIndependentOfThreadCount) {
  const auto base = random_amps(14, 123);
  std::vector<Amplitude> ref;
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    auto a = base;
    for (unsigned bit = 0; bit < 14; ++bit) {
      kernels::omp::apply_matrix(a, bit, hadamard().m);
    }
    kernels::omp::apply_cnot(a, 13, 0);
    if (ref.empty()) {
      ref = a;
    } else {
      EXPECT_EQ(a, ref) << threads << " threads";
    }
  }
}

TEST(Kernels, OutcomeOfPacksBitsMostSignificantFirst) {
  const std::vector<unsigned> bits{0, 2};
  // index 0b101: bit0 = 1, bit2 = 1
  EXPECT_EQ(kernels::outcome_of(0b101, bits), 0b11u);
  // index 0b100: bit0 = 0, bit2 = 1 -> "01"
  EXPECT_EQ(kernels::outcome_of(0b100, bits), 0b01u);
}

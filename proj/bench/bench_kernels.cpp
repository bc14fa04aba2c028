// Serial reference kernels vs their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <vector>

#include "qteleport/gates.hpp"
#include "qteleport/kernels.hpp"
#include "qteleport/state_vector.hpp"
#include "qteleport/teleport.hpp"

namespace {

using namespace qtele;

std::vector<Amplitude> random_amps(unsigned n) {
  Rng rng(12345);
  const StateVector s = random_state(n, rng);
  return {s.amplitudes().begin(), s.amplitudes().end()};
}

template <auto Kernel>
void BM_ApplyMatrix(benchmark::State& st) {
  const auto n = static_cast<unsigned>(st.range(0));
  auto amps = random_amps(n);
  const Matrix2 h = hadamard().m;
  for (auto _ : st) {
    for (unsigned b = 0; b < n; ++b) Kernel(amps, b, h);
    benchmark::DoNotOptimize(amps.data());
  }
  st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(amps.size()) * n);
}

template <auto Kernel>
void BM_Cnot(benchmark::State& st) {
  const auto n = static_cast<unsigned>(st.range(0));
  auto amps = random_amps(n);
  for (auto _ : st) {
    for (unsigned b = 1; b < n; ++b) Kernel(amps, b, b - 1);
    benchmark::DoNotOptimize(amps.data());
  }
  st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(amps.size()) *
                       (n - 1));
}

template <auto Kernel>
void BM_Marginal(benchmark::State& st) {
  const auto n = static_cast<unsigned>(st.range(0));
  const auto amps = random_amps(n);
  std::vector<unsigned> bits;
  for (unsigned b = n; b-- > n / 3;) bits.push_back(b);
  std::vector<double> out(std::size_t{1} << bits.size());
  for (auto _ : st) {
    Kernel(amps, bits, out);
    benchmark::DoNotOptimize(out.data());
  }
  st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(amps.size()));
}

template <auto Kernel>
void BM_Norm(benchmark::State& st) {
  const auto amps = random_amps(static_cast<unsigned>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(Kernel(amps));
  st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(amps.size()));
}

void BM_TeleportPipeline(benchmark::State& st) {
  const auto n = static_cast<unsigned>(st.range(0));
  Rng rng(7);
  const StateVector psi = random_state(n, rng);
  std::uint64_t seed = 0;
  for (auto _ : st) benchmark::DoNotOptimize(teleport(psi, seed++));
}

BENCHMARK(BM_ApplyMatrix<kernels::serial::apply_matrix>)->DenseRange(12, 21, 3);
BENCHMARK(BM_ApplyMatrix<kernels::omp::apply_matrix>)->DenseRange(12, 21, 3);
BENCHMARK(BM_Cnot<kernels::serial::apply_cnot>)->DenseRange(12, 21, 3);
BENCHMARK(BM_Cnot<kernels::omp::apply_cnot>)->DenseRange(12, 21, 3);
BENCHMARK(BM_Marginal<kernels::serial::marginal>)->DenseRange(12, 21, 3);
BENCHMARK(BM_Marginal<kernels::omp::marginal>)->DenseRange(12, 21, 3);
BENCHMARK(BM_Norm<kernels::serial::norm_squared>)->DenseRange(12, 21, 3);
BENCHMARK(BM_Norm<kernels::omp::norm_squared>)->DenseRange(12, 21, 3);
BENCHMARK(BM_TeleportPipeline)->DenseRange(1, 6, 1);

}  // namespace

BENCHMARK_MAIN();

#include "qteleport/state_vector.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <string>

#include "qteleport/errors.hpp"

namespace qtele {

namespace {

std::atomic<unsigned> g_max_qubits{kDefaultMaxQubits};

void require_capacity(unsigned n) {
  if (n > max_qubits()) {
    throw CapacityError("register of " + std::to_string(n) +
                        " qubits exceeds capacity of " +
                        std::to_string(max_qubits()));
  }
}

void require_same_size(const StateVector& a, const StateVector& b,
                       const char* op) {
  if (a.n_qubits() != b.n_qubits()) {
    throw UsageError(std::string(op) + ": dimension mismatch (" +
                     std::to_string(a.n_qubits()) + " vs " +
                     std::to_string(b.n_qubits()) + " qubits)");
  }
}

std::vector<unsigned> subset_bits(const StateVector& state,
                                  std::span<const unsigned> qubits) {
  const unsigned n = state.n_qubits();
  if (qubits.empty()) throw UsageError("measurement needs at least one qubit");
  std::vector<bool> seen(n + 1, false);
  std::vector<unsigned> bits;
  bits.reserve(qubits.size());
  for (unsigned q : qubits) {
    if (q == 0 || q > n) {
      throw UsageError("qubit " + std::to_string(q) + " out of range 1.." +
                       std::to_string(n));
    }
    if (seen[q]) throw UsageError("qubit " + std::to_string(q) + " repeated");
    seen[q] = true;
    bits.push_back(index_bit(n, q));
  }
  return bits;
}

}  // namespace

unsigned max_qubits() { return g_max_qubits.load(std::memory_order_relaxed); }

void set_max_qubits(unsigned n) {
  if (n == 0 || n > kHardMaxQubits) {
    throw UsageError("max qubits must be in 1.." +
                     std::to_string(kHardMaxQubits));
  }
  g_max_qubits.store(n, std::memory_order_relaxed);
}

StateVector::StateVector(unsigned n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits == 0) throw UsageError("StateVector needs at least one qubit");
  require_capacity(n_qubits);
  amps_.assign(std::size_t{1} << n_qubits, Amplitude{0.0, 0.0});
  amps_[0] = 1.0;
}

StateVector::StateVector(unsigned n_qubits, std::vector<Amplitude> amps)
    : n_qubits_(n_qubits), amps_(std::move(amps)) {}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amps) {
  const std::size_t len = amps.size();
  if (len < 2 || !std::has_single_bit(len)) {
    throw UsageError("amplitude count " + std::to_string(len) +
                     " is not a power of two >= 2");
  }
  const auto n = static_cast<unsigned>(std::countr_zero(len));
  require_capacity(n);
  for (const Amplitude& a : amps) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw UsageError("amplitudes must be finite");
    }
  }
  return StateVector(n, std::move(amps));
}

double StateVector::norm_squared() const {
  return kernels::omp::norm_squared(amps_);
}

bool StateVector::is_normalized(double tol) const {
  return std::abs(norm_squared() - 1.0) <= tol;
}

void StateVector::require_normalized(std::string_view stage,
                                     double tol) const {
  const double ns = norm_squared();
  if (!(std::abs(ns - 1.0) <= tol)) {
    throw InternalError("normalization drift after " + std::string(stage) +
                        ": |psi|^2 = " + std::to_string(ns));
  }
}

StateVector StateVector::normalized() const {
  const double ns = norm_squared();
  if (!(ns > 0.0)) throw UsageError("cannot normalize the zero vector");
  return scaled(1.0 / std::sqrt(ns));
}

StateVector StateVector::scaled(Amplitude factor) const {
  std::vector<Amplitude> out(amps_);
  for (Amplitude& a : out) a *= factor;
  return StateVector(n_qubits_, std::move(out));
}

StateVector basis_state(const BitChain& label) {
  StateVector s(label.width());
  std::vector<Amplitude> amps = std::move(s).take_amplitudes();
  amps[0] = 0.0;
  amps[label.value()] = 1.0;
  return StateVector::from_amplitudes(std::move(amps));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  require_capacity(a.n_qubits() + b.n_qubits());
  std::vector<Amplitude> out(a.dimension() * b.dimension());
  const std::size_t db = b.dimension();
  for (std::size_t x = 0; x < a.dimension(); ++x) {
    for (std::size_t y = 0; y < db; ++y) out[x * db + y] = a[x] * b[y];
  }
  return StateVector::from_amplitudes(std::move(out));
}

Amplitude inner_product(const StateVector& a, const StateVector& b) {
  require_same_size(a, b, "inner_product");
  return kernels::omp::inner_product(a.amplitudes(), b.amplitudes());
}

double fidelity(const StateVector& a, const StateVector& b) {
  require_same_size(a, b, "fidelity");
  return std::norm(inner_product(a, b));
}

double max_abs_deviation(const StateVector& a, const StateVector& b) {
  require_same_size(a, b, "max_abs_deviation");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

OutcomeDistribution probabilities_of_subset(const StateVector& state,
                                            std::span<const unsigned> qubits) {
  const std::vector<unsigned> bits = subset_bits(state, qubits);
  OutcomeDistribution dist;
  dist.width = static_cast<unsigned>(bits.size());
  dist.probabilities.assign(std::size_t{1} << bits.size(), 0.0);
  kernels::omp::marginal(state.amplitudes(), bits, dist.probabilities);
  return dist;
}

Measurement collapse_to(const StateVector& state,
                        std::span<const unsigned> qubits,
                        const BitChain& outcome) {
  const std::vector<unsigned> bits = subset_bits(state, qubits);
  if (outcome.width() != bits.size()) {
    throw UsageError("outcome width " + std::to_string(outcome.width()) +
                     " does not match " + std::to_string(bits.size()) +
                     " measured qubits");
  }
  std::vector<Amplitude> amps(state.amplitudes().begin(),
                              state.amplitudes().end());
  double prob = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (kernels::outcome_of(i, bits) == outcome.value()) {
      prob += std::norm(amps[i]);
    } else {
      amps[i] = 0.0;
    }
  }
  if (!(prob > 0.0)) {
    throw InternalError("outcome " + outcome.to_string() +
                        " has zero probability");
  }
  const double scale = 1.0 / std::sqrt(prob);
  for (Amplitude& a : amps) a *= scale;
  return {MeasurementOutcome{outcome, prob},
          StateVector::from_amplitudes(std::move(amps))};
}

Measurement measure_subset(const StateVector& state,
                           std::span<const unsigned> qubits, Rng& rng) {
  const OutcomeDistribution dist = probabilities_of_subset(state, qubits);
  double total = 0.0;
  for (double p : dist.probabilities) total += p;
  if (!(total > 1e-300)) {
    throw InternalError("measurement on a state with no probability mass");
  }

  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const double u = uniform(rng) * total;
  std::size_t chosen = dist.probabilities.size();
  double cumulative = 0.0;
  std::size_t last_nonzero = 0;
  for (std::size_t o = 0; o < dist.probabilities.size(); ++o) {
    if (dist.probabilities[o] <= 0.0) continue;
    last_nonzero = o;
    cumulative += dist.probabilities[o];
    if (u < cumulative) {
      chosen = o;
      break;
    }
  }
  // u can land at the very top of the range through rounding
  if (chosen == dist.probabilities.size()) chosen = last_nonzero;

  return collapse_to(state, qubits, BitChain(dist.width, chosen));
}

StateVector trailing_given_prefix(const StateVector& state,
                                  const BitChain& prefix) {
  const unsigned n = state.n_qubits();
  if (prefix.width() >= n) {
    throw UsageError("prefix must leave at least one trailing qubit");
  }
  const unsigned rest = n - prefix.width();
  const std::size_t dim = std::size_t{1} << rest;
  const std::size_t offset = static_cast<std::size_t>(prefix.value()) << rest;
  std::vector<Amplitude> amps(state.amplitudes().begin() + offset,
                              state.amplitudes().begin() + offset + dim);
  auto sub = StateVector::from_amplitudes(std::move(amps));
  if (!(sub.norm_squared() > 0.0)) {
    throw InternalError("prefix " + prefix.to_string() + " has zero weight");
  }
  return sub.normalized();
}

}  // namespace qtele

namespace qtele {

StateVector random_state(unsigned n, Rng& rng) {
  if (n == 0) throw UsageError("random_state: n must be >= 1");
  if (n > max_qubits()) {
    throw CapacityError("random_state: " + std::to_string(n) +
                        " qubits exceeds capacity");
  }
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Amplitude> amps(std::size_t{1} << n);
  for (Amplitude& a : amps) {
    const double re = normal(rng);
    const double im = normal(rng);
    a = {re, im};
  }
  return StateVector::from_amplitudes(std::move(amps)).normalized();
}

}  // namespace qtele

#pragma once

#include <cstddef>
#include <random>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qteleport/bitchain.hpp"
#include "qteleport/kernels.hpp"

namespace qtele {

using Rng = std::mt19937_64;

inline constexpr double kNormTolerance = 1e-10;
// Pipeline stages fail loudly past this much normalization drift.
inline constexpr double kDriftTolerance = 1e-8;

inline constexpr unsigned kDefaultMaxQubits = 21;
inline constexpr unsigned kHardMaxQubits = 30;

/// Largest register any operation may build. Defaults to 21 qubits.
unsigned max_qubits();
/// Throws UsageError outside 1..kHardMaxQubits.
void set_max_qubits(unsigned n);

/// Dense amplitude vector over n qubits, indexed big-endian by BitChain value
/// (qubit 1 is the most significant index bit).
///
/// The type guarantees a power-of-two length and finite amplitudes. It does
/// not force unit norm: oracle branches carry a 2^-N prefactor. Use
/// require_normalized() at points where a physical state is expected.
class StateVector {
 public:
  /// |0...0> on n qubits.
  explicit StateVector(unsigned n_qubits);

  static StateVector from_amplitudes(std::vector<Amplitude> amps);

  unsigned n_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  const Amplitude& operator[](std::size_t i) const { return amps_[i]; }

  double norm_squared() const;
  bool is_normalized(double tol = kNormTolerance) const;
  /// Throws InternalError naming `stage` if |norm^2 - 1| > tol.
  void require_normalized(std::string_view stage,
                          double tol = kDriftTolerance) const;

  StateVector normalized() const;
  StateVector scaled(Amplitude factor) const;

  /// Moves the amplitudes out, for operations that build a new state.
  std::vector<Amplitude> take_amplitudes() && { return std::move(amps_); }

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  StateVector(unsigned n_qubits, std::vector<Amplitude> amps);

  unsigned n_qubits_ = 0;
  std::vector<Amplitude> amps_;
};

struct MeasurementOutcome {
  BitChain bits;
  double probability = 0.0;
};

/// Exact Born distribution of a subset measurement; probabilities[v] is the
/// probability of the outcome chain with value v (qubits[0] most significant).
struct OutcomeDistribution {
  unsigned width = 0;
  std::vector<double> probabilities;
};

struct Measurement {
  MeasurementOutcome outcome;
  StateVector collapsed;
};

StateVector basis_state(const BitChain& label);

/// (a (x) b)[xy] = a[x] * b[y]; a's qubits come first.
StateVector tensor(const StateVector& a, const StateVector& b);

Amplitude inner_product(const StateVector& a, const StateVector& b);

/// |<a|b>|^2.
double fidelity(const StateVector& a, const StateVector& b);

/// Largest |a_i - b_i| over all amplitudes; no phase alignment.
double max_abs_deviation(const StateVector& a, const StateVector& b);

/// Qubit numbers are 1-based. Throws UsageError on duplicates or range.
OutcomeDistribution probabilities_of_subset(const StateVector& state,
                                            std::span<const unsigned> qubits);

/// Draws an outcome by cumulative-probability inversion over outcomes in
/// ascending order, using one uniform draw from `rng`, then collapses.
Measurement measure_subset(const StateVector& state,
                           std::span<const unsigned> qubits, Rng& rng);

/// Collapses onto a chosen outcome. The reported probability is the outcome's
/// true Born probability; zero-probability outcomes throw InternalError.
Measurement collapse_to(const StateVector& state,
                        std::span<const unsigned> qubits,
                        const BitChain& outcome);

/// State of the trailing qubits given that the leading prefix.width() qubits
/// read `prefix`. Renormalized; throws InternalError if that slice is empty.
StateVector trailing_given_prefix(const StateVector& state,
                                  const BitChain& prefix);

/// 1-based qubit q in an n-qubit register lives at index bit n - q.
inline unsigned index_bit(unsigned n_qubits, unsigned qubit) {
  return n_qubits - qubit;
}

}  // namespace qtele

namespace qtele {

/// 2^(n+1) independent standard normals paired into complex amplitudes
/// (re, im, re, im, ...), then normalized.
StateVector random_state(unsigned n, Rng& rng);

}  // namespace qtele

#pragma once

#include <gtest/gtest.h>

#include <complex>
#include <ostream>
#include <vector>

#include "qteleport/state_vector.hpp"

namespace qtele {

// gtest value printer: amplitudes instead of raw bytes
inline void PrintTo(const StateVector& s, std::ostream* os) {
  *os << s.n_qubits() << " qubits [";
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    *os << (i ? ", " : "") << s[i];
  }
  *os << "]";
}

}  // namespace qtele

namespace qtele::testing {

inline StateVector make_state(std::vector<Amplitude> amps) {
  return StateVector::from_amplitudes(std::move(amps));
}

inline ::testing::AssertionResult StatesNear(const StateVector& actual,
                                             const StateVector& expected,
                                             double tol) {
  if (actual.n_qubits() != expected.n_qubits()) {
    return ::testing::AssertionFailure()
           << "qubit count " << actual.n_qubits() << " vs "
           << expected.n_qubits();
  }
  for (std::size_t i = 0; i < actual.dimension(); ++i) {
    if (std::abs(actual[i] - expected[i]) > tol) {
      return ::testing::AssertionFailure()
             << "amplitude " << i << ": " << actual[i] << " vs "
             << expected[i] << " (tol " << tol << ")";
    }
  }
  return ::testing::AssertionSuccess();
}

}  // namespace qtele::testing

#include "qteleport/oracle.hpp"

#include <cmath>
#include <string>

#include "qteleport/errors.hpp"

namespace qtele::oracle {

namespace {

constexpr std::array<FixtureRow, 4> kSingleQubit{{
    {"00", "+0 +1"},
    {"01", "+1 +0"},
    {"10", "+0 -1"},
    {"11", "+1 -0"},
}};

constexpr std::array<FixtureRow, 16> kTwoQubit{{
    {"0000", "+00 +01 +10 +11"},
    {"0001", "+01 +00 +11 +10"},
    {"0010", "+10 +11 +00 +01"},
    {"0011", "+11 +10 +01 +00"},
    {"0100", "+00 -01 +10 -11"},
    {"0101", "+01 -00 +11 -10"},
    {"0110", "+10 -11 +00 -01"},
    {"0111", "+11 -10 +01 -00"},
    {"1000", "+00 +01 -10 -11"},
    {"1001", "+01 +00 -11 -10"},
    {"1010", "+10 +11 -00 -01"},
    {"1011", "+11 +10 -01 -00"},
    {"1100", "+00 -01 -10 +11"},
    {"1101", "+01 -00 -11 +10"},
    {"1110", "+10 -11 -00 +01"},
    {"1111", "+11 -10 -01 +00"},
}};

std::size_t dim_of(unsigned n) { return std::size_t{1} << n; }

void require_alpha(std::span<const Amplitude> alpha, unsigned n) {
  if (n == 0 || 3 * n > max_qubits()) {
    throw UsageError("oracle: n = " + std::to_string(n) +
                     " outside 1..capacity/3");
  }
  if (alpha.size() != dim_of(n)) {
    throw UsageError("oracle: expected " + std::to_string(dim_of(n)) +
                     " amplitudes, got " + std::to_string(alpha.size()));
  }
  double ns = 0.0;
  for (const Amplitude& a : alpha) ns += std::norm(a);
  if (std::abs(ns - 1.0) > kNormTolerance) {
    throw UsageError("oracle: alpha is not normalized (|alpha|^2 = " +
                     std::to_string(ns) + ")");
  }
}

struct Term {
  double sign;
  std::size_t label;
};

std::vector<Term> parse_terms(const FixtureRow& row, unsigned n) {
  std::vector<Term> terms;
  std::size_t i = 0;
  const std::string_view s = row.terms;
  while (i < s.size()) {
    if (s[i] == ' ') {
      ++i;
      continue;
    }
    if (s[i] != '+' && s[i] != '-') {
      throw UsageError("fixture row " + std::string(row.outcome) +
                       ": expected a sign");
    }
    const double sign = s[i] == '-' ? -1.0 : 1.0;
    const auto label = BitChain::parse(s.substr(i + 1, n));
    terms.push_back({sign, label.value()});
    i += 1 + n;
  }
  if (terms.size() != dim_of(n)) {
    throw UsageError("fixture row " + std::string(row.outcome) +
                     ": wrong term count");
  }
  return terms;
}

}  // namespace

StateVector generalized_bell(unsigned n) {
  if (n == 0 || 2 * n > max_qubits()) {
    throw UsageError("oracle::generalized_bell: bad n");
  }
  const std::size_t d = dim_of(n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<Amplitude> out(d * d);
  for (std::size_t j = 0; j < d; ++j) out[(j << n) | j] = amp;
  return StateVector::from_amplitudes(std::move(out));
}

StateVector after_cnot_layer(std::span<const Amplitude> alpha, unsigned n) {
  require_alpha(alpha, n);
  const std::size_t d = dim_of(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<Amplitude> out(d * d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      out[(i << (2 * n)) | ((j ^ i) << n) | j] = alpha[i] * scale;
    }
  }
  return StateVector::from_amplitudes(std::move(out));
}

StateVector after_hadamard_layer(std::span<const Amplitude> alpha,
                                 unsigned n) {
  require_alpha(alpha, n);
  const std::size_t d = dim_of(n);
  const double scale = 1.0 / static_cast<double>(d);
  std::vector<Amplitude> out(d * d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        // distinct i can share an index, so accumulate
        out[(k << (2 * n)) | ((j ^ i) << n) | j] +=
            sign_of(iverson_delta_raw(i, k)) * alpha[i] * scale;
      }
    }
  }
  return StateVector::from_amplitudes(std::move(out));
}

std::vector<StateVector> branches(std::span<const Amplitude> alpha,
                                  unsigned n) {
  require_alpha(alpha, n);
  const std::size_t d = dim_of(n);
  const double scale = 1.0 / static_cast<double>(d);
  std::vector<StateVector> out;
  out.reserve(d * d);
  for (std::size_t a = 0; a < d * d; ++a) {
    const std::size_t z = a >> n;
    const std::size_t x = a & (d - 1);
    std::vector<Amplitude> amps(d);
    for (std::size_t k = 0; k < d; ++k) {
      // (X^x Z^z psi)[k] = (-1)^{z . (k ^ x)} psi[k ^ x]
      const std::size_t src = k ^ x;
      amps[k] = sign_of(iverson_delta_raw(z, src)) * alpha[src] * scale;
    }
    out.push_back(StateVector::from_amplitudes(std::move(amps)));
  }
  return out;
}

StateVector reassemble(const std::vector<StateVector>& branch, unsigned n) {
  const std::size_t d = dim_of(n);
  if (branch.size() != d * d) {
    throw UsageError("reassemble: expected " + std::to_string(d * d) +
                     " branches");
  }
  std::vector<Amplitude> out(d * d * d);
  for (std::size_t a = 0; a < d * d; ++a) {
    if (branch[a].n_qubits() != n) {
      throw UsageError("reassemble: branch has the wrong qubit count");
    }
    for (std::size_t j = 0; j < d; ++j) out[(a << n) | j] = branch[a][j];
  }
  return StateVector::from_amplitudes(std::move(out));
}

std::span<const FixtureRow> single_qubit_rows() { return kSingleQubit; }

std::span<const FixtureRow> two_qubit_rows() { return kTwoQubit; }

StateVector from_fixture(std::span<const FixtureRow> rows,
                         std::span<const Amplitude> alpha, unsigned n) {
  require_alpha(alpha, n);
  const std::size_t d = dim_of(n);
  const double scale = 1.0 / static_cast<double>(d);
  std::vector<Amplitude> out(d * d * d);
  for (const FixtureRow& row : rows) {
    const std::size_t a = BitChain::parse(row.outcome).value();
    const auto terms = parse_terms(row, n);
    for (std::size_t t = 0; t < d; ++t) {
      out[(a << n) | terms[t].label] += terms[t].sign * alpha[t] * scale;
    }
  }
  return StateVector::from_amplitudes(std::move(out));
}

std::size_t matching_rows(std::span<const FixtureRow> rows,
                          const StateVector& pre,
                          std::span<const Amplitude> alpha, unsigned n,
                          double tol) {
  require_alpha(alpha, n);
  if (pre.n_qubits() != 3 * n) {
    throw UsageError("matching_rows: state is not a 3n-qubit register");
  }
  const std::size_t d = dim_of(n);
  const double scale = 1.0 / static_cast<double>(d);
  std::size_t matched = 0;
  for (const FixtureRow& row : rows) {
    const std::size_t a = BitChain::parse(row.outcome).value();
    const auto terms = parse_terms(row, n);
    std::vector<Amplitude> expected(d);
    for (std::size_t t = 0; t < d; ++t) {
      expected[terms[t].label] += terms[t].sign * alpha[t] * scale;
    }
    bool ok = true;
    for (std::size_t j = 0; j < d && ok; ++j) {
      ok = std::abs(pre[(a << n) | j] - expected[j]) <= tol;
    }
    if (ok) ++matched;
  }
  return matched;
}

}  // namespace qtele::oracle

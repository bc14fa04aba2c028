#include "qteleport/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "qteleport/errors.hpp"
#include "qteleport/gates.hpp"
#include "qteleport/oracle.hpp"
#include "qteleport/schedule.hpp"
#include "qteleport/teleport.hpp"

namespace qtele {

namespace {

// Stage slots; names index the report in this order.
enum Stage : std::size_t {
  kBell,
  kCnotLayer,
  kHadamardLayer,
  kOracleChain,
  kReassembly,
  kReplay,
  kOutcomeLaw,
  kHadamardClosedForm,
  kStageCount
};

constexpr const char* kStageNames[kStageCount] = {
    "bell pair vs closed form",
    "cnot layer vs closed form",
    "hadamard layer vs closed form",
    "closed form -> H layer -> closed form",
    "branch reassembly vs hadamard-layer form",
    "schedule replay vs pipeline",
    "outcome probability vs 4^-n",
    "hadamard closed form vs H layer",
};

struct InputResult {
  double stage[kStageCount] = {};
  std::size_t branches = 0;
  double branch_dev = 0.0;
  std::vector<bool> row_ok;
  std::string error;
};

InputResult check_input(const StateVector& psi, unsigned n,
                        std::size_t sample_branches, std::uint64_t branch_seed,
                        const Schedule& schedule) {
  InputResult r;
  const auto alpha = psi.amplitudes();
  const std::size_t outcomes = std::size_t{1} << (2 * n);

  StateVector reg = tensor(psi, prepare_generalized_bell(n));
  reg = alice_cnot_layer(reg, n);
  r.stage[kCnotLayer] =
      max_abs_deviation(reg, oracle::after_cnot_layer(alpha, n));

  const StateVector pre = alice_hadamard_layer(reg, n);
  const StateVector expected_pre = oracle::after_hadamard_layer(alpha, n);
  r.stage[kHadamardLayer] = max_abs_deviation(pre, expected_pre);

  r.stage[kOracleChain] = max_abs_deviation(
      hadamard_layer(oracle::after_cnot_layer(alpha, n), 1, n), expected_pre);

  const auto branch = oracle::branches(alpha, n);
  r.stage[kReassembly] =
      max_abs_deviation(oracle::reassemble(branch, n), expected_pre);

  StateVector initial = tensor(psi, StateVector(2 * n));
  r.stage[kReplay] = max_abs_deviation(replay(schedule, initial), pre);

  const auto dist = probabilities_of_subset(pre, alice_qubits(n));
  const double uniform = 1.0 / static_cast<double>(outcomes);
  for (double p : dist.probabilities) {
    r.stage[kOutcomeLaw] = std::max(r.stage[kOutcomeLaw], std::abs(p - uniform));
  }

  std::vector<std::uint64_t> chosen;
  if (sample_branches >= outcomes) {
    chosen.resize(outcomes);
    for (std::size_t a = 0; a < outcomes; ++a) chosen[a] = a;
  } else {
    Rng rng(branch_seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, outcomes - 1);
    for (std::size_t s = 0; s < sample_branches; ++s) chosen.push_back(pick(rng));
  }

  const double lift = static_cast<double>(std::size_t{1} << n);
  for (std::uint64_t a : chosen) {
    const BitChain bits(2 * n, a);
    const StateVector predicted = branch_state(bits, psi);
    double dev = max_abs_deviation(predicted, branch[a].scaled(lift));

    const Measurement m = collapse_to(pre, alice_qubits(n), bits);
    const StateVector bob_pre = trailing_given_prefix(m.collapsed, bits);
    dev = std::max(dev, max_abs_deviation(bob_pre, predicted));
    const StateVector bob_post =
        apply_pauli_correction_inverse(bob_pre, correction_for(bits), 1);
    dev = std::max(dev, max_abs_deviation(bob_post, psi));
    dev = std::max(dev, std::abs(m.outcome.probability - uniform));

    r.branch_dev = std::max(r.branch_dev, dev);
    ++r.branches;
  }

  std::span<const oracle::FixtureRow> rows;
  if (n == 1) rows = oracle::single_qubit_rows();
  if (n == 2) rows = oracle::two_qubit_rows();
  for (const auto& row : rows) {
    r.row_ok.push_back(oracle::matching_rows(std::span(&row, 1), pre, alpha, n,
                                             kVerifyTolerance) == 1);
  }
  return r;
}

}  // namespace

VerificationReport verify_protocol(unsigned n, std::size_t trials,
                                   std::uint64_t seed) {
  if (n == 0 || n > kMaxVerifyQubits) {
    throw UsageError("verify_protocol: n must be in 1.." +
                     std::to_string(kMaxVerifyQubits));
  }
  VerificationReport report;
  report.n = n;
  report.seed = seed;
  report.exhaustive = n <= kMaxExhaustiveQubits;

  std::vector<StateVector> inputs;
  if (report.exhaustive) {
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
      inputs.push_back(basis_state(BitChain(n, i)));
    }
  }
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) inputs.push_back(random_state(n, rng));

  const std::size_t sample =
      report.exhaustive ? (std::size_t{1} << (2 * n)) : kSampledBranches;
  const Schedule schedule = circuit_schedule(n);

  std::vector<InputResult> results(inputs.size());
  const auto count = static_cast<std::int64_t>(inputs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t idx = 0; idx < count; ++idx) {
    try {
      results[idx] = check_input(inputs[idx], n, sample,
                                 seed ^ (0x9e3779b97f4a7c15ull * (idx + 1)),
                                 schedule);
    } catch (const std::exception& e) {
      results[idx].error = e.what();
    }
  }

  double stage[kStageCount] = {};
  try {
    stage[kBell] = max_abs_deviation(prepare_generalized_bell(n),
                                     oracle::generalized_bell(n));
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
      const BitChain label(n, i);
      stage[kHadamardClosedForm] = std::max(
          stage[kHadamardClosedForm],
          max_abs_deviation(hadamard_closed_form(label),
                            hadamard_layer(basis_state(label), 1, n)));
    }
  } catch (const std::exception& e) {
    report.errors.push_back(std::string("global stages: ") + e.what());
  }

  std::vector<bool> rows_ok;
  for (std::size_t idx = 0; idx < results.size(); ++idx) {
    const InputResult& r = results[idx];
    if (!r.error.empty()) {
      report.errors.push_back("input " + std::to_string(idx) + ": " + r.error);
      continue;
    }
    for (std::size_t s = 0; s < kStageCount; ++s) {
      stage[s] = std::max(stage[s], r.stage[s]);
    }
    report.branches_checked += r.branches;
    report.max_branch_deviation =
        std::max(report.max_branch_deviation, r.branch_dev);
    if (rows_ok.empty()) rows_ok.assign(r.row_ok.size(), true);
    for (std::size_t k = 0; k < r.row_ok.size(); ++k) {
      rows_ok[k] = rows_ok[k] && r.row_ok[k];
    }
  }
  report.inputs_checked = inputs.size();

  bool ok = report.errors.empty();
  for (std::size_t s = 0; s < kStageCount; ++s) {
    report.stages.push_back({kStageNames[s], stage[s]});
    ok = ok && stage[s] < kVerifyTolerance;
  }
  ok = ok && report.max_branch_deviation < kVerifyTolerance;

  if (n <= 2) {
    FixtureTally tally;
    tally.name = n == 1 ? "eq4" : "eq19";
    tally.total = n == 1 ? oracle::single_qubit_rows().size()
                         : oracle::two_qubit_rows().size();
    tally.matched = static_cast<std::size_t>(
        std::count(rows_ok.begin(), rows_ok.end(), true));
    ok = ok && tally.matched == tally.total;
    report.fixtures = tally;
  }
  report.passed = ok;
  return report;
}

}  // namespace qtele

#include "qteleport/json_io.hpp"

#include "qteleport/errors.hpp"

namespace qtele {

using nlohmann::json;

json to_json(const StateVector& state) {
  json amps = json::array();
  for (const Amplitude& a : state.amplitudes()) {
    amps.push_back(json::array({a.real(), a.imag()}));
  }
  return json{{"n_qubits", state.n_qubits()}, {"amplitudes", std::move(amps)}};
}

StateVector state_from_json(const json& j) {
  try {
    const unsigned n = j.at("n_qubits").get<unsigned>();
    const json& arr = j.at("amplitudes");
    if (!arr.is_array()) throw UsageError("\"amplitudes\" must be an array");
    std::vector<Amplitude> amps;
    amps.reserve(arr.size());
    for (const json& pair : arr) {
      if (!pair.is_array() || pair.size() != 2) {
        throw UsageError("each amplitude must be a [re, im] pair");
      }
      amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    if (n >= 64 || amps.size() != (std::size_t{1} << n)) {
      throw UsageError("\"amplitudes\" length does not match n_qubits");
    }
    return StateVector::from_amplitudes(std::move(amps));
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed state JSON: ") + e.what());
  }
}

json to_json(const TeleportTrace& trace) {
  json j;
  j["n"] = trace.n;
  j["seed"] = trace.seed ? json(*trace.seed) : json(nullptr);
  j["outcome"] = trace.outcome.bits.to_string();
  j["probability"] = trace.outcome.probability;
  j["fidelity"] = trace.fidelity_to_input;
  j["max_deviation"] = trace.max_deviation_to_input;
  j["states"] = {
      {"input", to_json(trace.input_state)},
      {"bell", to_json(trace.bell_state)},
      {"pre_measurement", to_json(trace.pre_measurement_state)},
      {"bob_pre_correction", to_json(trace.bob_pre_correction)},
      {"bob_post_correction", to_json(trace.bob_post_correction)},
  };
  return j;
}

json to_json(const VerificationReport& report) {
  json stages = json::array();
  for (const auto& s : report.stages) {
    stages.push_back({{"name", s.name}, {"max_deviation", s.max_deviation}});
  }
  json j{{"n", report.n},
         {"seed", report.seed},
         {"exhaustive", report.exhaustive},
         {"inputs_checked", report.inputs_checked},
         {"stages", std::move(stages)},
         {"branches_checked", report.branches_checked},
         {"max_branch_deviation", report.max_branch_deviation},
         {"errors", report.errors},
         {"passed", report.passed}};
  if (report.fixtures) {
    j["fixtures"] = {{"name", report.fixtures->name},
                     {"matched", report.fixtures->matched},
                     {"total", report.fixtures->total}};
  }
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace qtele

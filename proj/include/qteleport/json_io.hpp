#pragma once

#include <string>

#include <json.hpp>

#include "qteleport/schedule.hpp"
#include "qteleport/state_vector.hpp"
#include "qteleport/teleport.hpp"
#include "qteleport/verify.hpp"

namespace qtele {

/// {"n_qubits": n, "amplitudes": [[re, im], ...]}, ascending index order.
nlohmann::json to_json(const StateVector& state);
/// Throws UsageError on malformed input.
StateVector state_from_json(const nlohmann::json& j);

/// {"n", "seed", "outcome": "0101", "probability", "fidelity",
///  "max_deviation", "states": {...}}
nlohmann::json to_json(const TeleportTrace& trace);

nlohmann::json to_json(const VerificationReport& report);

/// Pretty-printed with a trailing newline. Doubles are written in the
/// shortest form that parses back to the same value.
std::string dump(const nlohmann::json& j);

}  // namespace qtele

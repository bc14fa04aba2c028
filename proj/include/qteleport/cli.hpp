#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qteleport/state_vector.hpp"

namespace qtele::cli {

enum ExitCode : int {
  kOk = 0,
  kFailed = 1,       // fidelity or verification below threshold
  kIoError = 2,      // unreadable state file, unwritable output
  kNotNormalized = 3,
  kUsage = 64,
};

// |norm^2 - 1| beyond this rejects a user-supplied state.
inline constexpr double kInputNormTolerance = 1e-6;

/// Parses "re" / "re+imi" / "re-imi" / "imi" tokens separated by commas.
/// Returns nullopt if any token is not a number of that form.
std::optional<std::vector<Amplitude>> parse_amplitude_list(
    std::string_view text);

/// Runs the command line. Everything meant for the user goes to `out`;
/// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace qtele::cli

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gybe::cli {

enum ExitCode : int { kOk = 0, kResidualFailure = 1, kConfigError = 2 };

/// Inclusive grid "start:stop:steps"; steps >= 1.
std::vector<double> parse_a_range(const std::string& spec);

/// Accepts decimal literals and "inf" / "+inf" / "-inf".
double parse_parameter(const std::string& text);

/// Entry point of the `gybe` tool: subcommands coeffs, verify, states, sweep.
/// Output goes to `out` unless --out names a file; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gybe::cli

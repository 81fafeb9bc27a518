#pragma once

#include <iosfwd>

#include <json.hpp>

#include "birkhoff/obstruction.hpp"

namespace birkhoff {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitPass = 0,
  kExitUsage = 1,
  kExitDegenerate = 2,
  kExitFailVerdict = 3,
  kExitNumeric = 4,
};

/// {verdict, d, k, alpha, c, least_squares_c, singular, inflections, offending_point}.
/// Points are [[re, im] x 3] on the normalized representative.
nlohmann::ordered_json report_json(const ObstructionReport& report);

/// Runs `birkhoff <check|verify|simulate> ...`, writing results to `out` and
/// diagnostics to `err`. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace birkhoff

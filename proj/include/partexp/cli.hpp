#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure (or
// an internal arithmetic error), 2 usage or input error.

#include <iosfwd>
#include <string>
#include <vector>

#include "partexp/toeplitz.hpp"

namespace partexp {

struct CliHooks {
  /// Product kernel handed to exp/log and to `verify`. Tests replace it to
  /// inject faults; the shipped binary never does.
  BandProduct product = band_mul;
};

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const CliHooks& hooks = {});

}  // namespace partexp

// SPDX-License-Identifier: Apache-2.0
// Command-line front end. The binary in tools/ is a thin wrapper so tests
// can drive the CLI in-process.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qfcre {

// Runs one subcommand. `args` excludes the program name. Returns the
// process exit status: 0 success, 1 validation error, 2 numerical
// non-convergence. On failure nothing is written to `out` (or to the
// --output file); a one-line diagnostic goes to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace qfcre

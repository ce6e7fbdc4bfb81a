#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tropsem::cli {

/// Exit codes: 0 ok, 1 input error, 2 verification failure or oracle
/// mismatch, 3 resource cap hit.
enum ExitCode : int { kOk = 0, kInputError = 1, kVerification = 2, kResource = 3 };

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`; files named by --out/--csv are written
/// atomically.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropsem::cli

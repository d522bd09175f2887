#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace repbasis::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kPredicateFalse = 1,  ///< sidon: not a B_F[g] set; explain-t: rejected
    kInputError = 2,
    kSearchExhausted = 3,
    kCertificateViolation = 4,
};

/// Runs the command line with args[0] being the first subcommand token.
/// JSON payloads go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace repbasis::cli

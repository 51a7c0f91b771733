#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gradal::cli {

enum ExitCode : int {
    Ok = 0,
    UsageError = 2, // parse, type and argument errors
    HypothesisError = 3,
    CheckFailed = 4,
};

/// Runs one `gradal` invocation. Results go to `out` as JSON lines, errors to
/// `err` as a single JSON object.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace gradal::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skeline::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kIoError = 2,
    kInternalError = 3,
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shortest round-trip decimal, always with a fractional part ("0.0", "0.25").
std::string format_decimal(double v);

}  // namespace skeline::cli

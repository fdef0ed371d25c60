#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace noneuclid::cli {

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs the command line `args` (args[0] is the program name) and returns the
/// process exit code. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "2.5", "-1e-3", "pi", "pi/2", "2pi/3", "3*pi/4", "-pi/4". Plain
/// numbers are degrees when `degrees` is set; π-literals are always radians.
/// Throws std::invalid_argument on anything else.
double parse_angle(const std::string& text, bool degrees);

}  // namespace noneuclid::cli

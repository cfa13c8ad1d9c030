#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace capelli {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // hard mismatch, NotProportional, failed validation
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "a:b" into an inclusive window. Throws std::invalid_argument.
std::pair<int, int> parse_window(const std::string& text);

}  // namespace capelli

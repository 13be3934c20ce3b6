#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace lefschetz::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInvalidInput = 2;

/// Runs one subcommand. `args` excludes the program name. Results go to
/// `out`; diagnostics are a single line on `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Parses "1,3,6" into integers; rejects negatives and malformed entries.
std::vector<long long> parse_int_list(const std::string& text);

}  // namespace lefschetz::cli

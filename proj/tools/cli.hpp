#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace candy::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kClaimFailed = 2;
inline constexpr int kUsage = 64;

// Parses ring-size lists such as "3..8", "4,6,8" or "3..5,9".
// Throws candy::ParseError.
std::vector<std::size_t> parse_sizes(std::string_view text);

// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace candy::cli

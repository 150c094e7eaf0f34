#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace coupling::cli {

inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitInputError = 2;

/// Runs the command line `args` (without the program name). Returns the
/// process exit code: 0 verdict true / success, 1 verdict false, 2 usage or
/// input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// --limit if given, else $COUPLING_LAB_LIMIT, else the library default.
std::uint64_t resolve_limit(std::optional<std::uint64_t> flag);

/// Replays the two-state counterexample end to end. Returns 0 iff every
/// expected outcome holds.
int run_rosenthal_demo(std::ostream& out, bool json);

}  // namespace coupling::cli

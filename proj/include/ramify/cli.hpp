#pragma once

// Command-line front end. Exit codes: 0 success, 2 input error (the
// diagnostic names the offending token), 1 failed invariant or theorem check.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ramify::cli {

constexpr std::uint64_t kDefaultSeed = 20261016;

/// args excludes the program name. RAMIFY_SEED in the environment
/// overrides --seed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ramify::cli

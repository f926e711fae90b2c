#pragma once

#include <rotrem/checks.hpp>
#include <rotrem/triangle.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rotrem::cli {

enum class Format { json, csv, plain };

struct RunConfig {
    std::uint32_t m = 0;
    std::uint64_t row_cap = kDefaultRowCap;
    std::uint64_t digit_precision = 64;
    Format output_format = Format::plain;
    std::uint64_t seed = checks::kDefaultSeed;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;

/// Parses argv (argv[0] is the program name), runs one subcommand and writes
/// results to `out`, diagnostics to `err`. Returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

/// Same, with the arguments after the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace rotrem::cli

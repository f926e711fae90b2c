#pragma once

// Brute-force oracles and the acceptance suites built on them. Each suite
// recomputes its quantities independently of the closed forms where it can
// (direct queue simulation, circle elimination, exhaustive search).

#include <rotrem/triangle.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rotrem::checks {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2718;

struct SuiteConfig {
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t row_cap = kDefaultRowCap;
};

struct CheckResult {
    int id = 0;
    std::string name;
    std::string title;
    bool passed = false;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::string detail;  // first failure, or a short summary
};

/// Visits of the cell at (x, r) to columns 0..m-1, found by simulating T_m
/// with a queue of cell ids. r may exceed x - 1 (it is reduced mod x).
std::vector<std::pair<std::uint64_t, std::uint32_t>>
simulate_marked_cell(std::uint32_t m, std::uint64_t x, std::uint32_t r, std::size_t count);

/// Classic J_2(x) = 2l + 1 where x = 2^a + l, 0 <= l < 2^a.
std::uint64_t classic_j2(std::uint64_t x);

/// C(n, k) by Pascal's rule.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Suite names accepted by run_suite, in criterion order ("all" excluded).
const std::vector<std::string> &suite_names();

/// Runs criterion 1..11.
CheckResult run_criterion(int id, const SuiteConfig &config);

/// Runs a named suite, or every suite for "all". Throws Error(invalid_argument)
/// on an unknown name.
std::vector<CheckResult> run_suite(const std::string &name, const SuiteConfig &config);

} // namespace rotrem::checks

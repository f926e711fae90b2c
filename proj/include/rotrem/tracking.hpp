#pragma once

// Tracking a single cell of T_m through its visits to the first m columns.
//
// From a visit (x_n, r_n) the cell sits x_n + r_n places from the front one
// full cycle later, and every subsequent row moves it m places closer:
//
//     x_{n+1} = x_n + floor((x_n + r_n) / m)
//     r_{n+1} = x_n + r_n - m * floor((x_n + r_n) / m)
//
// equivalently (m+1) x_n + r_n = m x_{n+1} + r_{n+1}. The encoding
// y_n = (m+1) x_n + r_n evolves by y -> floor((m+1) y / m).

#include <rotrem/bigint.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rotrem {

struct TrackState {
    std::uint64_t n = 0;
    BigInt x;
    std::uint32_t r = 0;
    BigInt y;

    friend bool operator==(const TrackState &, const TrackState &) = default;
};

/// States 0..count-1 starting from (x, r). Requires m >= 1, x >= 1, r < m.
std::vector<TrackState> track(std::uint32_t m, const BigInt &x, std::uint32_t r, std::size_t count);

/// The column sequence r_0..r_{count-1}.
std::vector<std::uint32_t> column_sequence(std::uint32_t m, const BigInt &x, std::uint32_t r,
                                           std::size_t count);

/// y_0..y_{count-1} from the floor recurrence alone.
std::vector<BigInt> y_sequence(std::uint32_t m, const BigInt &x, std::uint32_t r, std::size_t count);

struct CongruenceWitness {
    bool holds = false;
    BigInt modulus;  // m^n
    BigInt lhs;      // (m+1)^n ((m+1)x + r) mod m^n
    BigInt rhs;      // sum_{k=1..n} (m+1)^{n-k} m^{k-1} r_k mod m^n
};

/// Checks (m+1)^n ((m+1)x + r) == sum_{k=1..n} (m+1)^{n-k} m^{k-1} r_k  (mod m^n).
CongruenceWitness verify_congruence(std::uint32_t m, const BigInt &x, std::uint32_t r,
                                    std::uint64_t n);

inline constexpr std::uint64_t kDefaultSearchBound = 10'000;

struct StartPosition {
    std::uint64_t x = 0;
    std::uint32_t r = 0;

    friend bool operator==(const StartPosition &, const StartPosition &) = default;
};

enum class TailMatchStatus { unique, not_found, ambiguous };

struct TailMatch {
    TailMatchStatus status = TailMatchStatus::not_found;
    /// Every start (x <= x_max) whose r_1..r_n equals the tail, in (x, r) order.
    std::vector<StartPosition> matches;

    std::optional<StartPosition> start() const {
        if (status != TailMatchStatus::unique) {
            return std::nullopt;
        }
        return matches.front();
    }
};

/// Searches starts (x', r') with 1 <= x' <= x_max whose digits r_1..r_n equal `tail`.
TailMatch reconstruct_from_tail(std::uint32_t m, std::span<const std::uint32_t> tail,
                                std::uint64_t x_max = kDefaultSearchBound);

struct PeriodWitnesses {
    std::size_t period = 0;
    /// witness[t] is the first n in [t, N-p) with seq[n+p] != seq[n], or nullopt
    /// when seq is p-periodic from t to the end of the window.
    std::vector<std::optional<std::size_t>> witness;
};

struct AperiodicityReport {
    std::size_t window = 0;
    std::size_t max_period = 0;
    std::vector<PeriodWitnesses> periods;
    bool periodic_tail_found = false;
    std::size_t periodic_period = 0;  // set when periodic_tail_found
    std::size_t periodic_start = 0;

    bool passed() const { return !periodic_tail_found; }
};

/// Scans seq[0..N) for a periodic tail with period p <= max_period. Tail starts
/// t range over [0, N - 2*max_period], so every examined tail spans at least
/// 2*max_period digits. Requires N >= 2*max_period and max_period >= 1.
AperiodicityReport scan_periodic_tails(std::span<const std::uint32_t> seq, std::size_t max_period);

/// scan_periodic_tails over r_0..r_{window-1} of the (x, r) track.
AperiodicityReport aperiodicity_check(std::uint32_t m, const BigInt &x, std::uint32_t r,
                                      std::size_t window, std::size_t max_period);

} // namespace rotrem

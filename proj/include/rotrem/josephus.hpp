#pragma once

// Negabinary digits, the m = 2 lead-row recurrence and Josephus games.

#include <rotrem/bigint.hpp>
#include <rotrem/triangle.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace rotrem {

/// Base -2 digits b_0..b_n (least significant first), b_n = 1; empty for 0.
struct NegaBinary {
    std::vector<std::uint8_t> bits;

    /// Most significant digit first, e.g. "11001" for 9; "0" for zero.
    std::string to_string() const;

    /// Length of the run of 1s starting at b_0.
    std::size_t trailing_ones() const;

    friend bool operator==(const NegaBinary &, const NegaBinary &) = default;
};

NegaBinary to_negabinary(const BigInt &x);
BigInt from_negabinary(const NegaBinary &digits);
/// Parses a most-significant-first 0/1 string.
NegaBinary parse_negabinary(const std::string &text);

/// x = 2^{k+1} s + (1 - (-2)^k)/3 with k the trailing run of 1s of x's negabinary form.
struct SKDecomposition {
    BigInt s;
    std::uint64_t k = 0;
};

/// Requires x >= 1.
SKDecomposition decompose_sk(const BigInt &x);

/// (1 - (-2)^k)/3
BigInt negabinary_ones(std::uint64_t k);

/// 3^{k+1} s + (1 - (-3)^k)/2 for the (s, k) decomposition of l.
BigInt l2_next(const BigInt &l);

enum class Verdict { holds, violated, not_applicable, inconclusive, equality };

const char *to_string(Verdict v) noexcept;

struct L2Step {
    std::uint64_t n = 0;  // 1-based index
    BigInt value;         // l_2(n)
    BigInt s;
    std::uint64_t k = 0;
    /// k <= ceil(log2 l) + 1, with equality iff s = 0.
    Verdict k_bound = Verdict::holds;
    /// l_2(n) < 8^{(log2 3)^{n-1} - 1}; for n = 1 both sides equal 1.
    Verdict super_exponential = Verdict::holds;
    /// l_2(n+1) < 27/8 l_2(n)^{log2 3}; report only.
    Verdict upper_27_8 = Verdict::holds;
    /// l_2(n+1) >= 9/4 l_2(n)^{log2 3}, checked only when s = 0; report only.
    Verdict lower_9_4 = Verdict::not_applicable;
};

/// Relative tolerance of the logarithm comparisons in l2_sequence.
inline constexpr double kLogTolerance = 1e-12;

/// l_2(1..n_max) from l_2(1) = 1 with per-step bound verdicts.
std::vector<L2Step> l2_sequence(std::uint64_t n_max);

struct JosephusTrace {
    std::uint32_t m = 0;
    std::uint64_t x = 0;
    std::vector<std::uint64_t> eliminated;  // columns, in elimination order
    std::uint64_t winner_column = 0;
    Cell winner_value = 0;
};

/// Leftward game on a row: start at column m-1 mod x (count 1), count left over
/// uncrossed cells, cross out the cell receiving count m+1, and restart the
/// count at the next uncrossed cell to its left.
JosephusTrace josephus_game(const TriangleRow &row);
JosephusTrace josephus_game(std::uint32_t m, std::uint64_t x);

/// Classical survivor J_n(x) of the circle 1..x, counting clockwise from 1.
/// Requires n >= 2 and x >= 1.
std::uint64_t josephus_survivor(std::uint64_t n, std::uint64_t x);

/// Elimination order for josephus_survivor, last entry is the survivor.
std::vector<std::uint64_t> josephus_order(std::uint64_t n, std::uint64_t x);

} // namespace rotrem

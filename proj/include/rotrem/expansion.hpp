#pragma once

// Rotation remainder expansions: digit streams s_0, s_1, ... in [0, m-1] with
// q = sum_k (m/(m+1))^k s_k in the m-adic metric.
//
// A stream built from a rational keeps the exact tail value a/b that the
// remaining digits represent, so it can be extended on demand:
//
//     s_n = a_n b^{-1} mod m,     a_{n+1} = (m+1)(a_n - s_n b)/m.
//
// Streams produced by arithmetic have no generator; equality between streams
// is only meaningful up to an explicit digit count.

#include <rotrem/bigint.hpp>
#include <rotrem/madic.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rotrem {

using Digit = std::uint32_t;

enum class StreamOrigin { from_rational, from_arithmetic, literal };

const char *to_string(StreamOrigin origin) noexcept;

class DigitStream {
  public:
    /// Literal digits; throws Error(invalid_argument) on a digit outside [0, m-1] or m < 2.
    static DigitStream literal(std::uint32_t m, std::vector<Digit> digits);

    std::uint32_t m() const noexcept { return m_; }
    std::size_t size() const noexcept { return digits_.size(); }
    std::span<const Digit> digits() const noexcept { return digits_; }
    Digit operator[](std::size_t k) const { return digits_[k]; }
    StreamOrigin origin() const noexcept { return origin_; }

    /// The rational this stream expands, for streams of origin from_rational.
    const std::optional<MadicRational> &source() const noexcept { return source_; }
    bool extendable() const noexcept { return generator_.has_value(); }

    /// Copy with at least n digits. Throws Error(insufficient_digits) when more
    /// digits are needed and the stream has no generator.
    DigitStream extended(std::size_t n) const;

    /// The first n digits; throws Error(insufficient_digits) if n > size() and not extendable.
    std::vector<Digit> prefix(std::size_t n) const;

    friend DigitStream digitize(const MadicRational &q, std::size_t n);
    friend DigitStream shift(const DigitStream &a);
    friend DigitStream unshift(const DigitStream &a);
    friend DigitStream arithmetic_result(std::uint32_t m, std::vector<Digit> digits);

  private:
    struct Generator {
        BigInt tail_num;  // remaining value is tail_num / den
        BigInt den;
        std::uint64_t den_inverse = 0;  // den^{-1} mod m
    };

    DigitStream(std::uint32_t m, StreamOrigin origin) : m_(m), origin_(origin) {}
    void generate(std::size_t n);

    std::uint32_t m_;
    StreamOrigin origin_;
    std::vector<Digit> digits_;
    std::optional<MadicRational> source_;
    std::optional<Generator> generator_;
};

/// Wraps digits produced by arithmetic (no generator).
DigitStream arithmetic_result(std::uint32_t m, std::vector<Digit> digits);

/// First n digits of R(q).
DigitStream digitize(const MadicRational &q, std::size_t n);

/// First n digits of the ordinary m-adic form q = sum_k m^k s_k.
std::vector<Digit> madic_digitize(const MadicRational &q, std::size_t n);

/// Exact partial sum sum_{k<n} (m/(m+1))^k s_k.
MadicRational partial_sum(std::uint32_t m, std::span<const Digit> digits);

struct CarryTrace {
    std::vector<BigInt> kappa;  // kappa_0 = 0, one entry per output digit
};

struct SumResult {
    DigitStream sum;
    CarryTrace carries;
};

/// Cumulative-carry sum of any number of streams (same m), n output digits:
/// s_k(sum) = (sum_i s_k(a_i) + kappa_k) mod m,
/// kappa_{k+1} = kappa_k + floor((sum_i s_k(a_i) + kappa_k) / m).
SumResult sum_streams(std::span<const DigitStream> addends, std::size_t n);

SumResult add(const DigitStream &a, const DigitStream &b, std::size_t n);

struct ProductResult {
    DigitStream product;
    std::vector<DigitStream> partial_products;  // s_j(b) * a shifted by j
    CarryTrace carries;                          // carries of the final summation
};

/// n digits of a*b by shift-and-add; needs n digits of each operand.
ProductResult multiply_traced(const DigitStream &a, const DigitStream &b, std::size_t n);
DigitStream multiply(const DigitStream &a, const DigitStream &b, std::size_t n);

/// d*a for a digit-sized scalar d, by repeated addition, n digits.
DigitStream scalar_multiple(const DigitStream &a, Digit d, std::size_t n);

/// Multiplication by m/(m+1): prepends a 0 digit.
DigitStream shift(const DigitStream &a);

/// Inverse of shift; throws Error(not_divisible) on a nonzero leading digit.
DigitStream unshift(const DigitStream &a);

/// Exact value of the stream preperiod, period, period, ...
MadicRational periodic_to_rational(std::uint32_t m, std::span<const Digit> preperiod,
                                   std::span<const Digit> period);

struct ExpansionTrackingWitness {
    bool holds = false;
    std::vector<Digit> expansion;  // digitize((m+1) y_0, n)
    std::vector<Digit> columns;    // r_1 .. r_n
};

/// Compares R((m+1) y_0(x, r)) with r_1, r_2, ... of the (x, r) track over n digits.
ExpansionTrackingWitness expansion_equals_tracking(std::uint32_t m, const BigInt &x,
                                                   std::uint32_t r, std::size_t n);

} // namespace rotrem

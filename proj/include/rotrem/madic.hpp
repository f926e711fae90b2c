#pragma once

// The ring D_m of rationals a/b with gcd(b, m) = 1, under the m-adic
// pseudo-norm |a/b|_m = m^{-k}, k the multiplicity of m in a. For composite m
// the norm is only sub-multiplicative.

#include <rotrem/bigint.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rotrem {

class MadicRational {
  public:
    /// Reduced a/b with positive denominator. Throws Error(not_in_ring) when the
    /// reduced denominator shares a factor with m, Error(invalid_argument) when
    /// den == 0 or m < 2.
    MadicRational(std::uint32_t m, const BigInt &num, const BigInt &den = 1);

    static MadicRational from_rational(std::uint32_t m, const BigRational &q);

    std::uint32_t m() const noexcept { return m_; }
    const BigInt &num() const noexcept { return num_; }
    const BigInt &den() const noexcept { return den_; }
    BigRational value() const;
    bool is_zero() const { return sgn(num_) == 0; }

    friend MadicRational operator+(const MadicRational &a, const MadicRational &b);
    friend MadicRational operator-(const MadicRational &a, const MadicRational &b);
    friend MadicRational operator*(const MadicRational &a, const MadicRational &b);
    MadicRational operator-() const;

    friend bool operator==(const MadicRational &a, const MadicRational &b) {
        return a.m_ == b.m_ && a.num_ == b.num_ && a.den_ == b.den_;
    }

  private:
    std::uint32_t m_;
    BigInt num_;
    BigInt den_;
};

MadicRational make_rational(std::uint32_t m, const BigInt &num, const BigInt &den = 1);

/// Parses "a/b" or "a" with an optional sign.
MadicRational parse_rational(std::uint32_t m, const std::string &text);

std::string to_string(const MadicRational &q);

struct Valuation {
    std::optional<std::uint64_t> k;  // nullopt encodes +infinity (q == 0)

    bool infinite() const { return !k.has_value(); }

    friend bool operator==(const Valuation &, const Valuation &) = default;
};

/// Multiplicity of m in an integer; nullopt for zero.
std::optional<std::uint64_t> multiplicity(const BigInt &a, std::uint32_t m);

Valuation valuation(const MadicRational &q);

/// Exact m^{-k}; 0 for q == 0.
BigRational norm(const MadicRational &q);

/// |p - q|_m. Throws Error(invalid_argument) on mixed m.
BigRational distance(const MadicRational &p, const MadicRational &q);

/// Hensel-style square-root sequence sigma_{n+1} = (c - sigma_n^2) inv + sigma_n,
/// inv = (2 sigma_1)^{-1} mod m. Terms are exact unless `modulus` is set, in
/// which case they are the least non-negative residues of the exact terms.
struct SqrtSequence {
    std::uint32_t m = 0;
    BigInt c;
    BigInt sigma1;
    std::uint64_t inv = 0;
    std::vector<BigInt> terms;  // sigma_1 .. sigma_n
    std::optional<BigInt> modulus;
};

/// Exact terms have roughly 2^n digits; beyond this count use sqrt_sequence_mod.
inline constexpr std::size_t kMaxExactSqrtTerms = 26;

/// Requires m odd >= 3, gcd(c, m) = 1 and sigma1^2 == c (mod m).
SqrtSequence sqrt_sequence(std::uint32_t m, const BigInt &c, const BigInt &sigma1,
                           std::size_t n_terms);

/// Same recurrence computed modulo m^precision.
SqrtSequence sqrt_sequence_mod(std::uint32_t m, const BigInt &c, const BigInt &sigma1,
                               std::size_t n_terms, std::uint64_t precision);

} // namespace rotrem

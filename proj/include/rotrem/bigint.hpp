#pragma once

// Arbitrary-precision integer and rational types used throughout rotrem.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace rotrem {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// base^exp for a machine-size base.
BigInt pow(std::uint64_t base, std::uint64_t exp);

/// Least non-negative residue of a modulo a positive modulus.
BigInt mod(const BigInt &a, const BigInt &modulus);
std::uint64_t mod(const BigInt &a, std::uint64_t modulus);

/// Floor division (rounds toward negative infinity).
BigInt floor_div(const BigInt &a, const BigInt &b);

/// Inverse of a modulo m in [0, m), or 0 when gcd(a, m) != 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

std::string to_string(const BigInt &value);
std::string to_string(const BigRational &value);

/// Parses a decimal integer with optional sign. Throws Error on malformed input.
BigInt parse_integer(std::string_view text);

/// Number of bits needed to represent |value|; 0 for zero.
std::uint64_t bit_length(const BigInt &value);

/// ceil(log2(value)) for value >= 1.
std::uint64_t ceil_log2(const BigInt &value);

/// log2(|value|) for value != 0, accurate to double precision for any size.
double log2_abs(const BigInt &value);

bool fits_u64(const BigInt &value);
std::uint64_t to_u64(const BigInt &value);
BigInt from_u64(std::uint64_t value);

} // namespace rotrem

#include <rotrem/bigint.hpp>
#include <rotrem/error.hpp>

#include <cmath>
#include <limits>

namespace rotrem {

const char *to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::invalid_argument:
        return "invalid-argument";
    case ErrorKind::not_in_ring:
        return "not-in-D_m";
    case ErrorKind::invalid_seed:
        return "invalid-seed";
    case ErrorKind::unsupported:
        return "unsupported";
    case ErrorKind::insufficient_digits:
        return "insufficient-digits";
    case ErrorKind::not_divisible:
        return "not-divisible";
    case ErrorKind::internal_invariant:
        return "internal-invariant-violation";
    case ErrorKind::overflow:
        return "overflow";
    case ErrorKind::cap_reached:
        return "cap-reached";
    case ErrorKind::parse_error:
        return "parse-error";
    }
    return "unknown";
}

BigInt pow(std::uint64_t base, std::uint64_t exp) {
    BigInt result;
    mpz_ui_pow_ui(result.get_mpz_t(), base, exp);
    return result;
}

BigInt mod(const BigInt &a, const BigInt &modulus) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

std::uint64_t mod(const BigInt &a, std::uint64_t modulus) {
    return mpz_fdiv_ui(a.get_mpz_t(), modulus);
}

BigInt floor_div(const BigInt &a, const BigInt &b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    if (m == 1) {
        return 0;
    }
    BigInt inv;
    BigInt aa = from_u64(a % m);
    BigInt mm = from_u64(m);
    if (mpz_invert(inv.get_mpz_t(), aa.get_mpz_t(), mm.get_mpz_t()) == 0) {
        return 0;
    }
    return to_u64(inv);
}

std::string to_string(const BigInt &value) { return value.get_str(10); }

std::string to_string(const BigRational &value) { return value.get_str(10); }

BigInt parse_integer(std::string_view text) {
    std::string s(text);
    if (!s.empty() && s.front() == '+') {
        s.erase(0, 1);
    }
    const std::size_t digits_from = (!s.empty() && s.front() == '-') ? 1 : 0;
    if (s.size() == digits_from) {
        fail(ErrorKind::parse_error, "expected an integer, got '" + std::string(text) + "'");
    }
    for (std::size_t i = digits_from; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') {
            fail(ErrorKind::parse_error, "expected an integer, got '" + std::string(text) + "'");
        }
    }
    return BigInt(s, 10);
}

std::uint64_t bit_length(const BigInt &value) {
    if (sgn(value) == 0) {
        return 0;
    }
    return mpz_sizeinbase(value.get_mpz_t(), 2);
}

std::uint64_t ceil_log2(const BigInt &value) {
    if (sgn(value) <= 0) {
        fail(ErrorKind::invalid_argument, "ceil_log2 needs a positive argument");
    }
    // smallest c with 2^c >= value is the bit length of value - 1
    return bit_length(BigInt(value - 1));
}

double log2_abs(const BigInt &value) {
    long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
    return std::log2(std::fabs(mantissa)) + static_cast<double>(exponent);
}

bool fits_u64(const BigInt &value) {
    return sgn(value) >= 0 && mpz_sizeinbase(value.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const BigInt &value) {
    if (!fits_u64(value)) {
        fail(ErrorKind::overflow, "value " + to_string(value) + " does not fit in 64 bits");
    }
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value.get_mpz_t());
    return out;
}

BigInt from_u64(std::uint64_t value) {
    BigInt out;
    mpz_import(out.get_mpz_t(), 1, -1, sizeof(value), 0, 0, &value);
    return out;
}

} // namespace rotrem

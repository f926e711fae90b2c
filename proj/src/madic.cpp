#include <rotrem/error.hpp>
#include <rotrem/madic.hpp>

#include <string>

namespace rotrem {

namespace {

void require_same_m(const MadicRational &a, const MadicRational &b) {
    if (a.m() != b.m()) {
        fail(ErrorKind::invalid_argument, "mixed bases m=" + std::to_string(a.m()) + " and m=" +
                                              std::to_string(b.m()));
    }
}

void require_sqrt_inputs(std::uint32_t m, const BigInt &c, const BigInt &sigma1) {
    if (m < 3 || m % 2 == 0) {
        fail(ErrorKind::unsupported, "square-root sequences need odd m >= 3, got m=" +
                                         std::to_string(m));
    }
    BigInt g;
    BigInt mm = m;
    mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), mm.get_mpz_t());
    if (g != 1) {
        fail(ErrorKind::invalid_seed, "c=" + to_string(c) + " is not coprime to m=" + std::to_string(m));
    }
    if (mod(BigInt(sigma1 * sigma1 - c), mm) != 0) {
        fail(ErrorKind::invalid_seed, "sigma1=" + to_string(sigma1) + " is not a square root of c=" +
                                          to_string(c) + " mod " + std::to_string(m));
    }
}

} // namespace

MadicRational::MadicRational(std::uint32_t m, const BigInt &num, const BigInt &den)
    : m_(m), num_(num), den_(den) {
    if (m < 2) {
        fail(ErrorKind::invalid_argument, "D_m needs m >= 2");
    }
    if (sgn(den_) == 0) {
        fail(ErrorKind::invalid_argument, "zero denominator");
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    num_ /= g;
    den_ /= g;
    if (sgn(den_) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt mm = m;
    mpz_gcd(g.get_mpz_t(), den_.get_mpz_t(), mm.get_mpz_t());
    if (g != 1) {
        fail(ErrorKind::not_in_ring, to_string(num_) + "/" + to_string(den_) +
                                         " has a denominator sharing a factor with m=" +
                                         std::to_string(m));
    }
}

MadicRational MadicRational::from_rational(std::uint32_t m, const BigRational &q) {
    return MadicRational(m, q.get_num(), q.get_den());
}

BigRational MadicRational::value() const {
    BigRational q(num_, den_);
    q.canonicalize();
    return q;
}

MadicRational operator+(const MadicRational &a, const MadicRational &b) {
    require_same_m(a, b);
    return MadicRational(a.m_, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

MadicRational operator-(const MadicRational &a, const MadicRational &b) {
    require_same_m(a, b);
    return MadicRational(a.m_, a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

MadicRational operator*(const MadicRational &a, const MadicRational &b) {
    require_same_m(a, b);
    return MadicRational(a.m_, a.num_ * b.num_, a.den_ * b.den_);
}

MadicRational MadicRational::operator-() const { return MadicRational(m_, -num_, den_); }

MadicRational make_rational(std::uint32_t m, const BigInt &num, const BigInt &den) {
    return MadicRational(m, num, den);
}

MadicRational parse_rational(std::uint32_t m, const std::string &text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        return MadicRational(m, parse_integer(text));
    }
    const std::string den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
        fail(ErrorKind::parse_error, "malformed rational '" + text + "', expected num/den");
    }
    return MadicRational(m, parse_integer(text.substr(0, slash)), parse_integer(den_text));
}

std::string to_string(const MadicRational &q) {
    if (q.den() == 1) {
        return to_string(q.num());
    }
    return to_string(q.num()) + "/" + to_string(q.den());
}

std::optional<std::uint64_t> multiplicity(const BigInt &a, std::uint32_t m) {
    if (m < 2) {
        fail(ErrorKind::invalid_argument, "multiplicity needs m >= 2");
    }
    if (sgn(a) == 0) {
        return std::nullopt;
    }
    BigInt rest = abs(a);
    std::uint64_t k = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), m) != 0) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), m);
        ++k;
    }
    return k;
}

Valuation valuation(const MadicRational &q) { return Valuation{multiplicity(q.num(), q.m())}; }

BigRational norm(const MadicRational &q) {
    const Valuation v = valuation(q);
    if (v.infinite()) {
        return BigRational(0);
    }
    BigRational out(BigInt(1), pow(q.m(), *v.k));
    out.canonicalize();
    return out;
}

BigRational distance(const MadicRational &p, const MadicRational &q) {
    require_same_m(p, q);
    return norm(p - q);
}

SqrtSequence sqrt_sequence(std::uint32_t m, const BigInt &c, const BigInt &sigma1,
                           std::size_t n_terms) {
    require_sqrt_inputs(m, c, sigma1);
    if (n_terms > kMaxExactSqrtTerms) {
        fail(ErrorKind::invalid_argument,
             "exact square-root terms double in length each step; at most " +
                 std::to_string(kMaxExactSqrtTerms) + " terms, use the modular form beyond");
    }
    SqrtSequence seq;
    seq.m = m;
    seq.c = c;
    seq.sigma1 = sigma1;
    seq.inv = inverse_mod(mod(BigInt(2 * sigma1), std::uint64_t{m}), m);
    BigInt sigma = sigma1;
    for (std::size_t n = 0; n < n_terms; ++n) {
        if (n > 0) {
            sigma = (c - sigma * sigma) * seq.inv + sigma;
        }
        seq.terms.push_back(sigma);
    }
    return seq;
}

SqrtSequence sqrt_sequence_mod(std::uint32_t m, const BigInt &c, const BigInt &sigma1,
                               std::size_t n_terms, std::uint64_t precision) {
    require_sqrt_inputs(m, c, sigma1);
    if (precision == 0) {
        fail(ErrorKind::invalid_argument, "precision must be at least 1");
    }
    SqrtSequence seq;
    seq.m = m;
    seq.c = c;
    seq.sigma1 = sigma1;
    seq.inv = inverse_mod(mod(BigInt(2 * sigma1), std::uint64_t{m}), m);
    seq.modulus = pow(m, precision);
    const BigInt &modulus = *seq.modulus;
    BigInt sigma = mod(sigma1, modulus);
    for (std::size_t n = 0; n < n_terms; ++n) {
        if (n > 0) {
            sigma = mod(BigInt((c - sigma * sigma) * seq.inv + sigma), modulus);
        }
        seq.terms.push_back(sigma);
    }
    return seq;
}

} // namespace rotrem

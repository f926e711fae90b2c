#include <rotrem/error.hpp>
#include <rotrem/expansion.hpp>
#include <rotrem/tracking.hpp>

#include <string>

namespace rotrem {

const char *to_string(StreamOrigin origin) noexcept {
    switch (origin) {
    case StreamOrigin::from_rational:
        return "from-rational";
    case StreamOrigin::from_arithmetic:
        return "from-arithmetic";
    case StreamOrigin::literal:
        return "literal";
    }
    return "unknown";
}

DigitStream DigitStream::literal(std::uint32_t m, std::vector<Digit> digits) {
    if (m < 2) {
        fail(ErrorKind::invalid_argument, "digit streams need m >= 2");
    }
    for (Digit d : digits) {
        if (d >= m) {
            fail(ErrorKind::invalid_argument,
                 "digit " + std::to_string(d) + " out of range for m=" + std::to_string(m));
        }
    }
    DigitStream out(m, StreamOrigin::literal);
    out.digits_ = std::move(digits);
    return out;
}

DigitStream arithmetic_result(std::uint32_t m, std::vector<Digit> digits) {
    DigitStream out(m, StreamOrigin::from_arithmetic);
    out.digits_ = std::move(digits);
    return out;
}

void DigitStream::generate(std::size_t n) {
    Generator &g = *generator_;
    const std::uint32_t m = m_;
    BigInt scratch;
    digits_.reserve(n);
    while (digits_.size() < n) {
        const std::uint64_t residue = mod(g.tail_num, std::uint64_t{m});
        const auto s = static_cast<Digit>((residue * g.den_inverse) % m);
        digits_.push_back(s);
        // a <- (m+1)(a - s b)/m; the subtraction is exact modulo m by choice of s
        scratch = g.den * s;
        g.tail_num -= scratch;
        mpz_divexact_ui(g.tail_num.get_mpz_t(), g.tail_num.get_mpz_t(), m);
        g.tail_num *= m + 1;
    }
}

DigitStream DigitStream::extended(std::size_t n) const {
    if (n <= digits_.size()) {
        return *this;
    }
    if (!generator_) {
        fail(ErrorKind::insufficient_digits, "stream has " + std::to_string(digits_.size()) +
                                                 " digits and no generator, " + std::to_string(n) +
                                                 " needed");
    }
    DigitStream out = *this;
    out.generate(n);
    return out;
}

std::vector<Digit> DigitStream::prefix(std::size_t n) const {
    if (n <= digits_.size()) {
        return std::vector<Digit>(digits_.begin(), digits_.begin() + static_cast<std::ptrdiff_t>(n));
    }
    return extended(n).digits_;
}

DigitStream digitize(const MadicRational &q, std::size_t n) {
    DigitStream out(q.m(), StreamOrigin::from_rational);
    out.source_ = q;
    const std::uint64_t inv = inverse_mod(mod(q.den(), std::uint64_t{q.m()}), q.m());
    out.generator_ = DigitStream::Generator{q.num(), q.den(), inv};
    out.generate(n);
    return out;
}

std::vector<Digit> madic_digitize(const MadicRational &q, std::size_t n) {
    const std::uint32_t m = q.m();
    const std::uint64_t inv = inverse_mod(mod(q.den(), std::uint64_t{m}), m);
    BigInt a = q.num();
    BigInt scratch;
    std::vector<Digit> out;
    out.reserve(n);
    while (out.size() < n) {
        const auto s = static_cast<Digit>((mod(a, std::uint64_t{m}) * inv) % m);
        out.push_back(s);
        scratch = q.den() * s;
        a -= scratch;
        mpz_divexact_ui(a.get_mpz_t(), a.get_mpz_t(), m);
    }
    return out;
}

MadicRational partial_sum(std::uint32_t m, std::span<const Digit> digits) {
    // sum_{k<n} m^k (m+1)^{n-1-k} s_k / (m+1)^{n-1}, Horner in the numerator
    BigInt num = 0;
    BigInt m_pow = 1;
    for (Digit s : digits) {
        num *= m + 1;
        num += m_pow * s;
        m_pow *= m;
    }
    const BigInt den = digits.empty() ? BigInt(1) : pow(m + 1, digits.size() - 1);
    return MadicRational(m, num, den);
}

SumResult sum_streams(std::span<const DigitStream> addends, std::size_t n) {
    if (addends.empty()) {
        fail(ErrorKind::invalid_argument, "sum of zero streams");
    }
    const std::uint32_t m = addends.front().m();
    std::vector<DigitStream> inputs;
    inputs.reserve(addends.size());
    for (const DigitStream &a : addends) {
        if (a.m() != m) {
            fail(ErrorKind::invalid_argument, "mixed bases in stream sum");
        }
        inputs.push_back(a.extended(n));
    }

    std::vector<Digit> digits;
    digits.reserve(n);
    CarryTrace trace;
    trace.kappa.reserve(n);
    BigInt kappa = 0;
    BigInt column;
    for (std::size_t k = 0; k < n; ++k) {
        trace.kappa.push_back(kappa);
        std::uint64_t digit_sum = 0;
        for (const DigitStream &a : inputs) {
            digit_sum += a[k];
        }
        column = kappa + digit_sum;
        const std::uint64_t rem = mpz_fdiv_q_ui(column.get_mpz_t(), column.get_mpz_t(), m);
        digits.push_back(static_cast<Digit>(rem));
        kappa += column;
    }
    return SumResult{arithmetic_result(m, std::move(digits)), std::move(trace)};
}

SumResult add(const DigitStream &a, const DigitStream &b, std::size_t n) {
    const DigitStream pair[] = {a, b};
    return sum_streams(pair, n);
}

DigitStream scalar_multiple(const DigitStream &a, Digit d, std::size_t n) {
    if (d >= a.m()) {
        fail(ErrorKind::invalid_argument, "scalar " + std::to_string(d) + " is not a digit");
    }
    if (d == 0) {
        return arithmetic_result(a.m(), std::vector<Digit>(n, 0));
    }
    DigitStream base = a.extended(n);
    DigitStream acc = arithmetic_result(a.m(), base.prefix(n));
    for (Digit i = 1; i < d; ++i) {
        acc = add(acc, base, n).sum;
    }
    return acc;
}

ProductResult multiply_traced(const DigitStream &a, const DigitStream &b, std::size_t n) {
    if (a.m() != b.m()) {
        fail(ErrorKind::invalid_argument, "mixed bases in stream product");
    }
    const std::uint32_t m = a.m();
    const DigitStream lhs = a.extended(n);
    const DigitStream rhs = b.extended(n);

    // Digit k of the product needs digits 0..k of every partial product, and
    // partial product j is s_j(b) * a shifted by j, so n digits of a and b suffice.
    std::vector<DigitStream> partials;
    partials.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        const DigitStream scaled = scalar_multiple(lhs, rhs[j], n - j);
        std::vector<Digit> digits(j, 0);
        const auto body = scaled.digits();
        digits.insert(digits.end(), body.begin(), body.end());
        partials.push_back(arithmetic_result(m, std::move(digits)));
    }
    if (partials.empty()) {
        return ProductResult{arithmetic_result(m, {}), {}, {}};
    }
    SumResult total = sum_streams(partials, n);
    return ProductResult{std::move(total.sum), std::move(partials), std::move(total.carries)};
}

DigitStream multiply(const DigitStream &a, const DigitStream &b, std::size_t n) {
    return multiply_traced(a, b, n).product;
}

DigitStream shift(const DigitStream &a) {
    DigitStream out = a;
    out.digits_.insert(out.digits_.begin(), 0);
    // the tail after the last digit is unchanged, so the generator carries over
    if (a.source_) {
        const std::uint32_t m = a.m();
        out.source_ = MadicRational(m, a.source_->num() * m, a.source_->den() * (m + 1));
    }
    return out;
}

DigitStream unshift(const DigitStream &a) {
    if (a.digits_.empty()) {
        fail(ErrorKind::insufficient_digits, "cannot unshift an empty stream");
    }
    if (a.digits_.front() != 0) {
        fail(ErrorKind::not_divisible, "leading digit " + std::to_string(a.digits_.front()) +
                                           " is not 0; stream is not divisible by m/(m+1)");
    }
    DigitStream out = a;
    out.digits_.erase(out.digits_.begin());
    if (a.source_) {
        const std::uint32_t m = a.m();
        out.source_ = MadicRational(m, a.source_->num() * (m + 1), a.source_->den() * m);
    }
    return out;
}

MadicRational periodic_to_rational(std::uint32_t m, std::span<const Digit> preperiod,
                                   std::span<const Digit> period) {
    if (m < 2) {
        fail(ErrorKind::invalid_argument, "periodic_to_rational needs m >= 2");
    }
    if (period.empty()) {
        fail(ErrorKind::invalid_argument, "period must be nonempty");
    }
    for (auto block : {preperiod, period}) {
        for (Digit d : block) {
            if (d >= m) {
                fail(ErrorKind::invalid_argument,
                     "digit " + std::to_string(d) + " out of range for m=" + std::to_string(m));
            }
        }
    }
    const BigRational base(BigInt(m), BigInt(m + 1));
    auto block_value = [&](std::span<const Digit> block) {
        BigRational sum = 0;
        BigRational power = 1;
        for (Digit d : block) {
            sum += power * d;
            power *= base;
        }
        return std::pair{sum, power};
    };
    const auto [pre_value, pre_scale] = block_value(preperiod);
    const auto [period_value, period_scale] = block_value(period);
    // (m+1)^p - m^p == 1 (mod m), so 1 - (m/(m+1))^p stays invertible in D_m
    BigRational value = pre_value + pre_scale * period_value / (BigRational(1) - period_scale);
    value.canonicalize();
    return MadicRational::from_rational(m, value);
}

ExpansionTrackingWitness expansion_equals_tracking(std::uint32_t m, const BigInt &x,
                                                   std::uint32_t r, std::size_t n) {
    ExpansionTrackingWitness w;
    const auto columns = column_sequence(m, x, r, n + 1);
    w.columns.assign(columns.begin() + 1, columns.end());
    const BigInt y0 = (m + 1) * x + r;
    w.expansion = digitize(MadicRational(m, (m + 1) * y0), n).prefix(n);
    w.holds = w.expansion == w.columns;
    return w;
}

} // namespace rotrem

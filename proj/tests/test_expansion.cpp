#include <rotrem/error.hpp>
#include <rotrem/expansion.hpp>
#include <rotrem/tracking.hpp>

#include <doctest.h>

#include <numeric>
#include <random>

using namespace rotrem;

namespace {

template <class F> ErrorKind kind_of(F &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::internal_invariant;
}

using Digits = std::vector<Digit>;

Digits R(std::uint32_t m, long a, long b, std::size_t n) {
    return digitize(make_rational(m, a, b), n).prefix(n);
}

Digits R(std::uint32_t m, long a, std::size_t n) { return R(m, a, 1, n); }

std::vector<BigInt> big(std::initializer_list<long> xs) {
    return {xs.begin(), xs.end()};
}

} // namespace

TEST_CASE("digits of small rationals for m=3") {
    CHECK(R(3, 16, 12) == Digits{1, 2, 0, 2, 1, 1, 2, 1, 2, 2, 2, 0});
    CHECK(R(3, 1, 6) == Digits{1, 0, 0, 0, 0, 0});
    CHECK(R(3, 0, 6) == Digits(6, 0));
    CHECK(R(3, 4, 8) == Digits(8, 1));
    CHECK(R(3, 8, 8) == Digits(8, 2));
    CHECK(R(3, 9, 13) == Digits{0, 0, 1, 2, 0, 2, 1, 1, 2, 1, 2, 2, 2});
    CHECK(R(3, -1, 13) == Digits{2, 2, 1, 0, 2, 0, 1, 1, 0, 1, 0, 0, 0});
    CHECK(R(3, 1, 2, 8) == Digits{2, 1, 2, 1, 0, 2, 0, 1});
}

TEST_CASE("leading zeros match the valuation") {
    const Digits d = R(3, 27, 2, 8);
    CHECK(d == Digits{0, 0, 0, 2, 1, 1, 2, 1});
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const auto m = static_cast<std::uint32_t>(2 + rng() % 8);
        const long a = static_cast<long>(rng() % 5000) + 1;
        const auto q = make_rational(m, a * static_cast<long>(rng() % 2 ? m : 1));
        const auto k = *valuation(q).k;
        const Digits digits = digitize(q, k + 1).prefix(k + 1);
        for (std::size_t j = 0; j < k; ++j) {
            REQUIRE(digits[j] == 0);
        }
        REQUIRE(digits[k] != 0);
    }
}

TEST_CASE("ordinary m-adic digits") {
    CHECK(madic_digitize(make_rational(3, 16), 8) == Digits{1, 2, 1, 0, 0, 0, 0, 0});
    CHECK(madic_digitize(make_rational(3, -1), 6) == Digits(6, 2));
    CHECK(madic_digitize(make_rational(3, 1, 2), 6) == Digits{2, 1, 1, 1, 1, 1});
}

TEST_CASE("partial sums approach the value") {
    for (std::uint32_t m = 2; m <= 6; ++m) {
        const auto q = make_rational(m, 17, static_cast<long>(m) + 1);
        for (std::size_t n = 1; n <= 25; ++n) {
            const auto s = digitize(q, n);
            const auto gap = distance(partial_sum(m, s.digits()), q);
            CHECK(gap <= BigRational(BigInt(1), rotrem::pow(m, n)));
        }
    }
}

TEST_CASE("streams extend on demand when they carry a generator") {
    const DigitStream s = digitize(make_rational(3, 16), 4);
    CHECK(s.origin() == StreamOrigin::from_rational);
    CHECK(s.source()->value() == 16);
    CHECK(s.extendable());
    CHECK(s.extended(12).prefix(12) == R(3, 16, 12));
    CHECK(s.prefix(12) == R(3, 16, 12));

    const DigitStream lit = DigitStream::literal(3, {1, 2, 0});
    CHECK(lit.origin() == StreamOrigin::literal);
    CHECK_FALSE(lit.extendable());
    CHECK(kind_of([&] { (void)lit.extended(4); }) == ErrorKind::insufficient_digits);
    CHECK(kind_of([&] { (void)lit.prefix(5); }) == ErrorKind::insufficient_digits);
    CHECK(kind_of([] { DigitStream::literal(3, {3}); }) == ErrorKind::invalid_argument);
    CHECK(kind_of([] { DigitStream::literal(1, {0}); }) == ErrorKind::invalid_argument);
}

TEST_CASE("addition with cumulative carries") {
    const auto a = digitize(make_rational(3, 1), 13);
    const auto b = digitize(make_rational(3, 8), 13);
    const SumResult s = add(a, b, 13);
    CHECK(s.sum.prefix(13) == R(3, 9, 13));
    CHECK(s.carries.kappa == big({0, 1, 2, 3, 4, 6, 8, 11, 15, 20, 27, 36, 48}));
    CHECK(s.sum.origin() == StreamOrigin::from_arithmetic);

    const auto nine = digitize(make_rational(3, 9), 13);
    const SumResult t = add(nine, nine, 13);
    CHECK(t.sum.prefix(13) == R(3, 18, 13));
    CHECK(t.carries.kappa == big({0, 0, 0, 0, 1, 1, 2, 3, 4, 6, 8, 12, 17}));

    const auto x = DigitStream::literal(3, {1, 1, 1, 0, 2, 0, 1, 2, 0, 0, 0, 2, 0});
    const auto y = DigitStream::literal(3, {1, 1, 0, 2, 2, 1, 2, 1, 2, 1, 2, 2, 2});
    const SumResult u = add(x, y, 13);
    CHECK(u.sum.prefix(13) == Digits{2, 2, 1, 2, 1, 2, 1, 2, 2, 2, 1, 2, 0});
    CHECK(u.carries.kappa == big({0, 0, 0, 0, 0, 1, 1, 2, 3, 4, 5, 7, 10}));

    CHECK(add(digitize(make_rational(3, 34), 20), digitize(make_rational(3, 25), 20), 20).sum.prefix(20) ==
          R(3, 59, 20));
}

TEST_CASE("carry recurrence holds digit by digit") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        const auto m = static_cast<std::uint32_t>(2 + rng() % 7);
        Digits da, db;
        for (int k = 0; k < 30; ++k) {
            da.push_back(static_cast<Digit>(rng() % m));
            db.push_back(static_cast<Digit>(rng() % m));
        }
        const SumResult s = add(DigitStream::literal(m, da), DigitStream::literal(m, db), 30);
        REQUIRE(s.carries.kappa.size() == 30);
        CHECK(s.carries.kappa[0] == 0);
        for (std::size_t k = 0; k < 30; ++k) {
            const BigInt total = BigInt(da[k] + db[k]) + s.carries.kappa[k];
            CHECK(s.sum[k] == mod(total, m));
            if (k + 1 < 30) {
                CHECK(s.carries.kappa[k + 1] == s.carries.kappa[k] + floor_div(total, m));
            }
        }
    }
}

TEST_CASE("multiplication by shift-and-add") {
    const auto a = digitize(make_rational(3, 9), 13);
    const auto b = digitize(make_rational(3, 11), 13);
    const ProductResult p = multiply_traced(a, b, 13);
    CHECK(p.product.prefix(13) == R(3, 99, 13));
    CHECK(p.carries.kappa == big({0, 0, 0, 0, 0, 0, 2, 3, 6, 10, 16, 24, 35}));
    CHECK(p.partial_products.size() == 13);

    const auto four = digitize(make_rational(3, 4), 20);
    CHECK(multiply(four, four, 20).prefix(20) == R(3, 16, 20));
    CHECK(scalar_multiple(four, 2, 20).prefix(20) == R(3, 8, 20));
    CHECK(kind_of([&] { scalar_multiple(four, 3, 20); }) == ErrorKind::invalid_argument);
}

TEST_CASE("digitizing is a ring homomorphism") {
    std::mt19937_64 rng(2024);
    constexpr std::size_t n = 24;
    for (int i = 0; i < 200; ++i) {
        const auto m = static_cast<std::uint32_t>(2 + rng() % 8);
        auto draw = [&] {
            long b = 1;
            if (rng() % 2) {
                do {
                    b = 1 + static_cast<long>(rng() % 40);
                } while (std::gcd(static_cast<std::uint64_t>(b), std::uint64_t{m}) != 1);
            }
            return make_rational(m, static_cast<long>(rng() % 2001) - 1000, b);
        };
        const auto x = draw();
        const auto y = draw();
        const auto rx = digitize(x, n);
        const auto ry = digitize(y, n);
        REQUIRE_MESSAGE(add(rx, ry, n).sum.prefix(n) == digitize(x + y, n).prefix(n),
                        "m=" << m << " " << to_string(x) << " + " << to_string(y));
        REQUIRE_MESSAGE(multiply(rx, ry, n).prefix(n) == digitize(x * y, n).prefix(n),
                        "m=" << m << " " << to_string(x) << " * " << to_string(y));
    }
}

TEST_CASE("expansions are unique: distinct rationals get distinct digits") {
    // two values whose difference has valuation k first differ at digit k
    std::mt19937_64 rng(8);
    for (int i = 0; i < 200; ++i) {
        const auto m = static_cast<std::uint32_t>(2 + rng() % 6);
        const auto x = make_rational(m, static_cast<long>(rng() % 1000));
        const auto y = make_rational(m, static_cast<long>(rng() % 1000));
        if (x == y) {
            continue;
        }
        const auto k = *valuation(x - y).k;
        const Digits dx = digitize(x, k + 1).prefix(k + 1);
        const Digits dy = digitize(y, k + 1).prefix(k + 1);
        for (std::size_t j = 0; j < k; ++j) {
            REQUIRE(dx[j] == dy[j]);
        }
        REQUIRE(dx[k] != dy[k]);
    }
}

TEST_CASE("shift multiplies by m/(m+1)") {
    const auto s = digitize(make_rational(3, 16), 10);
    const DigitStream sh = shift(s);
    CHECK(sh.prefix(11) == R(3, 12, 11));
    CHECK(unshift(sh).prefix(10) == s.prefix(10));
    CHECK(kind_of([&] { unshift(s); }) == ErrorKind::not_divisible);
    CHECK(kind_of([] { unshift(DigitStream::literal(3, {})); }) == ErrorKind::insufficient_digits);
}

TEST_CASE("periodic expansions are rational") {
    const Digits none;
    const Digits two{2};
    CHECK(periodic_to_rational(3, none, two).value() == 8);
    const Digits pre{0, 0};
    CHECK(periodic_to_rational(3, pre, Digits{1}).value() == BigRational(9, 4));
    CHECK(periodic_to_rational(3, none, Digits{1, 2}).value() == BigRational(40, 7));
    CHECK(kind_of([&] { periodic_to_rational(3, none, none); }) == ErrorKind::invalid_argument);
    CHECK(kind_of([&] { periodic_to_rational(3, none, Digits{3}); }) == ErrorKind::invalid_argument);

    std::mt19937_64 rng(77);
    for (int i = 0; i < 100; ++i) {
        const auto m = static_cast<std::uint32_t>(2 + rng() % 6);
        Digits p, per;
        for (std::size_t k = rng() % 4; k > 0; --k) {
            p.push_back(static_cast<Digit>(rng() % m));
        }
        for (std::size_t k = 1 + rng() % 4; k > 0; --k) {
            per.push_back(static_cast<Digit>(rng() % m));
        }
        const auto q = periodic_to_rational(m, p, per);
        const std::size_t n = p.size() + 5 * per.size();
        const Digits d = digitize(q, n).prefix(n);
        for (std::size_t k = 0; k < n; ++k) {
            const Digit want = k < p.size() ? p[k] : per[(k - p.size()) % per.size()];
            REQUIRE(d[k] == want);
        }
    }
}

TEST_CASE("expansion of (m+1) y_0 is the column sequence") {
    const auto w = expansion_equals_tracking(3, 1, 0, 12);
    CHECK(w.holds);
    CHECK(w.columns == Digits{1, 2, 0, 2, 1, 1, 2, 1, 2, 2, 2, 0});
    CHECK(w.expansion == R(3, 16, 12));
    for (std::uint32_t m = 2; m <= 7; ++m) {
        for (std::uint64_t x = 1; x <= 30; ++x) {
            for (std::uint32_t r = 0; r < m; ++r) {
                REQUIRE(expansion_equals_tracking(m, x, r, 40).holds);
            }
        }
    }
}

TEST_CASE("the cumulative carry differs from naive digitwise carrying") {
    // R(16) from R(8) + R(8): a carry that only reaches the next digit does not work
    const Digits eights(12, 2);
    Digits naive;
    std::uint32_t carry = 0;
    for (Digit d : eights) {
        const std::uint32_t t = 2 * d + carry;
        naive.push_back(t % 3);
        carry = t / 3;
    }
    CHECK(naive != R(3, 16, 12));
    const auto e = DigitStream::literal(3, eights);
    CHECK(add(e, e, 12).sum.prefix(12) == R(3, 16, 12));
}

TEST_CASE("three addends at once") {
    const std::vector<DigitStream> terms{digitize(make_rational(5, 3), 30), digitize(make_rational(5, -7, 2), 30),
                                         digitize(make_rational(5, 11, 3), 30)};
    const SumResult s = sum_streams(terms, 30);
    CHECK(s.sum.prefix(30) == R(5, 19, 6, 30));
    CHECK(kind_of([] { sum_streams(std::vector<DigitStream>{}, 3); }) == ErrorKind::invalid_argument);
    const std::vector<DigitStream> mixed{digitize(make_rational(3, 1), 3), digitize(make_rational(5, 1), 3)};
    CHECK(kind_of([&] { sum_streams(mixed, 3); }) == ErrorKind::invalid_argument);
}

#include <rotrem/checks.hpp>
#include <rotrem/error.hpp>
#include <rotrem/josephus.hpp>

#include <doctest.h>

#include <cmath>
#include <list>
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

// Columns of the row in a list, walked leftward with wraparound.
JosephusTrace slow_game(const TriangleRow &row) {
    const std::uint64_t x = row.cells.size();
    std::list<std::uint64_t> cols;
    for (std::uint64_t c = 0; c < x; ++c) {
        cols.push_back(c);
    }
    auto left = [&](std::list<std::uint64_t>::iterator it) {
        return it == cols.begin() ? std::prev(cols.end()) : std::prev(it);
    };
    JosephusTrace t;
    t.m = row.m;
    t.x = x;
    auto it = std::next(cols.begin(), static_cast<long>((row.m + x - 1) % x));
    while (cols.size() > 1) {
        for (std::uint32_t count = 1; count <= row.m; ++count) {
            it = left(it);
        }
        t.eliminated.push_back(*it);
        const auto next = left(it);
        cols.erase(it);
        it = next;
    }
    t.winner_column = cols.front();
    t.winner_value = row.cells[t.winner_column];
    return t;
}

std::vector<std::uint64_t> slow_order(std::uint64_t n, std::uint64_t x) {
    std::list<std::uint64_t> circle;
    for (std::uint64_t i = 1; i <= x; ++i) {
        circle.push_back(i);
    }
    std::vector<std::uint64_t> order;
    auto it = circle.begin();
    while (!circle.empty()) {
        for (std::uint64_t step = 1; step < n; ++step) {
            if (++it == circle.end()) {
                it = circle.begin();
            }
        }
        order.push_back(*it);
        it = circle.erase(it);
        if (it == circle.end()) {
            it = circle.begin();
        }
    }
    return order;
}

} // namespace

TEST_CASE("negabinary digits") {
    CHECK(to_negabinary(0).to_string() == "0");
    CHECK(to_negabinary(0).bits.empty());
    CHECK(to_negabinary(1).to_string() == "1");
    CHECK(to_negabinary(2).to_string() == "110");
    CHECK(to_negabinary(9).to_string() == "11001");
    CHECK(to_negabinary(999).to_string() == "10000111011");
    CHECK(to_negabinary(-1).to_string() == "11");
    CHECK(to_negabinary(-2).to_string() == "10");
    CHECK(from_negabinary(parse_negabinary("10000111011")) == 999);
    CHECK(parse_negabinary("0011") == to_negabinary(-1));
    CHECK(kind_of([] { parse_negabinary("102"); }) == ErrorKind::parse_error);
}

TEST_CASE("negabinary round trips") {
    for (long v = -5000; v <= 5000; ++v) {
        const NegaBinary d = to_negabinary(v);
        REQUIRE(from_negabinary(d) == v);
        if (!d.bits.empty()) {
            REQUIRE(d.bits.back() == 1);
        }
    }
    std::mt19937_64 rng(1);
    for (int i = 0; i < 200; ++i) {
        BigInt v = 0;
        for (int w = 0; w < 5; ++w) {
            v = v * BigInt("18446744073709551616") + BigInt(std::to_string(rng()));
        }
        if (rng() % 2) {
            v = -v;
        }
        REQUIRE(from_negabinary(to_negabinary(v)) == v);
    }
}

TEST_CASE("negabinary ones") {
    CHECK(negabinary_ones(0) == 0);
    CHECK(negabinary_ones(1) == 1);
    CHECK(negabinary_ones(2) == -1);
    CHECK(negabinary_ones(3) == 3);
    for (std::uint64_t k = 1; k <= 40; ++k) {
        const NegaBinary d = to_negabinary(negabinary_ones(k));
        CHECK(d.bits == std::vector<std::uint8_t>(k, 1));
    }
}

TEST_CASE("s, k decomposition") {
    const auto one = decompose_sk(1);
    CHECK(one.s == 0);
    CHECK(one.k == 1);
    const auto nine = decompose_sk(9);
    CHECK(nine.k == 1);
    CHECK(nine.s == 2);
    const auto three = decompose_sk(3);
    CHECK(three.k == 3);
    CHECK(three.s == 0);
    CHECK(kind_of([] { decompose_sk(0); }) == ErrorKind::invalid_argument);
    for (long x = 1; x <= 5000; ++x) {
        const auto d = decompose_sk(x);
        REQUIRE(d.k == to_negabinary(x).trailing_ones());
        REQUIRE(rotrem::pow(2, d.k + 1) * d.s + negabinary_ones(d.k) == x);
        REQUIRE(d.s >= 0);
    }
}

TEST_CASE("fast trailing-ones count on large values") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 100; ++i) {
        BigInt x = 1;
        for (int w = 0; w < 8; ++w) {
            x = x * BigInt("18446744073709551616") + BigInt(std::to_string(rng()));
        }
        // append a run of 1s of random length to force long runs
        const std::uint64_t run = rng() % 200;
        x = rotrem::pow(2, run + 1) * x + negabinary_ones(run);
        if (x < 1) {
            continue;
        }
        REQUIRE(decompose_sk(x).k == to_negabinary(x).trailing_ones());
    }
}

TEST_CASE("lead-row recurrence") {
    CHECK(l2_next(1) == 2);
    CHECK(l2_next(2) == 3);
    CHECK(l2_next(3) == 14);
    CHECK(l2_next(14) == 21);
    CHECK(l2_next(21) == 47);
    const auto seq = l2_sequence(12);
    const auto leads2 = leads(2, 8).values;
    for (std::size_t i = 0; i < leads2.size(); ++i) {
        CHECK(seq[i].value == leads2[i]);
        CHECK(seq[i].n == i + 1);
    }
    CHECK(kind_of([] { l2_sequence(0); }) == ErrorKind::invalid_argument);
}

TEST_CASE("lead-row bound verdicts") {
    const auto seq = l2_sequence(30);
    CHECK(seq[0].super_exponential == Verdict::equality);
    CHECK(seq[0].lower_9_4 == Verdict::violated);
    CHECK(seq[1].lower_9_4 == Verdict::not_applicable);
    CHECK(seq[2].lower_9_4 == Verdict::holds);
    for (const L2Step &st : seq) {
        CHECK(st.k_bound == Verdict::holds);
        if (st.n > 1) {
            CHECK(st.super_exponential == Verdict::holds);
        }
        if (st.n <= 20) {
            CHECK(st.upper_27_8 == Verdict::holds);
        }
        CHECK((st.lower_9_4 == Verdict::not_applicable) == (st.s != 0));
    }
    CHECK(std::string(to_string(Verdict::not_applicable)) == "not-applicable");
}

TEST_CASE("upper growth bound recomputed with logs") {
    const auto seq = l2_sequence(20);
    const double ratio = std::log2(27.0 / 8.0);
    const double lg3 = std::log2(3.0);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        const double lhs = log2_abs(seq[i + 1].value);
        const double rhs = ratio + lg3 * log2_abs(seq[i].value);
        CHECK(lhs < rhs + 1e-9);
    }
}

TEST_CASE("game on row 10 of T_3") {
    const JosephusTrace g = josephus_game(3, 10);
    CHECK(g.eliminated == std::vector<std::uint64_t>{9, 5, 1, 6, 0, 3, 4, 2, 7});
    CHECK(g.winner_column == 8);
    CHECK(g.winner_value == 1);
    CHECK(josephus_survivor(4, 10) == 5);
}

TEST_CASE("small games") {
    const auto one = josephus_game(3, 1);
    CHECK(one.eliminated.empty());
    CHECK(one.winner_column == 0);
    const auto two = josephus_game(3, 2);
    CHECK(two.eliminated.size() == 1);
    CHECK(two.winner_value == 1);
    CHECK(kind_of([] { josephus_game(TriangleRow{3, 0, {}}); }) == ErrorKind::invalid_argument);
}

TEST_CASE("game agrees with a list simulation and lands on the 1") {
    for (std::uint32_t m = 1; m <= 5; ++m) {
        for (std::uint64_t x = 1; x <= 120; ++x) {
            const TriangleRow r = row(m, x);
            const JosephusTrace fast = josephus_game(r);
            const JosephusTrace slow = slow_game(r);
            REQUIRE_MESSAGE(fast.eliminated == slow.eliminated, "m=" << m << " x=" << x);
            REQUIRE(fast.winner_column == slow.winner_column);
            REQUIRE(fast.winner_value == 1);
            REQUIRE(fast.winner_column == one_position(r));
        }
    }
}

TEST_CASE("classical survivors") {
    CHECK(josephus_survivor(2, 10) == 5);
    CHECK(josephus_order(2, 10) == std::vector<std::uint64_t>{2, 4, 6, 8, 10, 3, 7, 1, 9, 5});
    for (std::uint64_t n = 2; n <= 9; ++n) {
        CHECK(josephus_survivor(n, 1) == 1);
    }
    CHECK(kind_of([] { josephus_survivor(1, 5); }) == ErrorKind::invalid_argument);
    CHECK(kind_of([] { josephus_survivor(3, 0); }) == ErrorKind::invalid_argument);
    for (std::uint64_t n = 2; n <= 7; ++n) {
        for (std::uint64_t x = 1; x <= 80; ++x) {
            REQUIRE_MESSAGE(josephus_order(n, x) == slow_order(n, x), "n=" << n << " x=" << x);
        }
    }
    for (std::uint64_t x = 1; x <= 1024; ++x) {
        REQUIRE(josephus_survivor(2, x) == checks::classic_j2(x));
    }
}

TEST_CASE("survivor of n = m+1 sits m - j places from the start") {
    for (std::uint32_t m = 1; m <= 6; ++m) {
        for (std::uint64_t x = 2; x <= 200; ++x) {
            const std::uint64_t j = one_position(m, x);
            const std::uint64_t residue = (m % x + x - j) % x;
            REQUIRE_MESSAGE(josephus_survivor(m + 1, x) == (residue == 0 ? x : residue), "m=" << m << " x=" << x);
        }
    }
}

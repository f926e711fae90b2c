#include <rotrem/checks.hpp>
#include <rotrem/error.hpp>
#include <rotrem/expansion.hpp>
#include <rotrem/josephus.hpp>
#include <rotrem/madic.hpp>
#include <rotrem/rotating_queue.hpp>
#include <rotrem/tracking.hpp>

#include <bit>
#include <functional>
#include <random>
#include <sstream>

namespace rotrem::checks {

namespace {

template <class Seq> std::string join(const Seq &seq) {
    std::ostringstream out;
    bool first = true;
    for (const auto &v : seq) {
        out << (first ? "" : " ") << v;
        first = false;
    }
    return out.str();
}

// Tallies cases and keeps the first failure message.
class Tally {
  public:
    void expect(bool ok, const std::function<std::string()> &describe) {
        ++cases_;
        if (!ok) {
            if (failures_ == 0) {
                first_ = describe();
            }
            ++failures_;
        }
    }

    CheckResult finish(int id, std::string summary) const {
        CheckResult r;
        r.id = id;
        r.passed = failures_ == 0;
        r.cases = cases_;
        r.failures = failures_;
        r.detail = failures_ == 0 ? std::move(summary) : first_;
        return r;
    }

  private:
    std::uint64_t cases_ = 0;
    std::uint64_t failures_ = 0;
    std::string first_;
};

std::uint64_t uniform(std::mt19937_64 &rng, std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

std::vector<Digit> digits_of(std::initializer_list<Digit> d) { return std::vector<Digit>(d); }

DigitStream r3(long q, std::size_t n) { return digitize(MadicRational(3, q), n); }

std::vector<Digit> head(const DigitStream &s, std::size_t n) { return s.prefix(n); }

std::vector<std::uint64_t> kappa_u64(const CarryTrace &t) {
    std::vector<std::uint64_t> out;
    for (const BigInt &k : t.kappa) {
        out.push_back(to_u64(k));
    }
    return out;
}

// --- 1 ---------------------------------------------------------------------

const std::vector<std::vector<Cell>> kRowsT3 = {
    {1},
    {1, 2},
    {2, 1, 2},
    {2, 1, 2, 3},
    {3, 2, 1, 2, 3},
    {2, 3, 3, 2, 1, 4},
    {2, 1, 4, 2, 3, 3, 3},
    {2, 3, 3, 3, 2, 1, 4, 3},
    {3, 2, 1, 4, 3, 2, 3, 3, 3},
    {4, 3, 2, 3, 3, 3, 3, 2, 1, 4},
};

const std::vector<std::vector<Cell>> kRowsT1 = {
    {1},
    {1, 2},
    {2, 1, 2},
    {1, 2, 2, 3},
    {2, 2, 3, 1, 2},
    {2, 3, 1, 2, 2, 3},
    {3, 1, 2, 2, 3, 2, 3},
    {1, 2, 2, 3, 2, 3, 3, 4},
    {2, 2, 3, 2, 3, 3, 4, 1, 2},
    {2, 3, 2, 3, 3, 4, 1, 2, 2, 3},
};

CheckResult triangle_fidelity(const SuiteConfig &) {
    Tally t;
    for (auto [m, table] : {std::pair{3u, &kRowsT3}, std::pair{1u, &kRowsT1}}) {
        for (std::uint64_t x = 1; x <= table->size(); ++x) {
            const TriangleRow got = row(m, x);
            const auto &want = (*table)[x - 1];
            t.expect(got.cells == want, [&] {
                return "T_" + std::to_string(m) + " row " + std::to_string(x) + ": got [" +
                       join(got.cells) + "], want [" + join(want) + "]";
            });
        }
    }
    return t.finish(1, "T_3 and T_1 rows 1-10 match cell for cell");
}

// --- 2 ---------------------------------------------------------------------

CheckResult tracking_fidelity(const SuiteConfig &) {
    Tally t;
    const auto states = track(3, 1, 0, 10);
    std::vector<std::uint64_t> xs;
    std::vector<std::uint32_t> rs;
    for (const auto &s : states) {
        xs.push_back(to_u64(s.x));
        rs.push_back(s.r);
    }
    const std::vector<std::uint64_t> want_x{1, 1, 1, 2, 2, 3, 4, 5, 7, 9};
    const std::vector<std::uint32_t> want_r{0, 1, 2, 0, 2, 1, 1, 2, 1, 2};
    t.expect(xs == want_x, [&] { return "track(3,1,0) x: " + join(xs); });
    t.expect(rs == want_r, [&] { return "track(3,1,0) r: " + join(rs); });

    for (std::uint32_t m = 1; m <= 5; ++m) {
        for (std::uint64_t x = 1; x <= 40; ++x) {
            for (std::uint32_t r = 0; r < m; ++r) {
                const auto fast = track(m, x, r, 15);
                const auto slow = simulate_marked_cell(m, x, r, 15);
                bool same = fast.size() == slow.size();
                for (std::size_t i = 0; same && i < fast.size(); ++i) {
                    same = fast[i].x == slow[i].first && fast[i].r == slow[i].second;
                }
                t.expect(same, [&] {
                    return "track differs from queue simulation at m=" + std::to_string(m) +
                           " x=" + std::to_string(x) + " r=" + std::to_string(r);
                });
            }
        }
    }
    return t.finish(2, "track(3,1,0) reproduced; recurrence equals queue simulation on 15 visits");
}

// --- 3 ---------------------------------------------------------------------

CheckResult congruence(const SuiteConfig &config) {
    Tally t;
    std::mt19937_64 rng(config.seed ^ 3);
    for (int i = 0; i < 500; ++i) {
        const auto m = static_cast<std::uint32_t>(uniform(rng, 1, 8));
        const std::uint64_t x = uniform(rng, 1, 100);
        const auto r = static_cast<std::uint32_t>(uniform(rng, 0, m - 1));
        const auto w = verify_congruence(m, x, r, 60);
        t.expect(w.holds, [&] {
            return "congruence fails at m=" + std::to_string(m) + " x=" + std::to_string(x) +
                   " r=" + std::to_string(r);
        });
    }
    return t.finish(3, "500 random starts, n = 60");
}

// --- 4 ---------------------------------------------------------------------

const std::vector<std::vector<Digit>> kTableR = {
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {0, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2},
    {1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2},
    {2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2},
    {0, 0, 1, 2, 0, 2, 1, 1, 2, 1, 2, 2, 2, 0, 1, 0, 0, 1, 1, 0, 0},
};

CheckResult expansion_tables(const SuiteConfig &) {
    Tally t;
    for (long q = 0; q < static_cast<long>(kTableR.size()); ++q) {
        const auto got = head(r3(q, 21), 21);
        t.expect(got == kTableR[q], [&] {
            return "R(" + std::to_string(q) + ") = " + join(got);
        });
    }
    const auto r16 = head(r3(16, 12), 12);
    t.expect(r16 == digits_of({1, 2, 0, 2, 1, 1, 2, 1, 2, 2, 2, 0}),
             [&] { return "R(16) = " + join(r16); });
    return t.finish(4, "R(0)..R(9) to 21 digits and R(16) to 12 digits");
}

// --- 5 ---------------------------------------------------------------------

CheckResult expansion_arithmetic(const SuiteConfig &) {
    Tally t;
    auto check_sum = [&](const std::string &label, const DigitStream &a, const DigitStream &b,
                         const std::vector<Digit> &digits, const std::vector<std::uint64_t> &carries) {
        const SumResult s = add(a, b, 13);
        const auto got = head(s.sum, 13);
        const auto kappa = kappa_u64(s.carries);
        t.expect(got == digits, [&] { return label + " digits " + join(got); });
        t.expect(kappa == carries, [&] { return label + " carries " + join(kappa); });
    };

    const std::vector<Digit> r9 = {0, 0, 1, 2, 0, 2, 1, 1, 2, 1, 2, 2, 2};
    // The printed carry row for this table, 0 1 2 3 5 7 10 ..., would put a 1
    // in digit 4 of the sum; the recurrence gives the row below and the printed digits.
    check_sum("R(1)+R(8)", r3(1, 13), r3(8, 13), r9, {0, 1, 2, 3, 4, 6, 8, 11, 15, 20, 27, 36, 48});
    const std::vector<std::uint64_t> printed = {0, 1, 2, 3, 5, 7, 10, 14, 19, 26, 35, 48, 65};
    t.expect((0 + 2 + printed[4]) % 3 != r9[4],
             [] { return "printed R(1)+R(8) carry row unexpectedly consistent"; });
    check_sum("R(9)+R(9)", r3(9, 13), r3(9, 13), {0, 0, 2, 1, 1, 2, 1, 2, 2, 2, 0, 1, 0},
              {0, 0, 0, 0, 1, 1, 2, 3, 4, 6, 8, 12, 17});

    // The second table's operand rows are not R(34), R(25) as digitize computes
    // them; its column arithmetic is checked on the printed rows.
    check_sum("second table", DigitStream::literal(3, {1, 1, 1, 0, 2, 0, 1, 2, 0, 0, 0, 2, 0}),
              DigitStream::literal(3, {1, 1, 0, 2, 2, 1, 2, 1, 2, 1, 2, 2, 2}),
              {2, 2, 1, 2, 1, 2, 1, 2, 2, 2, 1, 2, 0}, {0, 0, 0, 0, 0, 1, 1, 2, 3, 4, 5, 7, 10});
    for (auto [a, b] : {std::pair{1L, 8L}, std::pair{34L, 25L}, std::pair{9L, 9L}}) {
        const auto got = head(add(r3(a, 13), r3(b, 13), 13).sum, 13);
        t.expect(got == head(r3(a + b, 13), 13), [&] {
            return "R(" + std::to_string(a) + ")+R(" + std::to_string(b) + ") != R(" +
                   std::to_string(a + b) + ")";
        });
    }

    const ProductResult p = multiply_traced(r3(9, 13), r3(11, 13), 13);
    const auto p_digits = head(p.product, 13);
    const auto p_carries = kappa_u64(p.carries);
    t.expect(p_digits == digits_of({0, 0, 2, 1, 2, 0, 1, 1, 1, 0, 2, 0, 1}),
             [&] { return "R(9)xR(11) = " + join(p_digits); });
    t.expect(p_carries == std::vector<std::uint64_t>{0, 0, 0, 0, 0, 0, 2, 3, 6, 10, 16, 24, 35},
             [&] { return "R(9)xR(11) carries " + join(p_carries); });
    t.expect(p_digits == head(r3(99, 13), 13), [&] { return "R(9)xR(11) differs from R(99)"; });
    const auto sq = head(multiply(r3(4, 13), r3(4, 13), 13), 13);
    t.expect(sq == head(r3(16, 13), 13), [&] { return "R(4)^2 = " + join(sq); });
    return t.finish(5, "addition tables with carries, R(9)xR(11)=R(99) with carries, R(4)^2=R(16)");
}

// --- 6 ---------------------------------------------------------------------

CheckResult cross_module(const SuiteConfig &config) {
    Tally t;
    std::mt19937_64 rng(config.seed ^ 6);
    for (int i = 0; i < 200; ++i) {
        const auto m = static_cast<std::uint32_t>(uniform(rng, 2, 8));
        const std::uint64_t x = uniform(rng, 1, 100);
        const auto r = static_cast<std::uint32_t>(uniform(rng, 0, m - 1));
        const auto w = expansion_equals_tracking(m, x, r, 40);
        t.expect(w.holds, [&] {
            return "R((m+1)y_0) != r_1.. at m=" + std::to_string(m) + " x=" + std::to_string(x) +
                   " r=" + std::to_string(r);
        });
    }
    return t.finish(6, "200 random starts, 40 digits");
}

// --- 7 ---------------------------------------------------------------------

CheckResult sqrt_sequences(const SuiteConfig &) {
    Tally t;
    const auto listed = sqrt_sequence(3, 7, 2, 7);
    const std::vector<std::string> want = {"2",      "5",          "-13",
                                           "-175",   "-30793",     "-948239635",
                                           "-899158406333172853"};
    std::vector<std::string> got;
    for (const BigInt &v : listed.terms) {
        got.push_back(to_string(v));
    }
    t.expect(got == want, [&] { return "sigma(3,7,2) = " + join(got); });

    constexpr std::size_t kTerms = 40;
    struct Seed {
        std::uint32_t m;
        long c, s1;
    };
    for (const Seed s : {Seed{3, 7, 2}, Seed{5, 6, 1}, Seed{7, 2, 3}, Seed{15, 19, 2}}) {
        const std::string label = "(m=" + std::to_string(s.m) + ", c=" + std::to_string(s.c) + ")";
        const auto seq = sqrt_sequence_mod(s.m, s.c, s.s1, kTerms, kTerms + 1);
        const BigInt &mod_all = *seq.modulus;
        const auto exact = sqrt_sequence(s.m, s.c, s.s1, kMaxExactSqrtTerms);
        for (std::size_t i = 0; i < exact.terms.size(); ++i) {
            t.expect(mod(exact.terms[i], mod_all) == seq.terms[i],
                     [&] { return label + " residue mismatch at n=" + std::to_string(i + 1); });
        }
        for (std::size_t n = 1; n <= kTerms; ++n) {
            const BigInt mn = pow(s.m, n);
            const BigInt &sigma = seq.terms[n - 1];
            t.expect(mod(sigma * sigma - s.c, mn) == 0,
                     [&] { return label + " sigma_n^2 != c mod m^n at n=" + std::to_string(n); });
            for (std::size_t k = 1; k <= n; ++k) {
                const BigInt diff = sigma - seq.terms[k - 1];
                t.expect(mod(diff, pow(s.m, k)) == 0, [&] {
                    return label + " |sigma_n - sigma_k| > m^-k at n=" + std::to_string(n) +
                           " k=" + std::to_string(k);
                });
            }
        }
    }
    return t.finish(7, "listed terms exact; congruence and Cauchy bounds for n <= 40, four seeds");
}

// --- 8 ---------------------------------------------------------------------

CheckResult negabinary(const SuiteConfig &) {
    Tally t;
    for (auto [x, want] : {std::pair{43, "1111111"}, std::pair{500, "11000110100"},
                           std::pair{999, "10000111011"}, std::pair{9, "11001"}}) {
        const std::string got = to_negabinary(x).to_string();
        t.expect(got == want, [&] { return std::to_string(x) + " -> " + got; });
    }
    std::uint64_t equalities = 0;
    for (std::uint64_t x = 1; x <= 100'000; ++x) {
        const BigInt bx = from_u64(x);
        const NegaBinary nb = to_negabinary(bx);
        t.expect(from_negabinary(nb) == bx, [&] { return "round trip fails at " + std::to_string(x); });
        const SKDecomposition d = decompose_sk(bx);
        t.expect(d.k == nb.trailing_ones(),
                 [&] { return "k is not the trailing run at " + std::to_string(x); });
        t.expect(pow(2, d.k + 1) * d.s + negabinary_ones(d.k) == bx,
                 [&] { return "s,k identity fails at " + std::to_string(x); });
        t.expect((d.k == 0) == (x % 2 == 0), [&] { return "k=0 iff even fails at " + std::to_string(x); });
        const std::uint64_t bound = ceil_log2(bx) + 1;
        t.expect(d.k <= bound && ((d.k == bound) == (sgn(d.s) == 0)),
                 [&] { return "k bound fails at " + std::to_string(x); });
        equalities += d.k == bound;
    }
    return t.finish(8, "x <= 100000; k bound attained " + std::to_string(equalities) + " times, all with s = 0");
}

// --- 9 ---------------------------------------------------------------------

CheckResult m2_leads(const SuiteConfig &config) {
    Tally t;
    const CappedSequence detected = leads(2, 1'000'000, config.row_cap);
    const auto steps = l2_sequence(25);
    std::size_t compared = 0;
    for (const L2Step &s : steps) {
        if (!fits_u64(s.value) || to_u64(s.value) > detected.rows_scanned) {
            break;
        }
        const std::size_t i = s.n - 1;
        t.expect(i < detected.values.size() && detected.values[i] == to_u64(s.value), [&] {
            return "l_2(" + std::to_string(s.n) + ") = " + to_string(s.value) +
                   " not found by the lead detector";
        });
        ++compared;
    }
    t.expect(compared == detected.values.size(), [&] {
        return "lead detector found " + std::to_string(detected.values.size()) +
               " rows, recurrence predicts " + std::to_string(compared);
    });
    t.expect(compared >= 15, [&] { return "only " + std::to_string(compared) + " leads below the cap"; });

    for (const L2Step &s : steps) {
        const bool ok = s.n == 1 ? s.super_exponential == Verdict::equality
                                 : s.super_exponential == Verdict::holds;
        t.expect(ok, [&] {
            return "super-exponential bound " + std::string(to_string(s.super_exponential)) +
                   " at n=" + std::to_string(s.n);
        });
        t.expect(s.k_bound == Verdict::holds, [&] { return "k bound fails at n=" + std::to_string(s.n); });
    }

    const CappedSequence a2 = appearances(2, 20, config.row_cap);
    t.expect(a2.values.size() == 20 && !a2.cap_reached,
             [&] { return "only " + std::to_string(a2.values.size()) + " values of a_2 below the cap"; });
    return t.finish(9, std::to_string(compared) + " leads match; bound holds for n <= 25; a_2(20) = " +
                           (a2.values.empty() ? "?" : std::to_string(a2.values.back())));
}

// --- 10 --------------------------------------------------------------------

CheckResult josephus(const SuiteConfig &) {
    Tally t;
    for (std::uint32_t m = 1; m <= 6; ++m) {
        TriangleSweep sweep(m);
        for (std::uint64_t x = 1; x <= 1500; ++x) {
            if (x > 1) {
                sweep.advance();
            }
            const TriangleRow r = sweep.snapshot();
            const JosephusTrace g = josephus_game(r);
            const std::uint64_t j = one_position(r);
            const std::string at = " at m=" + std::to_string(m) + " x=" + std::to_string(x);
            t.expect(g.winner_value == 1 && g.winner_column == j,
                     [&] { return "winner " + std::to_string(g.winner_value) + at; });
            t.expect(g.eliminated.size() == x - 1, [&] { return "elimination count" + at; });
            const std::uint64_t residue = (m % x + x - j) % x;
            const std::uint64_t expected = residue == 0 ? x : residue;
            const std::uint64_t survivor = josephus_survivor(m + 1, x);
            t.expect(x == 1 || survivor == expected, [&] {
                return "J_" + std::to_string(m + 1) + " = " + std::to_string(survivor) + ", want " +
                       std::to_string(expected) + at;
            });
        }
    }
    for (std::uint64_t x = 1; x <= 4096; ++x) {
        t.expect(josephus_survivor(2, x) == classic_j2(x),
                 [&] { return "J_2(" + std::to_string(x) + ") disagrees with 2l+1"; });
    }
    return t.finish(10, "m <= 6, x <= 1500; J_2 for x <= 4096");
}

// --- 11 --------------------------------------------------------------------

CheckResult aperiodicity(const SuiteConfig &config) {
    Tally t;
    std::mt19937_64 rng(config.seed ^ 11);
    for (int i = 0; i < 50; ++i) {
        const auto m = static_cast<std::uint32_t>(uniform(rng, 2, 8));
        const std::uint64_t x = uniform(rng, 1, 100);
        const auto r = static_cast<std::uint32_t>(uniform(rng, 0, m - 1));
        const auto rep = aperiodicity_check(m, x, r, 200, 20);
        t.expect(rep.passed(), [&] {
            return "period " + std::to_string(rep.periodic_period) + " from " +
                   std::to_string(rep.periodic_start) + " at m=" + std::to_string(m) +
                   " x=" + std::to_string(x) + " r=" + std::to_string(r);
        });
    }
    t.expect(aperiodicity_check(3, 1, 0, 200, 20).passed(), [] { return "m=3 (1,0) looks periodic"; });
    t.expect(aperiodicity_check(2, 1, 0, 200, 30).passed(), [] { return "m=2 (1,0) looks periodic"; });

    // negative controls: constant and eventually periodic sequences are caught
    const std::vector<std::uint32_t> constant(200, 1);
    const auto c = scan_periodic_tails(constant, 20);
    t.expect(c.periodic_tail_found && c.periodic_period == 1 && c.periodic_start == 0,
             [] { return "constant control not detected"; });
    auto seeded = column_sequence(3, 1, 0, 200);
    for (std::size_t n = 120; n < seeded.size(); ++n) {
        seeded[n] = seeded[n - 7];
    }
    const auto e = scan_periodic_tails(seeded, 20);
    t.expect(e.periodic_tail_found && e.periodic_period == 7,
             [] { return "eventually periodic control not detected"; });
    return t.finish(11, "50 random starts, window 200, periods <= 20; controls detected");
}

struct Entry {
    const char *name;
    const char *title;
    CheckResult (*run)(const SuiteConfig &);
};

const std::vector<Entry> &entries() {
    static const std::vector<Entry> table = {
        {"triangle", "triangle fidelity", triangle_fidelity},
        {"tracking", "tracking fidelity", tracking_fidelity},
        {"congruence", "congruence mod m^n", congruence},
        {"expansion-tables", "expansion tables", expansion_tables},
        {"expansion-arithmetic", "expansion arithmetic", expansion_arithmetic},
        {"cross-module", "expansion equals tracking", cross_module},
        {"sqrt", "square-root sequences", sqrt_sequences},
        {"negabinary", "negabinary and (s,k)", negabinary},
        {"leads", "m=2 lead rows", m2_leads},
        {"josephus", "josephus games", josephus},
        {"aperiodicity", "aperiodicity windows", aperiodicity},
    };
    return table;
}

} // namespace

std::vector<std::pair<std::uint64_t, std::uint32_t>>
simulate_marked_cell(std::uint32_t m, std::uint64_t x, std::uint32_t r, std::size_t count) {
    if (m == 0 || x == 0) {
        fail(ErrorKind::invalid_argument, "simulate_marked_cell needs m >= 1 and x >= 1");
    }
    RotatingQueue<std::uint64_t> ids(std::vector<std::uint64_t>{0});
    std::uint64_t next_id = 1;
    std::uint64_t rows = 1;
    auto advance = [&] {
        ids.rotate_left(m);
        ids.push_back(next_id++);
        ++rows;
    };
    while (rows < x) {
        advance();
    }
    std::uint64_t column = r % x;
    const std::uint64_t marked = ids[column];

    std::vector<std::pair<std::uint64_t, std::uint32_t>> visits;
    // virtual columns v = column + j*rows below m; the start row begins at r itself
    std::uint64_t from = r;
    while (visits.size() < count) {
        for (std::uint64_t v = from; v < m && visits.size() < count; v += rows) {
            visits.emplace_back(rows, static_cast<std::uint32_t>(v));
        }
        if (visits.size() == count) {
            break;
        }
        const std::uint64_t n = ids.size();
        advance();
        std::uint64_t guess = (column + n - m % n) % n;
        if (ids[guess] != marked) {
            for (guess = 0; ids[guess] != marked; ++guess) {
            }
        }
        column = guess;
        from = column;
    }
    return visits;
}

std::uint64_t classic_j2(std::uint64_t x) {
    const std::uint64_t top = std::bit_floor(x);
    return 2 * (x - top) + 1;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        return 0;
    }
    std::vector<std::uint64_t> line{1};
    for (std::uint64_t i = 1; i <= n; ++i) {
        std::vector<std::uint64_t> next(i + 1, 1);
        for (std::uint64_t j = 1; j < i; ++j) {
            next[j] = line[j - 1] + line[j];
        }
        line = std::move(next);
    }
    return line[k];
}

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const Entry &e : entries()) {
            out.emplace_back(e.name);
        }
        return out;
    }();
    return names;
}

CheckResult run_criterion(int id, const SuiteConfig &config) {
    const auto &table = entries();
    if (id < 1 || id > static_cast<int>(table.size())) {
        fail(ErrorKind::invalid_argument, "no criterion " + std::to_string(id));
    }
    const Entry &e = table[id - 1];
    CheckResult r;
    try {
        r = e.run(config);
    } catch (const Error &err) {
        r.id = id;
        r.passed = false;
        r.failures = 1;
        r.detail = std::string(to_string(err.kind())) + ": " + err.what();
    }
    r.name = e.name;
    r.title = e.title;
    return r;
}

std::vector<CheckResult> run_suite(const std::string &name, const SuiteConfig &config) {
    std::vector<CheckResult> out;
    const auto &names = suite_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (name == "all" || name == names[i]) {
            out.push_back(run_criterion(static_cast<int>(i) + 1, config));
        }
    }
    if (out.empty()) {
        fail(ErrorKind::invalid_argument, "unknown suite '" + name + "'");
    }
    return out;
}

} // namespace rotrem::checks

#include <rotrem/error.hpp>
#include <rotrem/josephus.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace rotrem {

namespace {

// Fenwick tree over slots 0..n-1, all initially present; supports removing a
// slot and finding the slot holding a given rank among those still present.
class LiveSlots {
  public:
    explicit LiveSlots(std::size_t n) : tree_(n + 1, 0), size_(n) {
        for (std::size_t i = 1; i <= n; ++i) {
            tree_[i] += 1;
            const std::size_t parent = i + (i & (~i + 1));
            if (parent <= n) {
                tree_[parent] += tree_[i];
            }
        }
    }

    std::size_t size() const noexcept { return size_; }

    /// Slot holding the rank-th (0-based) live element.
    std::size_t slot_at(std::size_t rank) const {
        std::size_t pos = 0;
        std::size_t remaining = rank + 1;
        for (std::size_t step = std::bit_floor(tree_.size() - 1); step > 0; step >>= 1) {
            const std::size_t next = pos + step;
            if (next < tree_.size() && tree_[next] < remaining) {
                pos = next;
                remaining -= tree_[next];
            }
        }
        return pos;  // tree index pos+1 is slot pos
    }

    void remove(std::size_t slot) {
        for (std::size_t i = slot + 1; i < tree_.size(); i += i & (~i + 1)) {
            tree_[i] -= 1;
        }
        --size_;
    }

  private:
    std::vector<std::size_t> tree_;
    std::size_t size_;
};

double log2_3() { return std::log2(3.0); }

// Three-way comparison of two base-2 logarithms with relative tolerance.
Verdict strictly_less(double lhs, double rhs) {
    const double scale = std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
    if (std::fabs(lhs - rhs) <= kLogTolerance * scale) {
        return Verdict::inconclusive;
    }
    return lhs < rhs ? Verdict::holds : Verdict::violated;
}

Verdict at_least(double lhs, double rhs) {
    const double scale = std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
    if (std::fabs(lhs - rhs) <= kLogTolerance * scale) {
        return Verdict::inconclusive;
    }
    return lhs >= rhs ? Verdict::holds : Verdict::violated;
}

} // namespace

const char *to_string(Verdict v) noexcept {
    switch (v) {
    case Verdict::holds:
        return "holds";
    case Verdict::violated:
        return "violated";
    case Verdict::not_applicable:
        return "not-applicable";
    case Verdict::inconclusive:
        return "inconclusive";
    case Verdict::equality:
        return "equality";
    }
    return "unknown";
}

std::string NegaBinary::to_string() const {
    if (bits.empty()) {
        return "0";
    }
    std::string out;
    out.reserve(bits.size());
    for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
        out.push_back(*it ? '1' : '0');
    }
    return out;
}

std::size_t NegaBinary::trailing_ones() const {
    std::size_t k = 0;
    while (k < bits.size() && bits[k] == 1) {
        ++k;
    }
    return k;
}

NegaBinary to_negabinary(const BigInt &x) {
    NegaBinary out;
    BigInt rest = x;
    while (sgn(rest) != 0) {
        const bool odd = mpz_odd_p(rest.get_mpz_t()) != 0;
        out.bits.push_back(odd ? 1 : 0);
        if (odd) {
            rest -= 1;
        }
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), 2);
        rest = -rest;
    }
    return out;
}

BigInt from_negabinary(const NegaBinary &digits) {
    BigInt value = 0;
    for (auto it = digits.bits.rbegin(); it != digits.bits.rend(); ++it) {
        value *= -2;
        value += *it;
    }
    return value;
}

NegaBinary parse_negabinary(const std::string &text) {
    NegaBinary out;
    for (auto it = text.rbegin(); it != text.rend(); ++it) {
        if (*it != '0' && *it != '1') {
            fail(ErrorKind::parse_error, "negabinary digits must be 0 or 1: '" + text + "'");
        }
        out.bits.push_back(*it == '1' ? 1 : 0);
    }
    while (!out.bits.empty() && out.bits.back() == 0) {
        out.bits.pop_back();
    }
    return out;
}

BigInt negabinary_ones(std::uint64_t k) {
    BigInt p = pow(2, k);
    if (k % 2 == 1) {
        p = -p;
    }
    BigInt out = 1 - p;
    mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), 3);
    return out;
}

SKDecomposition decompose_sk(const BigInt &x) {
    if (x < 1) {
        fail(ErrorKind::invalid_argument, "decompose_sk needs x >= 1, got " + rotrem::to_string(x));
    }
    // negabinary bits of x are the binary bits of (x + M) xor M, M = ...101010b
    const std::uint64_t width = bit_length(x) + 4;
    BigInt mask = pow(4, width / 2 + 1) - 1;
    mpz_divexact_ui(mask.get_mpz_t(), mask.get_mpz_t(), 3);
    mask *= 2;
    const BigInt bits = (x + mask) ^ mask;
    SKDecomposition out;
    out.k = mpz_scan0(bits.get_mpz_t(), 0);
    BigInt rest = x - negabinary_ones(out.k);
    const BigInt scale = pow(2, out.k + 1);
    if (!mpz_divisible_p(rest.get_mpz_t(), scale.get_mpz_t())) {
        fail(ErrorKind::internal_invariant, "s is not integral for x=" + rotrem::to_string(x));
    }
    mpz_divexact(out.s.get_mpz_t(), rest.get_mpz_t(), scale.get_mpz_t());
    return out;
}

BigInt l2_next(const BigInt &l) {
    const SKDecomposition d = decompose_sk(l);
    BigInt p3 = pow(3, d.k);
    BigInt tail = 1 - ((d.k % 2 == 1) ? BigInt(-p3) : p3);
    mpz_divexact_ui(tail.get_mpz_t(), tail.get_mpz_t(), 2);
    return pow(3, d.k + 1) * d.s + tail;
}

std::vector<L2Step> l2_sequence(std::uint64_t n_max) {
    if (n_max == 0) {
        fail(ErrorKind::invalid_argument, "l2_sequence needs n_max >= 1");
    }
    std::vector<BigInt> values{BigInt(1)};
    while (values.size() < n_max + 1) {
        values.push_back(l2_next(values.back()));
    }

    const double lg3 = log2_3();
    std::vector<L2Step> out;
    out.reserve(n_max);
    for (std::uint64_t i = 0; i < n_max; ++i) {
        L2Step step;
        step.n = i + 1;
        step.value = values[i];
        const SKDecomposition d = decompose_sk(step.value);
        step.s = d.s;
        step.k = d.k;

        const std::uint64_t bound = ceil_log2(step.value) + 1;
        const bool equal = step.k == bound;
        step.k_bound = (step.k <= bound && equal == (sgn(d.s) == 0)) ? Verdict::holds : Verdict::violated;

        const double log_l = log2_abs(step.value);
        if (step.n == 1) {
            // 8^{(log2 3)^0 - 1} = 1 = l_2(1)
            step.super_exponential = Verdict::equality;
        } else {
            const double log_bound = 3.0 * (std::pow(lg3, static_cast<double>(step.n - 1)) - 1.0);
            step.super_exponential = strictly_less(log_l, log_bound);
        }

        const double log_next = log2_abs(values[i + 1]);
        step.upper_27_8 = strictly_less(log_next, std::log2(27.0 / 8.0) + lg3 * log_l);
        step.lower_9_4 = sgn(d.s) == 0 ? at_least(log_next, std::log2(9.0 / 4.0) + lg3 * log_l)
                                       : Verdict::not_applicable;
        out.push_back(std::move(step));
    }
    return out;
}

JosephusTrace josephus_game(const TriangleRow &row) {
    const std::uint64_t x = row.cells.size();
    if (x == 0) {
        fail(ErrorKind::invalid_argument, "josephus game on an empty row");
    }
    JosephusTrace trace;
    trace.m = row.m;
    trace.x = x;
    trace.eliminated.reserve(x - 1);

    LiveSlots live(x);
    const std::uint64_t m = row.m;
    std::uint64_t rank = (m + x - 1) % x;  // column m-1 mod x; every slot is live at the start
    while (live.size() > 1) {
        const std::uint64_t size = live.size();
        const std::uint64_t victim = (rank + size - m % size) % size;
        const std::size_t column = live.slot_at(victim);
        trace.eliminated.push_back(column);
        live.remove(column);
        rank = (victim + (size - 1) - 1) % (size - 1);
    }
    trace.winner_column = live.slot_at(0);
    trace.winner_value = row.cells[trace.winner_column];
    return trace;
}

JosephusTrace josephus_game(std::uint32_t m, std::uint64_t x) { return josephus_game(row(m, x)); }

std::vector<std::uint64_t> josephus_order(std::uint64_t n, std::uint64_t x) {
    if (n < 2 || x == 0) {
        fail(ErrorKind::invalid_argument, "josephus_survivor needs n >= 2 and x >= 1");
    }
    std::vector<std::uint64_t> order;
    order.reserve(x);
    LiveSlots live(x);
    std::uint64_t rank = 0;
    while (live.size() > 1) {
        const std::uint64_t size = live.size();
        const std::uint64_t victim = (rank + (n - 1) % size) % size;
        const std::size_t slot = live.slot_at(victim);
        order.push_back(slot + 1);
        live.remove(slot);
        rank = victim % (size - 1);
    }
    order.push_back(live.slot_at(0) + 1);
    return order;
}

std::uint64_t josephus_survivor(std::uint64_t n, std::uint64_t x) { return josephus_order(n, x).back(); }

} // namespace rotrem

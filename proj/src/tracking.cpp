#include <rotrem/error.hpp>
#include <rotrem/tracking.hpp>

#include <string>

namespace rotrem {

namespace {

void require_start(std::uint32_t m, const BigInt &x, std::uint32_t r) {
    if (m == 0) {
        fail(ErrorKind::invalid_argument, "rotation number m must be at least 1");
    }
    if (x < 1) {
        fail(ErrorKind::invalid_argument, "start row x must be at least 1");
    }
    if (r >= m) {
        fail(ErrorKind::invalid_argument,
             "start column r=" + std::to_string(r) + " must be below m=" + std::to_string(m));
    }
}

// One visit-to-visit step: (x, r) -> (x + q, x + r - q m), q = floor((x + r)/m).
void step(std::uint32_t m, BigInt &x, std::uint32_t &r, BigInt &scratch) {
    scratch = x + r;
    const std::uint64_t rem = mpz_fdiv_q_ui(scratch.get_mpz_t(), scratch.get_mpz_t(), m);
    x += scratch;
    r = static_cast<std::uint32_t>(rem);
}

} // namespace

std::vector<TrackState> track(std::uint32_t m, const BigInt &x0, std::uint32_t r0,
                              std::size_t count) {
    require_start(m, x0, r0);
    std::vector<TrackState> out;
    out.reserve(count);
    BigInt x = x0;
    std::uint32_t r = r0;
    BigInt scratch;
    for (std::size_t n = 0; n < count; ++n) {
        if (n > 0) {
            step(m, x, r, scratch);
        }
        out.push_back(TrackState{n, x, r, BigInt((m + 1) * x + r)});
    }
    return out;
}

std::vector<std::uint32_t> column_sequence(std::uint32_t m, const BigInt &x0, std::uint32_t r0,
                                           std::size_t count) {
    require_start(m, x0, r0);
    std::vector<std::uint32_t> out;
    out.reserve(count);
    BigInt x = x0;
    std::uint32_t r = r0;
    BigInt scratch;
    for (std::size_t n = 0; n < count; ++n) {
        if (n > 0) {
            step(m, x, r, scratch);
        }
        out.push_back(r);
    }
    return out;
}

std::vector<BigInt> y_sequence(std::uint32_t m, const BigInt &x, std::uint32_t r,
                               std::size_t count) {
    require_start(m, x, r);
    std::vector<BigInt> out;
    out.reserve(count);
    BigInt y = (m + 1) * x + r;
    for (std::size_t n = 0; n < count; ++n) {
        if (n > 0) {
            y *= m + 1;
            mpz_fdiv_q_ui(y.get_mpz_t(), y.get_mpz_t(), m);
        }
        out.push_back(y);
    }
    return out;
}

CongruenceWitness verify_congruence(std::uint32_t m, const BigInt &x, std::uint32_t r,
                                    std::uint64_t n) {
    require_start(m, x, r);
    if (n == 0) {
        fail(ErrorKind::invalid_argument, "verify_congruence needs n >= 1");
    }
    const auto columns = column_sequence(m, x, r, n + 1);

    CongruenceWitness w;
    w.modulus = pow(m, n);
    BigInt lhs = pow(m + 1, n) * ((m + 1) * x + r);

    // sum_{k=1..n} (m+1)^{n-k} m^{k-1} r_k, Horner-style in (m+1) from k = 1 up
    BigInt rhs = 0;
    BigInt m_pow = 1;
    BigInt term;
    for (std::uint64_t k = 1; k <= n; ++k) {
        rhs *= m + 1;
        term = m_pow * columns[k];
        rhs += term;
        m_pow *= m;
    }
    w.lhs = mod(lhs, w.modulus);
    w.rhs = mod(rhs, w.modulus);
    w.holds = w.lhs == w.rhs;
    return w;
}

TailMatch reconstruct_from_tail(std::uint32_t m, std::span<const std::uint32_t> tail,
                                std::uint64_t x_max) {
    if (m == 0 || x_max == 0) {
        fail(ErrorKind::invalid_argument, "reconstruct_from_tail needs m >= 1 and x_max >= 1");
    }
    TailMatch out;
    for (std::uint32_t digit : tail) {
        if (digit >= m) {
            out.status = TailMatchStatus::not_found;
            return out;
        }
    }
    BigInt x;
    BigInt scratch;
    for (std::uint64_t x0 = 1; x0 <= x_max; ++x0) {
        for (std::uint32_t r0 = 0; r0 < m; ++r0) {
            x = from_u64(x0);
            std::uint32_t r = r0;
            bool ok = true;
            for (std::uint32_t digit : tail) {
                step(m, x, r, scratch);
                if (r != digit) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                out.matches.push_back(StartPosition{x0, r0});
            }
        }
    }
    if (out.matches.empty()) {
        out.status = TailMatchStatus::not_found;
    } else if (out.matches.size() == 1) {
        out.status = TailMatchStatus::unique;
    } else {
        out.status = TailMatchStatus::ambiguous;
    }
    return out;
}

AperiodicityReport scan_periodic_tails(std::span<const std::uint32_t> seq, std::size_t max_period) {
    const std::size_t window = seq.size();
    if (max_period == 0 || window < 2 * max_period) {
        fail(ErrorKind::invalid_argument, "aperiodicity scan needs max_period >= 1 and window >= 2*max_period");
    }
    AperiodicityReport report;
    report.window = window;
    report.max_period = max_period;
    const std::size_t last_start = window - 2 * max_period;

    for (std::size_t p = 1; p <= max_period; ++p) {
        PeriodWitnesses row;
        row.period = p;
        row.witness.assign(last_start + 1, std::nullopt);
        // next_mismatch = first n >= t with seq[n+p] != seq[n], filled right to left
        std::optional<std::size_t> next_mismatch;
        for (std::size_t n = window - p; n-- > 0;) {
            if (seq[n + p] != seq[n]) {
                next_mismatch = n;
            }
            if (n <= last_start) {
                row.witness[n] = next_mismatch;
            }
        }
        if (!report.periodic_tail_found && !row.witness[last_start]) {
            std::size_t t = last_start;
            while (t > 0 && !row.witness[t - 1]) {
                --t;
            }
            report.periodic_tail_found = true;
            report.periodic_period = p;
            report.periodic_start = t;
        }
        report.periods.push_back(std::move(row));
    }
    return report;
}

AperiodicityReport aperiodicity_check(std::uint32_t m, const BigInt &x, std::uint32_t r,
                                      std::size_t window, std::size_t max_period) {
    const auto seq = column_sequence(m, x, r, window);
    return scan_periodic_tails(seq, max_period);
}

} // namespace rotrem

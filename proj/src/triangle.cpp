#include <rotrem/error.hpp>
#include <rotrem/triangle.hpp>

#include <limits>
#include <string>

namespace rotrem {

namespace {

void require_m(std::uint32_t m) {
    if (m == 0) {
        fail(ErrorKind::invalid_argument, "rotation number m must be at least 1");
    }
}

void require_x(std::uint64_t x) {
    if (x == 0) {
        fail(ErrorKind::invalid_argument, "row index x must be at least 1");
    }
}

} // namespace

TriangleSweep::TriangleSweep(std::uint32_t m) : m_(m), row_(std::vector<Cell>{1}) { require_m(m); }

void TriangleSweep::advance() {
    const Cell old_head = row_.front();
    if (old_head == std::numeric_limits<Cell>::max()) {
        fail(ErrorKind::overflow, "appended value overflows at row " + std::to_string(x_ + 1));
    }
    row_.rotate_left(m_);
    row_.push_back(old_head + 1);
    ++x_;
}

TriangleRow TriangleSweep::snapshot() const { return TriangleRow{m_, x_, row_.to_vector()}; }

std::uint64_t FrequencyRow::total() const {
    std::uint64_t sum = 0;
    for (const auto &[value, count] : counts) {
        sum += count;
    }
    return sum;
}

TriangleRow row(std::uint32_t m, std::uint64_t x) {
    require_m(m);
    require_x(x);
    TriangleSweep sweep(m);
    while (sweep.row_index() < x) {
        sweep.advance();
    }
    return sweep.snapshot();
}

Cell entry(std::uint32_t m, std::uint64_t x, std::uint64_t r) { return row(m, x).at(r); }

std::vector<Cell> heads(std::uint32_t m, std::uint64_t x_max) {
    require_m(m);
    require_x(x_max);
    std::vector<Cell> out;
    out.reserve(x_max);
    TriangleSweep sweep(m);
    out.push_back(sweep.head());
    while (sweep.row_index() < x_max) {
        sweep.advance();
        out.push_back(sweep.head());
    }
    return out;
}

CappedSequence leads(std::uint32_t m, std::uint64_t n_max, std::uint64_t row_cap) {
    require_m(m);
    if (n_max == 0 || row_cap == 0) {
        fail(ErrorKind::invalid_argument, "leads needs n_max >= 1 and a positive row cap");
    }
    CappedSequence out;
    TriangleSweep sweep(m);
    out.values.push_back(1);
    while (out.values.size() < n_max) {
        if (sweep.row_index() >= row_cap) {
            out.cap_reached = true;
            break;
        }
        sweep.advance();
        if (sweep.head() == 1) {
            out.values.push_back(sweep.row_index());
        }
    }
    out.rows_scanned = sweep.row_index();
    return out;
}

CappedSequence appearances(std::uint32_t m, std::uint64_t n_max, std::uint64_t row_cap) {
    require_m(m);
    if (n_max == 0 || row_cap == 0) {
        fail(ErrorKind::invalid_argument, "appearances needs n_max >= 1 and a positive row cap");
    }
    // A new value v+1 is appended only once v leads a row, so values first
    // appear in increasing order and the next unseen value is always max+1.
    CappedSequence out;
    TriangleSweep sweep(m);
    out.values.push_back(1);
    while (out.values.size() < n_max) {
        if (sweep.row_index() >= row_cap) {
            out.cap_reached = true;
            break;
        }
        sweep.advance();
        if (sweep.appended() == out.values.size() + 1) {
            out.values.push_back(sweep.row_index());
        }
    }
    out.rows_scanned = sweep.row_index();
    return out;
}

std::uint64_t one_position(const TriangleRow &r) {
    std::uint64_t found = 0;
    std::uint64_t count = 0;
    for (std::uint64_t c = 0; c < r.cells.size(); ++c) {
        if (r.cells[c] == 1) {
            found = c;
            ++count;
        }
    }
    if (count != 1) {
        fail(ErrorKind::internal_invariant, "row " + std::to_string(r.x) + " contains " +
                                                std::to_string(count) + " cells equal to 1");
    }
    return found;
}

std::uint64_t one_position(std::uint32_t m, std::uint64_t x) { return one_position(row(m, x)); }

FrequencyRow frequency_row(const TriangleRow &r) {
    FrequencyRow out;
    out.x = r.x;
    for (Cell v : r.cells) {
        ++out.counts[v];
    }
    return out;
}

FrequencyRow frequency_row(std::uint32_t m, std::uint64_t x) { return frequency_row(row(m, x)); }

FrequencyRow reduced_frequency_row(std::uint32_t m, std::uint64_t n, std::uint64_t row_cap) {
    require_x(n);
    const CappedSequence firsts = appearances(m, n, row_cap);
    if (firsts.values.size() < n) {
        fail(ErrorKind::cap_reached, "a_" + std::to_string(m) + "(" + std::to_string(n) +
                                         ") lies beyond the row cap " + std::to_string(row_cap));
    }
    return frequency_row(row(m, firsts.values.back()));
}

} // namespace rotrem

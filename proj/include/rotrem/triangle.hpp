#pragma once

// The rotating-queue triangle T_m: row x+1 is row x rotated left by m with
// 1 + (head of row x) appended. Rows are 1-indexed, columns 0-indexed.

#include <rotrem/rotating_queue.hpp>

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace rotrem {

using Cell = std::uint32_t;

inline constexpr std::uint64_t kDefaultRowCap = 1'000'000;

struct TriangleRow {
    std::uint32_t m = 1;
    std::uint64_t x = 1;
    std::vector<Cell> cells;

    Cell at(std::uint64_t column) const { return cells[column % cells.size()]; }

    friend bool operator==(const TriangleRow &, const TriangleRow &) = default;
};

/// Row-by-row generator keeping only the current row.
class TriangleSweep {
  public:
    explicit TriangleSweep(std::uint32_t m);

    std::uint32_t m() const noexcept { return m_; }
    std::uint64_t row_index() const noexcept { return x_; }
    Cell head() const noexcept { return row_.front(); }
    /// Value in column x-1 of the current row.
    Cell appended() const noexcept { return row_.back(); }
    Cell operator[](std::size_t column) const noexcept { return row_[column]; }
    std::span<const Cell> cells() const noexcept { return row_.view(); }

    /// Advances to the next row. Throws Error(overflow) if the appended value would wrap.
    void advance();

    TriangleRow snapshot() const;

  private:
    std::uint32_t m_;
    std::uint64_t x_ = 1;
    RotatingQueue<Cell> row_;
};

/// Sequence computed under a row cap; `cap_reached` marks a partial result.
struct CappedSequence {
    std::vector<std::uint64_t> values;
    bool cap_reached = false;
    std::uint64_t rows_scanned = 0;
};

struct FrequencyRow {
    std::uint64_t x = 0;
    std::map<Cell, std::uint64_t> counts;

    std::uint64_t total() const;
};

TriangleRow row(std::uint32_t m, std::uint64_t x);

Cell entry(std::uint32_t m, std::uint64_t x, std::uint64_t r);

/// h_m(1..x_max) in one forward sweep.
std::vector<Cell> heads(std::uint32_t m, std::uint64_t x_max);

/// l_m(1..n_max): rows led by the original 1.
CappedSequence leads(std::uint32_t m, std::uint64_t n_max, std::uint64_t row_cap = kDefaultRowCap);

/// a_m(1..n_max): first row whose appended cell equals n.
CappedSequence appearances(std::uint32_t m, std::uint64_t n_max,
                           std::uint64_t row_cap = kDefaultRowCap);

/// j_m(x): column of the unique 1 in row x.
std::uint64_t one_position(const TriangleRow &row);
std::uint64_t one_position(std::uint32_t m, std::uint64_t x);

FrequencyRow frequency_row(const TriangleRow &row);
FrequencyRow frequency_row(std::uint32_t m, std::uint64_t x);

/// f_m(n, .) = F_m(a_m(n), .). Throws Error(cap_reached) if a_m(n) lies beyond the cap.
FrequencyRow reduced_frequency_row(std::uint32_t m, std::uint64_t n,
                                   std::uint64_t row_cap = kDefaultRowCap);

} // namespace rotrem

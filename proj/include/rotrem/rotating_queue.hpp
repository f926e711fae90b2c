#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rotrem {

/// Queue with O(1) amortized left rotation and append.
///
/// Elements live in a vector behind a moving head index. Rotating left by k
/// re-appends the first k elements and advances the head; the dead prefix is
/// compacted once it outgrows the live part, so memory stays O(size).
template <class T> class RotatingQueue {
  public:
    RotatingQueue() = default;
    explicit RotatingQueue(std::vector<T> items) : buf_(std::move(items)) {}

    std::size_t size() const noexcept { return buf_.size() - head_; }
    bool empty() const noexcept { return size() == 0; }

    const T &operator[](std::size_t column) const noexcept { return buf_[head_ + column]; }
    const T &front() const noexcept { return buf_[head_]; }
    const T &back() const noexcept { return buf_.back(); }

    std::span<const T> view() const noexcept {
        return std::span<const T>(buf_.data() + head_, size());
    }

    /// Rotates left by k positions; the element at column k % size() becomes the head.
    void rotate_left(std::size_t k) {
        const std::size_t n = size();
        if (n == 0) {
            return;
        }
        k %= n;
        for (std::size_t i = 0; i < k; ++i) {
            T value = buf_[head_ + i];
            buf_.push_back(std::move(value));
        }
        head_ += k;
        maybe_compact();
    }

    void push_back(T value) { buf_.push_back(std::move(value)); }

    std::vector<T> to_vector() const { return std::vector<T>(view().begin(), view().end()); }

  private:
    void maybe_compact() {
        if (head_ > 64 && head_ > size()) {
            buf_.erase(buf_.begin(), buf_.begin() + static_cast<std::ptrdiff_t>(head_));
            head_ = 0;
        }
    }

    std::vector<T> buf_;
    std::size_t head_ = 0;
};

} // namespace rotrem

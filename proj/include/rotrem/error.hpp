#pragma once

#include <stdexcept>
#include <string>

namespace rotrem {

enum class ErrorKind {
    invalid_argument,
    not_in_ring,          // denominator shares a factor with m
    invalid_seed,         // sqrt seed is not a root of c mod m
    unsupported,          // e.g. square-root sequences for even m
    insufficient_digits,
    not_divisible,        // unshift of a stream with a nonzero leading digit
    internal_invariant,
    overflow,
    cap_reached,
    parse_error,
};

const char *to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string &what) {
    throw Error(kind, what);
}

} // namespace rotrem

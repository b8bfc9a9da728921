#ifndef LPA_COUNT_HPP
#define LPA_COUNT_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "lpa/errors.hpp"

namespace lpa {

// Edge multiplicity of a bundle: a positive integer or omega.
class Multiplicity {
 public:
  static Multiplicity finite(std::uint64_t n) {
    if (n == 0) throw InputError("bundle multiplicity must be at least 1");
    return Multiplicity(n);
  }
  static Multiplicity omega() { return Multiplicity(0); }

  bool is_omega() const noexcept { return value_ == 0; }
  // Only meaningful for finite multiplicities.
  std::uint64_t value() const noexcept { return value_; }

  bool operator==(const Multiplicity&) const = default;

 private:
  explicit Multiplicity(std::uint64_t v) : value_(v) {}
  std::uint64_t value_;  // 0 encodes omega
};

// A natural number or infinity. Arithmetic saturates at infinity; finite
// overflow is reported rather than silently saturated.
class Count {
 public:
  constexpr Count() = default;
  constexpr Count(std::uint64_t n) : value_(n) {}  // NOLINT(implicit)

  static constexpr Count infinite() {
    Count c;
    c.infinite_ = true;
    return c;
  }

  constexpr bool is_finite() const noexcept { return !infinite_; }
  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr std::uint64_t value() const {
    if (infinite_) throw std::logic_error("Count::value on infinite count");
    return value_;
  }

  friend Count operator+(Count a, Count b) {
    if (a.infinite_ || b.infinite_) return infinite();
    if (a.value_ > std::numeric_limits<std::uint64_t>::max() - b.value_) {
      throw std::overflow_error("path count exceeds 64 bits");
    }
    return Count(a.value_ + b.value_);
  }

  friend Count operator*(Count a, Count b) {
    if ((a.is_finite() && a.value_ == 0) || (b.is_finite() && b.value_ == 0)) {
      return Count(0);
    }
    if (a.infinite_ || b.infinite_) return infinite();
    if (a.value_ > std::numeric_limits<std::uint64_t>::max() / b.value_) {
      throw std::overflow_error("path count exceeds 64 bits");
    }
    return Count(a.value_ * b.value_);
  }

  Count& operator+=(Count other) { return *this = *this + other; }

  friend bool operator==(Count a, Count b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

  std::string to_string() const {
    return infinite_ ? std::string("inf") : std::to_string(value_);
  }

  friend std::ostream& operator<<(std::ostream& os, Count c) {
    return os << c.to_string();
  }

 private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

inline Count to_count(Multiplicity m) {
  return m.is_omega() ? Count::infinite() : Count(m.value());
}

}  // namespace lpa

#endif  // LPA_COUNT_HPP

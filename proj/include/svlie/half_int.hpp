#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "svlie/rational.hpp"

namespace svlie {

/// An element of ½ℤ, stored as twice its value so that all arithmetic is exact.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(std::int64_t twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }
  static constexpr HalfInt integer(std::int64_t n) { return from_twice(2 * n); }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr bool is_half_odd() const { return !is_integer(); }
  constexpr bool is_zero() const { return twice_ == 0; }

  // Precondition: is_integer().
  constexpr std::int64_t as_integer() const { return twice_ / 2; }

  constexpr HalfInt abs() const { return from_twice(twice_ < 0 ? -twice_ : twice_); }

  Rational to_rational() const { return make_rational(twice_, 2); }

  /// "3", "-2", "1/2", "-3/2".
  std::string str() const;

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a) { return from_twice(-a.twice_); }
  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

 private:
  std::int64_t twice_ = 0;
};

/// The grading value of a homogeneous element (the L_0-eigenvalue).
using Degree = HalfInt;

constexpr HalfInt half(std::int64_t twice) { return HalfInt::from_twice(twice); }

}  // namespace svlie

#pragma once

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <ostream>

#include "s2sym/errors.hpp"

namespace s2sym {

/// Signed 64-bit integer whose arithmetic throws OverflowError instead of
/// wrapping. Used as the scalar of every exact matrix and word exponent.
class Integer {
 public:
  constexpr Integer() = default;
  constexpr Integer(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  constexpr Integer(int v) : v_(v) {}            // NOLINT(google-explicit-constructor)

  constexpr std::int64_t value() const { return v_; }
  explicit constexpr operator std::int64_t() const { return v_; }
  explicit operator double() const { return static_cast<double>(v_); }
  explicit operator long double() const { return static_cast<long double>(v_); }

  friend Integer operator+(Integer a, Integer b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw OverflowError("integer overflow in addition");
    return r;
  }
  friend Integer operator-(Integer a, Integer b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
  }
  friend Integer operator*(Integer a, Integer b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
  }
  /// Truncating division; callers use it only where the quotient is exact.
  friend Integer operator/(Integer a, Integer b) {
    if (b.v_ == 0) throw UsageError("integer division by zero");
    if (a.v_ == std::numeric_limits<std::int64_t>::min() && b.v_ == -1)
      throw OverflowError("integer overflow in division");
    return a.v_ / b.v_;
  }
  friend Integer operator%(Integer a, Integer b) {
    if (b.v_ == 0) throw UsageError("integer modulo by zero");
    if (b.v_ == -1) return 0;
    return a.v_ % b.v_;
  }
  Integer operator-() const { return Integer(0) - *this; }
  Integer operator+() const { return *this; }

  Integer& operator+=(Integer o) { return *this = *this + o; }
  Integer& operator-=(Integer o) { return *this = *this - o; }
  Integer& operator*=(Integer o) { return *this = *this * o; }

  friend constexpr bool operator==(Integer, Integer) = default;
  friend constexpr auto operator<=>(Integer, Integer) = default;

  friend std::ostream& operator<<(std::ostream& os, Integer x) { return os << x.v_; }

 private:
  std::int64_t v_ = 0;
};

inline Integer abs(Integer x) { return x < 0 ? -x : x; }

/// Mathematical modulus in [0, |m|).
inline Integer floor_mod(Integer a, Integer m) {
  Integer r = a % m;
  if (r < 0) r += abs(m);
  return r;
}

}  // namespace s2sym

template <>
struct std::hash<s2sym::Integer> {
  std::size_t operator()(s2sym::Integer x) const noexcept { return std::hash<std::int64_t>{}(x.value()); }
};

namespace Eigen {

template <>
struct NumTraits<s2sym::Integer> : GenericNumTraits<std::int64_t> {
  using Real = s2sym::Integer;
  using NonInteger = double;
  using Literal = s2sym::Integer;
  using Nested = s2sym::Integer;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline Real highest() { return std::numeric_limits<std::int64_t>::max(); }
  static inline Real lowest() { return std::numeric_limits<std::int64_t>::min(); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

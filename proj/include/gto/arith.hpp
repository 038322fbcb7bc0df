#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "gto/errors.hpp"

// Checked 64-bit integer arithmetic. Every entry of an exponent matrix and
// every potential flows through these; wrap-around raises Overflow.
namespace gto {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow, "integer overflow in addition");
  }
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow, "integer overflow in subtraction");
  }
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow, "integer overflow in multiplication");
  }
  return out;
}

/// Floor division rounding toward negative infinity; `den` must be positive.
inline std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && (num < 0)) --q;
  return q;
}

/// Exact rational in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) {
      throw Error(ErrorCode::DimensionMismatch, "zero denominator");
    }
    if (den < 0) {
      num = checked_sub(0, num);
      den = checked_sub(0, den);
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  /// Floor of (k * value).
  std::int64_t floor_times(std::int64_t k) const {
    return floor_div(checked_mul(k, num_), den_);
  }

  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace gto

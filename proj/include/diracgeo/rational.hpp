#pragma once

#include <cstdint>
#include <string>

#include "diracgeo/error.hpp"

namespace diracgeo {

// Exact rational number over 64-bit integers. Always reduced to lowest
// terms with a positive denominator. Intermediate products run through
// 128-bit arithmetic; a reduced result that does not fit in 64 bits
// throws OverflowError.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }
  bool is_negative() const { return num_ < 0; }

  double to_double() const;
  std::string str() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);  // throws DomainError on /0

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

  // Total order; exact (cross-multiplication in 128 bits).
  int compare(const Rational& o) const;

  // this^e for integer e. 0^negative throws DomainError.
  Rational pow_int(std::int64_t e) const;

  // Exact square root if both numerator and denominator are perfect
  // squares; returns false otherwise. Requires a nonnegative value.
  bool sqrt_exact(Rational* out) const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace diracgeo

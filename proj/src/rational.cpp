#include "diracgeo/rational.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace diracgeo {

namespace {

using int128 = __int128;

int128 gcd128(int128 a, int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw OverflowError("rational arithmetic overflows 64-bit range");
  }
  return static_cast<std::int64_t>(v);
}

Rational make_reduced(int128 num, int128 den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  Rational r = make_reduced(num, den);
  num_ = r.num_;
  den_ = r.den_;
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  return make_reduced(int128(a.num_) * b.den_ + int128(b.num_) * a.den_,
                      int128(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return make_reduced(int128(a.num_) * b.num_, int128(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  return make_reduced(int128(a.num_) * b.den_, int128(a.den_) * b.num_);
}

int Rational::compare(const Rational& o) const {
  int128 lhs = int128(num_) * o.den_;
  int128 rhs = int128(o.num_) * den_;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

Rational Rational::pow_int(std::int64_t e) const {
  if (e == 0) return Rational(1);
  if (is_zero() && e < 0) throw DomainError("0 raised to a negative power");
  Rational base = *this;
  std::int64_t n = e;
  if (n < 0) {
    base = Rational(1) / base;
    n = -n;
  }
  Rational acc(1);
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = (n >>= 1) ? base * base : base;
  }
  return acc;
}

namespace {

bool isqrt_exact(std::int64_t v, std::int64_t* root) {
  if (v < 0) return false;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
  for (std::int64_t c = r > 1 ? r - 1 : 0; c <= r + 1; ++c) {
    if (c * c == v) {
      *root = c;
      return true;
    }
  }
  return false;
}

}  // namespace

bool Rational::sqrt_exact(Rational* out) const {
  if (is_negative()) return false;
  std::int64_t rn = 0;
  std::int64_t rd = 0;
  if (!isqrt_exact(num_, &rn) || !isqrt_exact(den_, &rd)) return false;
  *out = Rational(rn, rd);
  return true;
}

}  // namespace diracgeo

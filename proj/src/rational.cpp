#include "formbounds/rational.hpp"

#include <limits>
#include <ostream>

namespace formbounds {

namespace {

__int128 abs128(__int128 x) { return x < 0 ? -x : x; }

__int128 gcd128(__int128 a, __int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow_checked(__int128 x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("rational arithmetic overflowed 64-bit storage");
  }
  return static_cast<std::int64_t>(x);
}

}  // namespace

Rational Rational::reduced(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational();
  __int128 g = gcd128(num, den);
  Rational r;
  r.num_ = narrow_checked(num / g);
  r.den_ = narrow_checked(den / g);
  return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = reduced(num, den);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  *this = reduced(static_cast<__int128>(num_) * o.den_ +
                      static_cast<__int128>(o.num_) * den_,
                  static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  *this = reduced(static_cast<__int128>(num_) * o.den_ -
                      static_cast<__int128>(o.num_) * den_,
                  static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  *this = reduced(static_cast<__int128>(num_) * o.num_,
                  static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  *this = reduced(static_cast<__int128>(num_) * o.den_,
                  static_cast<__int128>(den_) * o.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  os << r.num();
  if (r.den() != 1) os << '/' << r.den();
  return os;
}

}  // namespace formbounds

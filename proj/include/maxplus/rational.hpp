#pragma once

#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>

namespace maxplus {

/// Exact rational arithmetic over 64-bit integers.
///
/// The denominator is kept positive and the fraction fully reduced, so
/// equality is plain member comparison. Intermediate products are carried in
/// 128 bits; a result whose reduced numerator or denominator does not fit in
/// 64 bits throws std::overflow_error.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(long long value) : num_(value) {}  // NOLINT: implicit by design
  Rational(long long num, long long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    *this = fromWide(num, den);
  }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool isInteger() const { return den_ == 1; }
  double toDouble() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend Rational operator+(const Rational& x, const Rational& y) {
    return fromWide(wide(x.num_) * y.den_ + wide(y.num_) * x.den_,
                    wide(x.den_) * y.den_);
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return fromWide(wide(x.num_) * y.den_ - wide(y.num_) * x.den_,
                    wide(x.den_) * y.den_);
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return fromWide(wide(x.num_) * y.num_, wide(x.den_) * y.den_);
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw std::domain_error("Rational: division by zero");
    return fromWide(wide(x.num_) * y.den_, wide(x.den_) * y.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
  friend bool operator<(const Rational& x, const Rational& y) {
    return wide(x.num_) * y.den_ < wide(y.num_) * x.den_;
  }
  friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
  friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
  friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }

  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  using Wide = __int128;
  static constexpr Wide wide(long long v) { return static_cast<Wide>(v); }
  static Wide gcdWide(Wide a, Wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      Wide t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  static Rational fromWide(Wide num, Wide den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num == 0) return Rational();
    Wide g = gcdWide(num, den);
    num /= g;
    den /= g;
    constexpr Wide lo = -wide(0x7fffffffffffffffLL) - 1;
    constexpr Wide hi = wide(0x7fffffffffffffffLL);
    if (num < lo || num > hi || den > hi)
      throw std::overflow_error("Rational: value out of 64-bit range");
    Rational r;
    r.num_ = static_cast<long long>(num);
    r.den_ = static_cast<long long>(den);
    return r;
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace maxplus

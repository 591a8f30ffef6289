#pragma once

#include <Eigen/Core>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "maxplus/rational.hpp"

namespace maxplus {

/// An element of the max-plus semiring: a finite value of the underlying
/// numeric type, or the additive identity eps (the formal -infinity).
///
/// eps is a tagged state, not a sentinel value, so exact integer arithmetic
/// never loses it and the absorbing rules hold without IEEE special cases.
/// Supported numeric types: long long (exact), Rational (exact), double.
template <typename T>
class MaxScalar {
 public:
  using Numeric = T;

  /// Default-constructed scalars are eps, the additive identity.
  constexpr MaxScalar() = default;

  static constexpr MaxScalar eps() { return MaxScalar(); }
  /// The multiplicative identity e = 0.
  static constexpr MaxScalar unit() { return finite(T{0}); }
  static constexpr MaxScalar finite(const T& v) {
    MaxScalar s;
    s.value_ = v;
    s.finite_ = true;
    return s;
  }

  constexpr bool isEps() const { return !finite_; }
  constexpr bool isFinite() const { return finite_; }
  const T& value() const {
    if (!finite_) throw std::domain_error("MaxScalar: eps has no finite value");
    return value_;
  }

  friend constexpr bool operator==(const MaxScalar& x, const MaxScalar& y) {
    return x.finite_ == y.finite_ && (!x.finite_ || x.value_ == y.value_);
  }
  friend constexpr bool operator!=(const MaxScalar& x, const MaxScalar& y) {
    return !(x == y);
  }
  /// Total order with eps below every finite value.
  friend constexpr bool operator<(const MaxScalar& x, const MaxScalar& y) {
    if (x.finite_ && y.finite_) return x.value_ < y.value_;
    return !x.finite_ && y.finite_;
  }

  friend std::ostream& operator<<(std::ostream& os, const MaxScalar& s) {
    if (s.isEps()) return os << "eps";
    return os << s.value_;
  }

 private:
  T value_{};
  bool finite_ = false;
};

/// Shorthand for a finite max-plus scalar with deduced numeric type.
template <typename T>
constexpr MaxScalar<T> fin(const T& v) {
  return MaxScalar<T>::finite(v);
}
inline constexpr MaxScalar<long long> fin(int v) {
  return MaxScalar<long long>::finite(v);
}

/// Semiring addition: max under the order with eps smallest.
template <typename T>
constexpr MaxScalar<T> oplus(const MaxScalar<T>& x, const MaxScalar<T>& y) {
  return x < y ? y : x;
}

/// Semiring multiplication: sum of finite values, eps absorbing.
template <typename T>
constexpr MaxScalar<T> otimes(const MaxScalar<T>& x, const MaxScalar<T>& y) {
  if (x.isEps() || y.isEps()) return MaxScalar<T>::eps();
  return MaxScalar<T>::finite(x.value() + y.value());
}

/// Numeric type used for circuit means and eigenvalues of T-valued matrices:
/// exact integers promote to Rational, Rational and double stay themselves.
template <typename T>
struct MeanNumeric {
  using type = T;
};
template <>
struct MeanNumeric<long long> {
  using type = Rational;
};
template <typename T>
using mean_t = typename MeanNumeric<T>::type;

inline Rational ratio(long long num, long long den) { return Rational(num, den); }
inline Rational ratio(const Rational& num, long long den) {
  return num / Rational(den);
}
inline double ratio(double num, long long den) {
  return num / static_cast<double>(den);
}

inline double toDouble(double v) { return v; }
inline double toDouble(long long v) { return static_cast<double>(v); }
inline double toDouble(const Rational& v) { return v.toDouble(); }

/// Absolute-tolerance comparison; exact types ignore the tolerance.
inline bool approxEqual(double x, double y, double tau = 1e-9) {
  return std::abs(x - y) <= tau;
}
inline bool approxEqual(long long x, long long y, double = 0.0) { return x == y; }
inline bool approxEqual(const Rational& x, const Rational& y, double = 0.0) {
  return x == y;
}
template <typename T>
bool approxEqual(const MaxScalar<T>& x, const MaxScalar<T>& y, double tau = 1e-9) {
  if (x.isEps() || y.isEps()) return x.isEps() == y.isEps();
  return approxEqual(x.value(), y.value(), tau);
}

}  // namespace maxplus

namespace Eigen {

template <typename T>
struct NumTraits<maxplus::MaxScalar<T>>
    : GenericNumTraits<maxplus::MaxScalar<T>> {
  typedef maxplus::MaxScalar<T> Real;
  typedef maxplus::MaxScalar<T> NonInteger;
  typedef maxplus::MaxScalar<T> Nested;
  typedef maxplus::MaxScalar<T> Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 2
  };
  static inline Real epsilon() { return Real(); }
  static inline Real dummy_precision() { return Real(); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#pragma once

#include <array>
#include <stdexcept>

#include "maxplus/matrix.hpp"

namespace maxplus {
namespace walk {

/// The four finite walk parameters. P and Q weight the left and right moves,
/// R and S are the companion matrices closing the product table, and
/// H = P + Q is the local coin.
template <typename T>
struct Coin {
  T a{};
  T b{};
  T c{};
  T d{};

  Mat2<T> p() const { return topRow(a, b); }
  Mat2<T> q() const { return bottomRow(c, d); }
  Mat2<T> r() const { return topRow(c, d); }
  Mat2<T> s() const { return bottomRow(a, b); }
  Mat2<T> h() const {
    Mat2<T> m;
    m << fin(a), fin(b), fin(c), fin(d);
    return m;
  }

  /// Branch discriminant of the eigenvalue formula: (b+c) - (a+d).
  T delta() const { return (b + c) - (a + d); }

 private:
  static MaxScalar<T> fin(const T& v) { return MaxScalar<T>::finite(v); }
  static Mat2<T> topRow(const T& x, const T& y) {
    Mat2<T> m;
    m << fin(x), fin(y), MaxScalar<T>::eps(), MaxScalar<T>::eps();
    return m;
  }
  static Mat2<T> bottomRow(const T& x, const T& y) {
    Mat2<T> m;
    m << MaxScalar<T>::eps(), MaxScalar<T>::eps(), fin(x), fin(y);
    return m;
  }
};

enum class Basis { P, Q, R, S };

template <typename T>
Mat2<T> basisMatrix(const Coin<T>& coin, Basis which) {
  switch (which) {
    case Basis::P: return coin.p();
    case Basis::Q: return coin.q();
    case Basis::R: return coin.r();
    case Basis::S: return coin.s();
  }
  throw std::logic_error("basisMatrix: bad basis");
}

template <typename T>
struct ProductRule {
  T coefficient{};
  Basis basis = Basis::P;
};

/// The 16 products X x Y = coefficient x basis. Every product of two basis
/// matrices collapses to a scalar multiple of a basis matrix; the scalar is
/// one of the coin entries.
template <typename T>
ProductRule<T> productRule(Basis x, Basis y, const Coin<T>& coin) {
  // Row: left factor; column: right factor. 0..3 pick a, b, c, d.
  static constexpr std::array<std::array<int, 4>, 4> kCoeff = {{
      {0, 1, 0, 1},  // P*
      {2, 3, 2, 3},  // Q*
      {2, 3, 2, 3},  // R*
      {0, 1, 0, 1},  // S*
  }};
  static constexpr std::array<std::array<Basis, 4>, 4> kBasis = {{
      {Basis::P, Basis::R, Basis::R, Basis::P},
      {Basis::S, Basis::Q, Basis::Q, Basis::S},
      {Basis::P, Basis::R, Basis::R, Basis::P},
      {Basis::S, Basis::Q, Basis::Q, Basis::S},
  }};
  const int xi = static_cast<int>(x);
  const int yi = static_cast<int>(y);
  const std::array<T, 4> entries = {coin.a, coin.b, coin.c, coin.d};
  return {entries[static_cast<size_t>(kCoeff[xi][yi])], kBasis[xi][yi]};
}

template <typename T>
struct ConditionAReport {
  bool satisfied = false;
  T aPlusD{};
  T bPlusC{};
  T tropdetH{};  // max(a+d, b+c); equals 0 exactly when that max is 0
};

/// Condition (A): a+d = 0 and b+c = 0, the walk's analogue of a unit
/// determinant. tropdet(H) = 0 is the weaker one-sided statement.
template <typename T>
ConditionAReport<T> checkConditionA(const Coin<T>& coin) {
  ConditionAReport<T> rep;
  rep.aPlusD = coin.a + coin.d;
  rep.bPlusC = coin.b + coin.c;
  rep.tropdetH = rep.aPlusD < rep.bPlusC ? rep.bPlusC : rep.aPlusD;
  rep.satisfied = rep.aPlusD == T{0} && rep.bPlusC == T{0};
  return rep;
}

}  // namespace walk
}  // namespace maxplus

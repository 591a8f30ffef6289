#pragma once

#include <map>
#include <utility>

#include "maxplus/spectral.hpp"
#include "maxplus/walk/sdm.hpp"

namespace maxplus {
namespace walk {

/// Finite truncation of the total evolution operator: block-tridiagonal with
/// P on the superdiagonal blocks and Q on the subdiagonal blocks, positions
/// -K..K, rows and columns ordered (k;L, k;R) ascending in k.
template <typename T>
struct WindowOperator {
  int radius = 0;
  MaxMatrix<T> matrix;

  Eigen::Index size() const { return 2 * (2 * static_cast<Eigen::Index>(radius) + 1); }
  /// Row/column index of component comp (0 = L, 1 = R) at position k.
  Eigen::Index indexOf(int k, int comp) const {
    return 2 * (static_cast<Eigen::Index>(k) + radius) + comp;
  }
};

template <typename T>
WindowOperator<T> buildWindow(const Coin<T>& coin, int radius) {
  if (radius < 1) throw std::invalid_argument("buildWindow: radius must be >= 1");
  WindowOperator<T> w;
  w.radius = radius;
  w.matrix = allEps<T>(w.size(), w.size());
  const Mat2<T> p = coin.p();
  const Mat2<T> q = coin.q();
  for (int k = -radius; k < radius; ++k) {
    w.matrix.template block<2, 2>(w.indexOf(k, 0), w.indexOf(k + 1, 0)) = p;
    w.matrix.template block<2, 2>(w.indexOf(k + 1, 0), w.indexOf(k, 0)) = q;
  }
  return w;
}

/// Blocks of the n-th power of the window operator. Away from the boundary
/// the power is block-Toeplitz: block (i, j) equals A_{i-j}^n, so only the
/// interior |i|, |j| <= K - n is returned. Requires n <= K.
template <typename T>
std::map<std::pair<int, int>, Mat2<T>> windowPowerBlocks(const Coin<T>& coin,
                                                         int radius, int n) {
  if (n < 0 || n > radius)
    throw std::invalid_argument("windowPowerBlocks: need 0 <= n <= K");
  const WindowOperator<T> w = buildWindow(coin, radius);
  MaxMatrix<T> pw = identity<T>(w.size());
  for (int i = 0; i < n; ++i) pw = otimes(pw, w.matrix);
  std::map<std::pair<int, int>, Mat2<T>> blocks;
  const int inner = radius - n;
  for (int i = -inner; i <= inner; ++i)
    for (int j = -inner; j <= inner; ++j)
      blocks.emplace(std::make_pair(i, j),
                     pw.template block<2, 2>(w.indexOf(i, 0), w.indexOf(j, 0)));
  return blocks;
}

/// Stacked 2-vectors X_k for k in -K..K, flattened with the window indexing.
template <typename T>
struct StackedVector {
  int radius = 0;
  MaxVector<T> entries;

  Vec2<T> at(int k) const {
    Vec2<T> v;
    const Eigen::Index base = 2 * (static_cast<Eigen::Index>(k) + radius);
    v << entries(base), entries(base + 1);
    return v;
  }

  WalkState<T> toWalkState() const {
    WalkState<T> s;
    for (int k = -radius; k <= radius; ++k) {
      Vec2<T> v = at(k);
      if (v(0).isFinite() || v(1).isFinite()) s.amplitudes.emplace(k, std::move(v));
    }
    return s;
  }

  static StackedVector fromWalkState(const WalkState<T>& state, int radius) {
    StackedVector sv;
    sv.radius = radius;
    sv.entries = MaxVector<T>::Constant(2 * (2 * radius + 1), MaxScalar<T>::eps());
    for (int k = -radius; k <= radius; ++k) {
      Vec2<T> v = state.at(k);
      sv.entries(2 * (k + radius)) = v(0);
      sv.entries(2 * (k + radius) + 1) = v(1);
    }
    return sv;
  }
};

/// The stationary profile X_k = [-ak, (-k+1)a - b] (kappa fixed to 0).
/// Under condition (A) it is fixed by the evolution at every position.
template <typename T>
StackedVector<T> stationaryVector(const Coin<T>& coin, int radius) {
  if (!checkConditionA(coin).satisfied)
    throw ConditionAViolatedError("stationaryVector: coin must satisfy (A)");
  StackedVector<T> sv;
  sv.radius = radius;
  sv.entries = MaxVector<T>::Constant(2 * (2 * radius + 1), MaxScalar<T>::eps());
  for (int k = -radius; k <= radius; ++k) {
    sv.entries(2 * (k + radius)) =
        MaxScalar<T>::finite(static_cast<T>(-k) * coin.a);
    sv.entries(2 * (k + radius) + 1) =
        MaxScalar<T>::finite(static_cast<T>(-k + 1) * coin.a - coin.b);
  }
  return sv;
}

/// Row-local content of the eigen-equation at position k:
/// (P x X_{k+1}) + (Q x X_{k-1}) = X_k with the stationary profile.
template <typename T>
bool verifyLocalEigenEquation(const Coin<T>& coin, int k) {
  if (!checkConditionA(coin).satisfied)
    throw ConditionAViolatedError("verifyLocalEigenEquation: coin must satisfy (A)");
  auto x = [&](int pos) {
    Vec2<T> v;
    v << MaxScalar<T>::finite(static_cast<T>(-pos) * coin.a),
        MaxScalar<T>::finite(static_cast<T>(-pos + 1) * coin.a - coin.b);
    return v;
  };
  const Vec2<T> lhs =
      oplus(otimes(coin.p(), x(k + 1)), otimes(coin.q(), x(k - 1)));
  return matEqual(lhs, x(k));
}

/// Maximum cycle mean of the window operator; 0 for every radius under (A).
template <typename T>
MaxScalar<mean_t<T>> windowSpectrum(const Coin<T>& coin, int radius) {
  if (!checkConditionA(coin).satisfied)
    throw ConditionAViolatedError("windowSpectrum: coin must satisfy (A)");
  return maxCycleMean(buildWindow(coin, radius).matrix);
}

}  // namespace walk
}  // namespace maxplus

#pragma once

#include <map>
#include <stdexcept>

#include "maxplus/errors.hpp"
#include "maxplus/walk/coin.hpp"
#include "maxplus/walk/evolution.hpp"

namespace maxplus {
namespace walk {

/// Left/right move counts for an n-step walk ending at position k:
/// left = (n-k)/2, right = (n+k)/2.
struct LrCounts {
  long long left = 0;
  long long right = 0;
};

inline bool onSupport(int n, int k) {
  return n >= 0 && k >= -n && k <= n && ((n - k) % 2 == 0);
}

inline LrCounts lrCounts(int n, int k) {
  if (!onSupport(n, k))
    throw std::invalid_argument("lrCounts: position off the walk support");
  return {(static_cast<long long>(n) - k) / 2, (static_cast<long long>(n) + k) / 2};
}

/// State decision matrices A_k^n at a fixed time: psi_k^n = A_k^n x psi_0^0
/// for the single-seed walk. Cells off the support are all-eps.
template <typename T>
struct SdmGrid {
  int time = 0;
  std::map<int, Mat2<T>> cells;

  static SdmGrid initial() {
    SdmGrid g;
    g.cells.emplace(0, identity2<T>());
    return g;
  }

  Mat2<T> at(int k) const {
    auto it = cells.find(k);
    if (it == cells.end()) return allEps2<T>();
    return it->second;
  }
};

/// A_k^n = (P x A_{k+1}^{n-1}) + (Q x A_{k-1}^{n-1}).
template <typename T>
SdmGrid<T> sdmStep(const SdmGrid<T>& grid, const Coin<T>& coin) {
  const Mat2<T> p = coin.p();
  const Mat2<T> q = coin.q();
  SdmGrid<T> next;
  next.time = grid.time + 1;
  for (int k = -next.time; k <= next.time; k += 2)
    next.cells.emplace(k, oplus(otimes(p, grid.at(k + 1)), otimes(q, grid.at(k - 1))));
  return next;
}

template <typename T>
SdmGrid<T> sdmRecursive(const Coin<T>& coin, int n) {
  if (n < 0) throw std::invalid_argument("sdmRecursive: negative step count");
  SdmGrid<T> g = SdmGrid<T>::initial();
  for (int i = 0; i < n; ++i) g = sdmStep(g, coin);
  return g;
}

/// Closed form for A_k^n: boundary cells are (n-1)a x P and (n-1)d x Q;
/// interior cells are four max-sums over the turn count r, one per basis
/// matrix, with empty ranges contributing eps.
template <typename T>
Mat2<T> sdmClosedForm(const Coin<T>& coin, int n, int k) {
  if (!onSupport(n, k))
    throw std::invalid_argument("sdmClosedForm: position off the walk support");
  if (n == 0) return identity2<T>();
  if (k == -n)
    return otimes(MaxScalar<T>::finite(static_cast<T>(n - 1) * coin.a), coin.p());
  if (k == n)
    return otimes(MaxScalar<T>::finite(static_cast<T>(n - 1) * coin.d), coin.q());

  const auto [ell, m] = lrCounts(n, k);
  const T a = coin.a, b = coin.b, c = coin.c, d = coin.d;

  auto sumOver = [](long long lo, long long hi, auto term) {
    MaxScalar<T> acc = MaxScalar<T>::eps();
    for (long long r = lo; r <= hi; ++r)
      acc = oplus(acc, MaxScalar<T>::finite(term(r)));
    return acc;
  };

  const MaxScalar<T> cp = sumOver(1, std::min(ell - 1, m), [&](long long r) {
    return static_cast<T>(ell - r - 1) * a + static_cast<T>(r) * b +
           static_cast<T>(r) * c + static_cast<T>(m - r) * d;
  });
  const MaxScalar<T> cq = sumOver(1, std::min(ell, m - 1), [&](long long r) {
    return static_cast<T>(ell - r) * a + static_cast<T>(r) * b +
           static_cast<T>(r) * c + static_cast<T>(m - r - 1) * d;
  });
  const MaxScalar<T> cr = sumOver(1, std::min(ell, m), [&](long long r) {
    return static_cast<T>(ell - r) * a + static_cast<T>(r) * b +
           static_cast<T>(r - 1) * c + static_cast<T>(m - r) * d;
  });
  const MaxScalar<T> cs = sumOver(1, std::min(ell, m), [&](long long r) {
    return static_cast<T>(ell - r) * a + static_cast<T>(r - 1) * b +
           static_cast<T>(r) * c + static_cast<T>(m - r) * d;
  });

  Mat2<T> acc = allEps2<T>();
  if (cp.isFinite()) acc = oplus(acc, otimes(cp, coin.p()));
  if (cq.isFinite()) acc = oplus(acc, otimes(cq, coin.q()));
  if (cr.isFinite()) acc = oplus(acc, otimes(cr, coin.r()));
  if (cs.isFinite()) acc = oplus(acc, otimes(cs, coin.s()));
  return acc;
}

/// Specialization of the closed form under condition (A), where the interior
/// matrix no longer depends on n.
template <typename T>
Mat2<T> sdmUnderA(const Coin<T>& coin, int n, int k) {
  if (!checkConditionA(coin).satisfied)
    throw ConditionAViolatedError("sdmUnderA: coin must satisfy a+d = b+c = 0");
  if (!onSupport(n, k))
    throw std::invalid_argument("sdmUnderA: position off the walk support");
  if (n == 0) return identity2<T>();
  const T a = coin.a, b = coin.b;
  auto f = [](const T& v) { return MaxScalar<T>::finite(v); };
  Mat2<T> m;
  if (k == -n) {
    m << f(static_cast<T>(n) * a), f(static_cast<T>(n - 1) * a + b),
        MaxScalar<T>::eps(), MaxScalar<T>::eps();
  } else if (k == n) {
    m << MaxScalar<T>::eps(), MaxScalar<T>::eps(),
        f(static_cast<T>(-n + 1) * a - b), f(static_cast<T>(-n) * a);
  } else {
    m << f(static_cast<T>(-k) * a), f(static_cast<T>(-k - 1) * a + b),
        f(static_cast<T>(-k + 1) * a - b), f(static_cast<T>(-k) * a);
  }
  return m;
}

enum class EigBranch { DeltaNonNegative, DeltaNegative, BoundaryLeft, BoundaryRight };

template <typename T>
struct SdmEigenvalue {
  mean_t<T> value{};
  EigBranch branch = EigBranch::DeltaNonNegative;
};

namespace detail {
template <typename T>
mean_t<T> half(const T& v) {
  return ratio(v, 2);
}
template <typename T>
mean_t<T> min3(const mean_t<T>& x, const mean_t<T>& y, const mean_t<T>& z) {
  mean_t<T> m = x < y ? x : y;
  return m < z ? m : z;
}
}  // namespace detail

/// The eigenvalue branch formula evaluated at any integer position k in
/// [-n, n], off-support positions included (there l and m are half-integers).
/// This is exactly the summand of the conserved-quantity computation; on the
/// interior support it equals the max-plus eigenvalue of A_k^n.
template <typename T>
mean_t<T> eigenvalueFormula(const Coin<T>& coin, int n, int k) {
  if (n < 1 || k < -n || k > n)
    throw std::invalid_argument("eigenvalueFormula: need n >= 1, |k| <= n");
  using M = mean_t<T>;
  const M ell = detail::half<T>(static_cast<T>(n - k));
  const M m = detail::half<T>(static_cast<T>(n + k));
  const M base = ell * M(coin.a) + m * M(coin.d);
  const T delta = coin.delta();
  if (delta < T{0}) return base + detail::half<T>(delta);
  const M cap = detail::half<T>(static_cast<T>(n - 1));
  return base + detail::min3<T>(ell, m, cap) * M(delta);
}

/// Eigenvalue of A_k^n: the branch formula on the interior, na and nd at the
/// k = -n and k = n boundary cells.
template <typename T>
SdmEigenvalue<T> sdmEigenvalue(const Coin<T>& coin, int n, int k) {
  if (!onSupport(n, k))
    throw std::invalid_argument("sdmEigenvalue: position off the walk support");
  using M = mean_t<T>;
  if (k == -n) return {M(static_cast<T>(n) * coin.a), EigBranch::BoundaryLeft};
  if (k == n) return {M(static_cast<T>(n) * coin.d), EigBranch::BoundaryRight};
  const EigBranch branch = coin.delta() < T{0} ? EigBranch::DeltaNegative
                                               : EigBranch::DeltaNonNegative;
  return {eigenvalueFormula(coin, n, k), branch};
}

/// Summation of the eigenvalue formula over every integer position k in
/// [-n, n] (2n+1 terms), the quantity conserved exactly when condition (A)
/// holds. Closed forms: (1/2){n(2n+1)(a+d) + (n^2-1)Delta} for Delta >= 0
/// and (1/2){(2n+1)(a+d)n + (2n+1)Delta} for Delta < 0.
template <typename T>
mean_t<T> eigSum(const Coin<T>& coin, int n) {
  if (n < 1) throw std::invalid_argument("eigSum: need n >= 1");
  mean_t<T> total{};
  for (int k = -n; k <= n; ++k) total = total + eigenvalueFormula(coin, n, k);
  return total;
}

}  // namespace walk
}  // namespace maxplus

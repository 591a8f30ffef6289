#pragma once

#include <optional>
#include <vector>

#include "maxplus/digraph.hpp"
#include "maxplus/errors.hpp"
#include "maxplus/matrix.hpp"

namespace maxplus {

/// Kleene star A* = I + A + A^2 + ... + A^(n-1): entry (i,j) is the maximum
/// weight over all i-j paths of any length. Computed as (I + A)^p for p >= n
/// by repeated squaring; if one more factor still changes the result the
/// series diverges, which happens exactly when some circuit has positive
/// weight, and PositiveCircuitError is thrown.
template <typename D>
MaxMatrix<ScalarNumeric<D>> kleeneStar(const Eigen::MatrixBase<D>& mat) {
  using T = ScalarNumeric<D>;
  MaxMatrix<T> a = mat.derived();
  if (a.rows() != a.cols())
    throw std::invalid_argument("kleeneStar: square matrix required");
  const Eigen::Index n = a.rows();
  if (n == 0) return a;
  MaxMatrix<T> base = oplus(identity<T>(n), a);
  MaxMatrix<T> acc = base;
  for (Eigen::Index p = 1; p < n; p *= 2) acc = otimes(acc, acc);
  if (!matEqual(otimes(acc, base), acc))
    throw PositiveCircuitError("kleeneStar: positive-weight circuit, series diverges");
  return acc;
}

/// A+ = A x A*: entry (i,j) is the best i-j path of length >= 1. A vertex
/// lies on a critical circuit of lambda-shifted A exactly when its diagonal
/// entry here is e.
template <typename D>
MaxMatrix<ScalarNumeric<D>> kleenePlus(const Eigen::MatrixBase<D>& a) {
  return otimes(a.derived(), kleeneStar(a));
}

namespace detail {

/// Karp's minimum-mean-cycle recurrence, maximizing variant, run on one
/// strongly connected component. Returns the maximum circuit mean, or
/// nothing when the component has no circuit (single vertex, no loop).
template <typename T>
std::optional<mean_t<T>> karpComponentMean(const MaxMatrix<T>& a,
                                           const std::vector<int>& comp) {
  const int n = static_cast<int>(comp.size());
  if (n == 1 && a(comp[0], comp[0]).isEps()) return std::nullopt;

  std::vector<int> local(static_cast<size_t>(a.rows()), -1);
  for (int i = 0; i < n; ++i) local[static_cast<size_t>(comp[i])] = i;

  struct Edge {
    int from, to;
    T w;
  };
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a(comp[i], comp[j]).isFinite())
        edges.push_back({i, j, a(comp[i], comp[j]).value()});

  // F[k][v]: best weight of a k-edge walk from vertex comp[0] to comp[v].
  using Row = std::vector<MaxScalar<T>>;
  std::vector<Row> f(static_cast<size_t>(n) + 1,
                     Row(static_cast<size_t>(n), MaxScalar<T>::eps()));
  f[0][0] = MaxScalar<T>::unit();
  for (int k = 1; k <= n; ++k)
    for (const auto& e : edges)
      f[k][e.to] = oplus(f[k][e.to],
                         otimes(f[k - 1][e.from], MaxScalar<T>::finite(e.w)));

  std::optional<mean_t<T>> best;
  for (int v = 0; v < n; ++v) {
    if (f[n][v].isEps()) continue;
    std::optional<mean_t<T>> worst;
    for (int k = 0; k < n; ++k) {
      if (f[k][v].isEps()) continue;
      mean_t<T> cand = ratio(f[n][v].value() - f[k][v].value(),
                             static_cast<long long>(n - k));
      if (!worst || cand < *worst) worst = cand;
    }
    if (worst && (!best || *best < *worst)) best = worst;
  }
  return best;
}

}  // namespace detail

/// Maximum cycle mean: for strongly connected G(A) this is the unique
/// max-plus eigenvalue; in general the maximum of the per-component values,
/// and eps when the graph is circuit-free.
template <typename D>
MaxScalar<mean_t<ScalarNumeric<D>>> maxCycleMean(const Eigen::MatrixBase<D>& mat) {
  using T = ScalarNumeric<D>;
  MaxMatrix<T> a = mat.derived();
  if (a.rows() != a.cols())
    throw std::invalid_argument("maxCycleMean: square matrix required");
  if (a.rows() == 0) return MaxScalar<mean_t<T>>::eps();
  const SccDecomposition scc = sccDecompose(adjacencyOf(a));
  MaxScalar<mean_t<T>> best = MaxScalar<mean_t<T>>::eps();
  for (const auto& comp : scc.components) {
    auto mean = detail::karpComponentMean(a, comp);
    if (mean) best = oplus(best, MaxScalar<mean_t<T>>::finite(*mean));
  }
  return best;
}

/// Vertices whose best circuit through them attains mean lambda, i.e. whose
/// diagonal entry of ((-lambda) x A)+ equals e.
template <typename D>
std::vector<int> criticalVertices(
    const Eigen::MatrixBase<D>& mat,
    const MaxScalar<mean_t<ScalarNumeric<D>>>& lambda) {
  using T = ScalarNumeric<D>;
  MaxMatrix<T> a = mat.derived();
  if (lambda.isEps())
    throw std::invalid_argument("criticalVertices: lambda must be finite");
  MaxMatrix<mean_t<T>> shifted =
      otimes(MaxScalar<mean_t<T>>::finite(-lambda.value()), liftNumeric<mean_t<T>>(a));
  MaxMatrix<mean_t<T>> plus = kleenePlus(shifted);
  std::vector<int> crit;
  for (Eigen::Index i = 0; i < plus.rows(); ++i)
    if (plus(i, i) == MaxScalar<mean_t<T>>::unit())
      crit.push_back(static_cast<int>(i));
  return crit;
}

/// Eigenvector for lambda = maxCycleMean(A): a column of ((-lambda) x A)*
/// indexed by a critical vertex (the smallest such index). Satisfies
/// A x v = lambda x v exactly.
template <typename D>
MaxVector<mean_t<ScalarNumeric<D>>> eigenvector(
    const Eigen::MatrixBase<D>& mat,
    const MaxScalar<mean_t<ScalarNumeric<D>>>& lambda) {
  using T = ScalarNumeric<D>;
  MaxMatrix<T> a = mat.derived();
  if (lambda.isEps())
    throw std::invalid_argument("eigenvector: lambda must be finite");
  MaxMatrix<mean_t<T>> shifted =
      otimes(MaxScalar<mean_t<T>>::finite(-lambda.value()), liftNumeric<mean_t<T>>(a));
  MaxMatrix<mean_t<T>> star = kleeneStar(shifted);
  MaxMatrix<mean_t<T>> plus = otimes(shifted, star);
  for (Eigen::Index i = 0; i < plus.rows(); ++i) {
    if (plus(i, i) == MaxScalar<mean_t<T>>::unit()) return star.col(i);
  }
  throw NoCriticalVertexError("eigenvector: no vertex attains the cycle mean");
}

/// Projective (shift) equivalence: x and y have the same eps pattern and all
/// finite entries differ by one constant. Returns that constant when it
/// exists. This is equality up to the free kappa-factor of eigenvectors.
template <typename T>
std::optional<T> tensorShift(const MaxVector<T>& x, const MaxVector<T>& y) {
  if (x.size() != y.size()) return std::nullopt;
  std::optional<T> shift;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x(i).isEps() != y(i).isEps()) return std::nullopt;
    if (x(i).isEps()) continue;
    T d = x(i).value() - y(i).value();
    if (!shift)
      shift = d;
    else if (!(*shift == d))
      return std::nullopt;
  }
  if (!shift) shift = T{0};  // both all-eps
  return shift;
}

}  // namespace maxplus

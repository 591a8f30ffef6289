#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "maxplus/scalar.hpp"

namespace maxplus {

/// Dense matrices and vectors over the max-plus semiring. Eigen supplies the
/// storage; the semiring arithmetic lives in the free functions below. The
/// scalar type deliberately has no operator+/operator*, so Eigen's own
/// ring-based kernels (A*B, setZero, Identity) cannot be invoked by mistake.
template <typename T>
using MaxMatrix = Eigen::Matrix<MaxScalar<T>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using MaxVector = Eigen::Matrix<MaxScalar<T>, Eigen::Dynamic, 1>;
template <typename T>
using Mat2 = Eigen::Matrix<MaxScalar<T>, 2, 2>;
template <typename T>
using Vec2 = Eigen::Matrix<MaxScalar<T>, 2, 1>;

template <typename Derived>
using ScalarNumeric = typename Eigen::internal::traits<Derived>::Scalar::Numeric;

namespace detail {
// Shape-agnostic construction: fixed-size Eigen types reject the
// (rows, cols) constructor for 2-element shapes, so resize instead.
template <typename Mat>
Mat shaped(Eigen::Index rows, Eigen::Index cols) {
  Mat m;
  m.resize(rows, cols);
  return m;
}
}  // namespace detail

/// Identity: e on the diagonal, eps elsewhere.
template <typename T>
MaxMatrix<T> identity(Eigen::Index n) {
  MaxMatrix<T> m = MaxMatrix<T>::Constant(n, n, MaxScalar<T>::eps());
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = MaxScalar<T>::unit();
  return m;
}

template <typename T>
Mat2<T> identity2() {
  Mat2<T> m;
  m << MaxScalar<T>::unit(), MaxScalar<T>::eps(), MaxScalar<T>::eps(),
      MaxScalar<T>::unit();
  return m;
}

/// The all-eps matrix (the additive identity of the matrix semiring).
template <typename T>
MaxMatrix<T> allEps(Eigen::Index rows, Eigen::Index cols) {
  return MaxMatrix<T>::Constant(rows, cols, MaxScalar<T>::eps());
}

template <typename T>
Mat2<T> allEps2() {
  return Mat2<T>::Constant(MaxScalar<T>::eps());
}

/// Entrywise max-plus sum of two equally shaped matrices.
template <typename D1, typename D2>
auto oplus(const Eigen::MatrixBase<D1>& a, const Eigen::MatrixBase<D2>& b)
    -> Eigen::Matrix<typename D1::Scalar, D1::RowsAtCompileTime,
                     D1::ColsAtCompileTime> {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("oplus: shape mismatch");
  auto c = detail::shaped<Eigen::Matrix<typename D1::Scalar, D1::RowsAtCompileTime,
                                        D1::ColsAtCompileTime>>(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      c(i, j) = oplus(a.derived()(i, j), b.derived()(i, j));
  return c;
}

/// Max-plus matrix product: entries are max over k of a(i,k) + b(k,j).
/// The k loop runs in a fixed order, so float results are reproducible.
template <typename D1, typename D2>
auto otimes(const Eigen::MatrixBase<D1>& a, const Eigen::MatrixBase<D2>& b)
    -> Eigen::Matrix<typename D1::Scalar, D1::RowsAtCompileTime,
                     D2::ColsAtCompileTime> {
  using Scalar = typename D1::Scalar;
  if (a.cols() != b.rows()) throw std::invalid_argument("otimes: shape mismatch");
  auto c = detail::shaped<
      Eigen::Matrix<Scalar, D1::RowsAtCompileTime, D2::ColsAtCompileTime>>(
      a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      Scalar acc = Scalar::eps();
      for (Eigen::Index k = 0; k < a.cols(); ++k)
        acc = oplus(acc, otimes(a.derived()(i, k), b.derived()(k, j)));
      c(i, j) = acc;
    }
  }
  return c;
}

/// Scalar multiple: adds alpha to every entry, eps stays eps.
template <typename D>
auto otimes(const typename D::Scalar& alpha, const Eigen::MatrixBase<D>& a)
    -> Eigen::Matrix<typename D::Scalar, D::RowsAtCompileTime,
                     D::ColsAtCompileTime> {
  auto c = detail::shaped<Eigen::Matrix<typename D::Scalar, D::RowsAtCompileTime,
                                        D::ColsAtCompileTime>>(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      c(i, j) = otimes(alpha, a.derived()(i, j));
  return c;
}

/// m-fold max-plus power of a square matrix; the zeroth power is identity.
template <typename T>
MaxMatrix<T> power(const MaxMatrix<T>& a, int m) {
  if (a.rows() != a.cols()) throw std::invalid_argument("power: square matrix required");
  if (m < 0) throw std::invalid_argument("power: negative exponent");
  MaxMatrix<T> acc = identity<T>(a.rows());
  for (int i = 0; i < m; ++i) acc = otimes(acc, a);
  return acc;
}

template <typename D1, typename D2>
bool matEqual(const Eigen::MatrixBase<D1>& a, const Eigen::MatrixBase<D2>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a.derived()(i, j) == b.derived()(i, j))) return false;
  return true;
}

template <typename D1, typename D2>
bool matApproxEqual(const Eigen::MatrixBase<D1>& a,
                    const Eigen::MatrixBase<D2>& b, double tau = 1e-9) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!approxEqual(a.derived()(i, j), b.derived()(i, j), tau)) return false;
  return true;
}

/// Rebuilds a matrix over a different numeric type (e.g. integers lifted to
/// rationals before an eigenvalue shift). Finite values convert entrywise.
template <typename U, typename D>
auto liftNumeric(const Eigen::MatrixBase<D>& a)
    -> Eigen::Matrix<MaxScalar<U>, D::RowsAtCompileTime, D::ColsAtCompileTime> {
  auto c = detail::shaped<
      Eigen::Matrix<MaxScalar<U>, D::RowsAtCompileTime, D::ColsAtCompileTime>>(
      a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const auto& s = a.derived()(i, j);
      c(i, j) = s.isEps() ? MaxScalar<U>::eps()
                          : MaxScalar<U>::finite(U(s.value()));
    }
  return c;
}

/// Tropical determinant: max over permutations of the diagonal-product sums.
/// Enumerates all n! permutations, so n is capped at 8.
template <typename D>
MaxScalar<ScalarNumeric<D>> tropdet(const Eigen::MatrixBase<D>& mat) {
  using T = ScalarNumeric<D>;
  const MaxMatrix<T> a = mat.derived();
  if (a.rows() != a.cols())
    throw std::invalid_argument("tropdet: square matrix required");
  const Eigen::Index n = a.rows();
  if (n > 8) throw std::invalid_argument("tropdet: size capped at 8");
  std::vector<Eigen::Index> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  MaxScalar<T> best = n == 0 ? MaxScalar<T>::unit() : MaxScalar<T>::eps();
  do {
    MaxScalar<T> prod = MaxScalar<T>::unit();
    for (Eigen::Index i = 0; i < n && !prod.isEps(); ++i)
      prod = otimes(prod, a(i, perm[static_cast<size_t>(i)]));
    best = oplus(best, prod);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace maxplus

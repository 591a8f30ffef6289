#include "qw/closed_form.hpp"

#include <cmath>
#include <stdexcept>

namespace qw {

namespace {

bool onSupport(int n, int k) {
  return n >= 0 && k >= -n && k <= n && ((n - k) % 2 == 0);
}

Complex intPow(Complex base, long long e) {
  Complex acc(1.0, 0.0);
  for (long long i = 0; i < e; ++i) acc *= base;
  return acc;
}

double binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0.0;
  double acc = 1.0;
  for (long long i = 1; i <= k; ++i)
    acc = acc * static_cast<double>(n - k + i) / static_cast<double>(i);
  return acc;
}

}  // namespace

std::map<int, Matrix2c> qwSdmRecursive(const UnitaryCoin& coin, int n) {
  if (n < 0) throw std::invalid_argument("qwSdmRecursive: negative step count");
  const Matrix2c p = coin.p();
  const Matrix2c q = coin.q();
  std::map<int, Matrix2c> grid;
  grid.emplace(0, Matrix2c::Identity());
  for (int t = 1; t <= n; ++t) {
    std::map<int, Matrix2c> next;
    auto cell = [&](int k) {
      auto it = grid.find(k);
      if (it != grid.end()) return it->second;
      return Matrix2c::Zero().eval();
    };
    for (int k = -t; k <= t; k += 2)
      next.emplace(k, (p * cell(k + 1) + q * cell(k - 1)).eval());
    grid = std::move(next);
  }
  return grid;
}

Matrix2c qwSdmClosedForm(const UnitaryCoin& coin, int n, int k) {
  if (!onSupport(n, k))
    throw std::invalid_argument("qwSdmClosedForm: position off the walk support");
  if (n == 0) return Matrix2c::Identity();
  if (k == -n) return intPow(coin.a(), n - 1) * coin.p();
  if (k == n) return intPow(coin.d(), n - 1) * coin.q();

  const Complex a = coin.a(), b = coin.b(), c = coin.c(), d = coin.d();
  if (std::abs(a * d) == 0.0 || std::abs(b * c) == 0.0)
    throw std::invalid_argument(
        "qwSdmClosedForm: interior formula needs ad != 0 and bc != 0");

  const long long ell = (static_cast<long long>(n) - k) / 2;
  const long long m = (static_cast<long long>(n) + k) / 2;
  const Complex ratio = (b * c) / (a * d);

  Matrix2c sum = Matrix2c::Zero();
  Complex ratioPow = ratio;  // ratio^r, starting at r = 1
  for (long long r = 1; r <= std::min(ell, m); ++r, ratioPow *= ratio) {
    const double w = binomial(ell - 1, r - 1) * binomial(m - 1, r - 1);
    const Complex pCoeff = static_cast<double>(ell - r) / (a * static_cast<double>(r));
    const Complex qCoeff = static_cast<double>(m - r) / (d * static_cast<double>(r));
    sum += ratioPow * w *
           (pCoeff * coin.p() + qCoeff * coin.q() + coin.r() / c + coin.s() / b);
  }
  return intPow(a, ell) * intPow(d, m) * sum;
}

double frobeniusTotal(const UnitaryCoin& coin, int n) {
  const auto grid = qwSdmRecursive(coin, n);
  double total = 0;
  for (const auto& [k, mat] : grid) total += mat.squaredNorm();
  return 0.5 * total;
}

}  // namespace qw

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <map>
#include <vector>

#include "maxplus/walk/sdm.hpp"

namespace qw {

/// A max-plus coin realized with positive weights e^{x/eps}: the regime in
/// which eps log(e^{A/eps} + e^{B/eps}) -> max(A, B) connects the (+, x)
/// walk to the max-plus walk. All arithmetic stays in the log domain.
template <typename T>
struct PositiveWeightCoin {
  maxplus::walk::Coin<T> base;
  double epsUd = 1e-3;

  double logA() const { return maxplus::toDouble(base.a) / epsUd; }
  double logB() const { return maxplus::toDouble(base.b) / epsUd; }
  double logC() const { return maxplus::toDouble(base.c) / epsUd; }
  double logD() const { return maxplus::toDouble(base.d) / epsUd; }
};

/// log(e^x + e^y) without overflow; -infinity encodes a zero weight.
inline double logAddExp(double x, double y) {
  if (std::isinf(x) && x < 0) return y;
  if (std::isinf(y) && y < 0) return x;
  const double m = x < y ? y : x;
  return m + std::log1p(std::exp(-std::abs(x - y)));
}

namespace detail {

using LogMat2 = Eigen::Matrix2d;

inline LogMat2 logMatMul(const LogMat2& a, const LogMat2& b) {
  LogMat2 c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      c(i, j) = logAddExp(a(i, 0) + b(0, j), a(i, 1) + b(1, j));
  return c;
}

inline LogMat2 logMatAdd(const LogMat2& a, const LogMat2& b) {
  LogMat2 c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c(i, j) = logAddExp(a(i, j), b(i, j));
  return c;
}

}  // namespace detail

/// Log-domain state decision matrices of the positive-weight (+, x) walk at
/// time n: entries are log of the conventional recursion values.
template <typename T>
std::map<int, detail::LogMat2> logDomainSdm(const PositiveWeightCoin<T>& coin,
                                            int n) {
  constexpr double kZero = -std::numeric_limits<double>::infinity();
  detail::LogMat2 p, q;
  p << coin.logA(), coin.logB(), kZero, kZero;
  q << kZero, kZero, coin.logC(), coin.logD();

  std::map<int, detail::LogMat2> grid;
  detail::LogMat2 id;
  id << 0.0, kZero, kZero, 0.0;
  grid.emplace(0, id);
  for (int t = 1; t <= n; ++t) {
    std::map<int, detail::LogMat2> next;
    auto cell = [&](int k) {
      auto it = grid.find(k);
      if (it != grid.end()) return it->second;
      return detail::LogMat2::Constant(kZero).eval();
    };
    for (int k = -t; k <= t; k += 2)
      next.emplace(k, detail::logMatAdd(detail::logMatMul(p, cell(k + 1)),
                                        detail::logMatMul(q, cell(k - 1))));
    grid = std::move(next);
  }
  return grid;
}

struct UdEntryDeviation {
  int k = 0;
  int row = 0;
  int col = 0;
  double deviation = 0;
};

struct UdReport {
  double epsUd = 0;
  int steps = 0;
  bool structureOk = true;     // eps pattern of A_k^n matches the zero pattern
  double maxDeviation = 0;
  double bound = 0;            // epsUd * (n log 2 + 4)
  bool withinBound = true;
  std::vector<UdEntryDeviation> entries;
};

/// Runs the positive-weight recursion with weights e^{x/epsUd}, rescales the
/// logs by epsUd and reports the entrywise distance to the max-plus A_k^n.
template <typename T>
UdReport ultradiscretizationCheck(const maxplus::walk::Coin<T>& base,
                                  double epsUd, int n) {
  if (!(epsUd > 0)) throw std::invalid_argument("ultradiscretizationCheck: epsUd > 0");
  if (n < 1) throw std::invalid_argument("ultradiscretizationCheck: n >= 1");

  UdReport report;
  report.epsUd = epsUd;
  report.steps = n;
  report.bound = epsUd * (n * std::log(2.0) + 4.0);

  const PositiveWeightCoin<T> coin{base, epsUd};
  const auto logGrid = logDomainSdm(coin, n);

  for (const auto& [k, logCell] : logGrid) {
    const maxplus::Mat2<T> ref = maxplus::walk::sdmClosedForm(base, n, k);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        const bool zeroWeight = std::isinf(logCell(i, j)) && logCell(i, j) < 0;
        if (zeroWeight != ref(i, j).isEps()) {
          report.structureOk = false;
          continue;
        }
        if (zeroWeight) continue;
        const double rescaled = epsUd * logCell(i, j);
        const double dev = std::abs(rescaled - maxplus::toDouble(ref(i, j).value()));
        report.entries.push_back({k, i, j, dev});
        if (dev > report.maxDeviation) report.maxDeviation = dev;
      }
    }
  }
  report.withinBound = report.structureOk && report.maxDeviation <= report.bound;
  return report;
}

}  // namespace qw

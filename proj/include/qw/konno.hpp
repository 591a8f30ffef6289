#pragma once

#include <vector>

#include "qw/evolution.hpp"

namespace qw {

/// Konno's limit density f_K(v; |a|) = |b| / (pi (1-v^2) sqrt(|a|^2 - v^2))
/// on (-|a|, |a|), zero outside; the singular endpoints return +infinity.
double konnoDensity(double v, double absA);

/// Closed-form cumulative of the density:
/// 1/2 + (1/pi) atan(|b| u / sqrt(|a|^2 - u^2)) inside the support.
double konnoCdf(double u, double absA);

struct WeakLimitRow {
  double u = 0;
  double empirical = 0;
  double limit = 0;
  double absDiff = 0;
};

struct WeakLimitReport {
  int steps = 0;
  std::vector<WeakLimitRow> rows;
  double supDiff = 0;
};

/// Compares the rescaled empirical distribution of the walk at time n with
/// the limit CDF on the given grid of u values. The initial state must
/// satisfy |alpha| = |beta| and Re(a alpha conj(b beta)) = 0 (the symmetric
/// regime of the limit theorem); violations throw std::invalid_argument.
WeakLimitReport weakLimitCheck(const UnitaryCoin& coin, const Vector2c& initial,
                               int steps, const std::vector<double>& grid);

}  // namespace qw

#include "qw/konno.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qw {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double konnoDensity(double v, double absA) {
  if (!(absA > 0.0 && absA < 1.0))
    throw std::invalid_argument("konnoDensity: |a| must lie in (0,1)");
  const double av = std::abs(v);
  if (av > absA) return 0.0;
  if (av == absA) return std::numeric_limits<double>::infinity();
  const double absB = std::sqrt(1.0 - absA * absA);
  return absB / (kPi * (1.0 - v * v) * std::sqrt(absA * absA - v * v));
}

double konnoCdf(double u, double absA) {
  if (!(absA > 0.0 && absA < 1.0))
    throw std::invalid_argument("konnoCdf: |a| must lie in (0,1)");
  if (u <= -absA) return 0.0;
  if (u >= absA) return 1.0;
  const double absB = std::sqrt(1.0 - absA * absA);
  return 0.5 + std::atan(absB * u / std::sqrt(absA * absA - u * u)) / kPi;
}

WeakLimitReport weakLimitCheck(const UnitaryCoin& coin, const Vector2c& initial,
                               int steps, const std::vector<double>& grid) {
  if (steps < 1) throw std::invalid_argument("weakLimitCheck: steps >= 1");
  const double tol = 1e-9;
  const Complex alpha = initial(0);
  const Complex beta = initial(1);
  if (std::abs(std::abs(alpha) - std::abs(beta)) > tol)
    throw std::invalid_argument("weakLimitCheck: initial state needs |alpha| = |beta|");
  if (std::abs(std::real(coin.a() * alpha * std::conj(coin.b() * beta))) > tol)
    throw std::invalid_argument(
        "weakLimitCheck: initial state needs Re(a alpha conj(b beta)) = 0");

  const QwState finalState = qwEvolve(QwState::seeded(initial), coin, steps);
  const auto mu = distribution(finalState);
  const double absA = std::abs(coin.a());

  WeakLimitReport report;
  report.steps = steps;
  for (double u : grid) {
    double empirical = 0;
    for (const auto& [k, p] : mu)
      if (static_cast<double>(k) / steps <= u) empirical += p;
    const double limit = konnoCdf(u, absA);
    const double diff = std::abs(empirical - limit);
    report.rows.push_back({u, empirical, limit, diff});
    if (diff > report.supDiff) report.supDiff = diff;
  }
  return report;
}

}  // namespace qw

#pragma once

#include <map>

#include "qw/coin.hpp"

namespace qw {

/// Sparse complex amplitude field: position k maps to phi_k, absent keys are
/// the zero vector.
struct QwState {
  int time = 0;
  std::map<int, Vector2c> amplitudes;

  static QwState seeded(const Vector2c& phi);
  Vector2c at(int k) const;
};

/// phi_k^n = P phi_{k+1}^{n-1} + Q phi_{k-1}^{n-1}.
QwState qwStep(const QwState& state, const UnitaryCoin& coin);
QwState qwEvolve(const QwState& initial, const UnitaryCoin& coin, int steps);

/// mu_k = ||phi_k||^2, the observation probability at each position.
std::map<int, double> distribution(const QwState& state);
double totalProbability(const QwState& state);

}  // namespace qw

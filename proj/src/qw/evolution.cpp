#include "qw/evolution.hpp"

#include <set>
#include <stdexcept>

namespace qw {

QwState QwState::seeded(const Vector2c& phi) {
  QwState s;
  s.amplitudes.emplace(0, phi);
  return s;
}

Vector2c QwState::at(int k) const {
  auto it = amplitudes.find(k);
  if (it == amplitudes.end()) return Vector2c::Zero();
  return it->second;
}

QwState qwStep(const QwState& state, const UnitaryCoin& coin) {
  const Matrix2c p = coin.p();
  const Matrix2c q = coin.q();
  std::set<int> targets;
  for (const auto& [k, v] : state.amplitudes) {
    targets.insert(k - 1);
    targets.insert(k + 1);
  }
  QwState next;
  next.time = state.time + 1;
  for (int k : targets) {
    Vector2c v = p * state.at(k + 1) + q * state.at(k - 1);
    if (v.squaredNorm() > 0.0) next.amplitudes.emplace(k, std::move(v));
  }
  return next;
}

QwState qwEvolve(const QwState& initial, const UnitaryCoin& coin, int steps) {
  if (steps < 0) throw std::invalid_argument("qwEvolve: negative step count");
  QwState s = initial;
  for (int i = 0; i < steps; ++i) s = qwStep(s, coin);
  return s;
}

std::map<int, double> distribution(const QwState& state) {
  std::map<int, double> mu;
  for (const auto& [k, v] : state.amplitudes) mu.emplace(k, v.squaredNorm());
  return mu;
}

double totalProbability(const QwState& state) {
  double total = 0;
  for (const auto& [k, v] : state.amplitudes) total += v.squaredNorm();
  return total;
}

}  // namespace qw

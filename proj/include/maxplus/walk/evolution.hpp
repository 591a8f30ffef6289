#pragma once

#include <map>
#include <set>

#include "maxplus/walk/coin.hpp"

namespace maxplus {
namespace walk {

/// Sparse walk state: position k maps to the 2-vector psi_k; absent keys are
/// the all-eps vector. Support lives on {-n, ..., n} with the parity of n
/// (shifted by the initial support).
template <typename T>
struct WalkState {
  int time = 0;
  std::map<int, Vec2<T>> amplitudes;

  static WalkState seeded(const MaxScalar<T>& alpha, const MaxScalar<T>& beta) {
    if (alpha.isEps() && beta.isEps())
      throw std::invalid_argument("WalkState: seed needs a finite component");
    WalkState s;
    Vec2<T> v;
    v << alpha, beta;
    s.amplitudes.emplace(0, std::move(v));
    return s;
  }

  Vec2<T> at(int k) const {
    auto it = amplitudes.find(k);
    if (it == amplitudes.end()) return Vec2<T>::Constant(MaxScalar<T>::eps());
    return it->second;
  }
};

/// One application of psi_k^n = P psi_{k+1}^{n-1} + Q psi_{k-1}^{n-1}.
template <typename T>
WalkState<T> step(const WalkState<T>& state, const Coin<T>& coin) {
  const Mat2<T> p = coin.p();
  const Mat2<T> q = coin.q();
  std::set<int> targets;
  for (const auto& [k, v] : state.amplitudes) {
    targets.insert(k - 1);
    targets.insert(k + 1);
  }
  WalkState<T> next;
  next.time = state.time + 1;
  for (int k : targets) {
    Vec2<T> v = oplus(otimes(p, state.at(k + 1)), otimes(q, state.at(k - 1)));
    if (v(0).isFinite() || v(1).isFinite()) next.amplitudes.emplace(k, std::move(v));
  }
  return next;
}

template <typename T>
WalkState<T> evolve(const WalkState<T>& initial, const Coin<T>& coin, int steps) {
  if (steps < 0) throw std::invalid_argument("evolve: negative step count");
  WalkState<T> s = initial;
  for (int i = 0; i < steps; ++i) s = step(s, coin);
  return s;
}

}  // namespace walk
}  // namespace maxplus

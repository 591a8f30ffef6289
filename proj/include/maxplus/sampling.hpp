#pragma once

#include <random>
#include <stdexcept>

#include "maxplus/matrix.hpp"
#include "maxplus/walk/coin.hpp"

namespace maxplus {

/// Deterministic sampling for randomized verification suites. Only the raw
/// mt19937_64 stream is used (no distribution objects), so a seed produces
/// the same draws on every platform.
using Rng = std::mt19937_64;

inline long long sampleInt(Rng& rng, long long lo, long long hi) {
  const unsigned long long span = static_cast<unsigned long long>(hi - lo) + 1;
  return lo + static_cast<long long>(rng() % span);
}

inline walk::Coin<long long> randomCoin(Rng& rng, long long lo = -9,
                                        long long hi = 9) {
  return {sampleInt(rng, lo, hi), sampleInt(rng, lo, hi), sampleInt(rng, lo, hi),
          sampleInt(rng, lo, hi)};
}

/// Coin satisfying a+d = b+c = 0; needs a sign-symmetric range.
inline walk::Coin<long long> randomConditionACoin(Rng& rng, long long lo = -9,
                                                  long long hi = 9) {
  const long long a = sampleInt(rng, lo, hi);
  const long long b = sampleInt(rng, lo, hi);
  return {a, b, -b, -a};
}

enum class DeltaStratum { Negative, ZeroTraceNonzero, Positive };

/// Coin with the requested sign of Delta = (b+c)-(a+d); the Zero stratum
/// additionally forces a+d != 0 (so the conserved sum is non-constant).
inline walk::Coin<long long> randomCoinInStratum(Rng& rng, DeltaStratum stratum,
                                                 long long lo = -9,
                                                 long long hi = 9) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    walk::Coin<long long> c = randomCoin(rng, lo, hi);
    const long long delta = c.delta();
    switch (stratum) {
      case DeltaStratum::Negative:
        if (delta < 0) return c;
        break;
      case DeltaStratum::ZeroTraceNonzero:
        if (delta == 0 && c.a + c.d != 0) return c;
        break;
      case DeltaStratum::Positive:
        if (delta > 0) return c;
        break;
    }
  }
  throw std::runtime_error("randomCoinInStratum: rejection sampling exhausted");
}

/// Random square matrix with the given eps density (per mille).
inline MaxMatrix<long long> randomMatrix(Rng& rng, Eigen::Index n,
                                         Eigen::Index m, int epsPerMille,
                                         long long lo = -9, long long hi = 9) {
  MaxMatrix<long long> a = allEps<long long>(n, m);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      if (sampleInt(rng, 0, 999) >= epsPerMille)
        a(i, j) = MaxScalar<long long>::finite(sampleInt(rng, lo, hi));
  return a;
}

/// Random strongly connected matrix: a Hamiltonian cycle plus extra edges.
inline MaxMatrix<long long> randomStronglyConnectedMatrix(Rng& rng,
                                                          Eigen::Index n,
                                                          long long lo = -9,
                                                          long long hi = 9) {
  MaxMatrix<long long> a = allEps<long long>(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    a(i, (i + 1) % n) = MaxScalar<long long>::finite(sampleInt(rng, lo, hi));
  const Eigen::Index extra = n;
  for (Eigen::Index e = 0; e < extra; ++e) {
    Eigen::Index i = sampleInt(rng, 0, n - 1);
    Eigen::Index j = sampleInt(rng, 0, n - 1);
    a(i, j) = MaxScalar<long long>::finite(sampleInt(rng, lo, hi));
  }
  return a;
}

}  // namespace maxplus

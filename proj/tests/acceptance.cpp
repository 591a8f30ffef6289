// Acceptance suite: one line per criterion, every tolerance pinned in code.
// Exits nonzero when any criterion fails. Also enforced as a ctest target.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "maxplus/sampling.hpp"
#include "maxplus/spectral.hpp"
#include "maxplus/walk/window.hpp"
#include "oracles.hpp"
#include "qw/closed_form.hpp"
#include "qw/konno.hpp"
#include "qw/ultradiscrete.hpp"

using namespace maxplus;
using namespace maxplus::walk;

namespace {

using C = Coin<long long>;
using MS = MaxScalar<long long>;

struct Check {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail << what;
    }
  }
};

// ---------------------------------------------------------------- criterion 1

void criterion1(Check& c) {
  Rng rng(4001);

  // semiring laws, >= 1000 random exact cases
  auto draw = [&]() {
    if (sampleInt(rng, 0, 9) == 0) return MS::eps();
    return MS::finite(sampleInt(rng, -99, 99));
  };
  for (int i = 0; i < 1500 && c.pass; ++i) {
    const MS x = draw(), y = draw(), z = draw();
    c.require(oplus(x, y) == oplus(y, x), "oplus commutativity");
    c.require(oplus(oplus(x, y), z) == oplus(x, oplus(y, z)), "oplus associativity");
    c.require(oplus(x, x) == x, "oplus idempotency");
    c.require(otimes(otimes(x, y), z) == otimes(x, otimes(y, z)),
              "otimes associativity");
    c.require(otimes(x, oplus(y, z)) == oplus(otimes(x, y), otimes(x, z)),
              "distributivity");
    c.require(otimes(x, MS::eps()) == MS::eps(), "eps annihilates");
    c.require(otimes(x, MS::unit()) == x, "unit identity");
    c.require(oplus(x, MS::eps()) == x, "eps additive identity");
  }

  // matrix powers vs exhaustive fixed-length walk enumeration (n<=5, m<=6)
  for (int trial = 0; trial < 12 && c.pass; ++trial) {
    const auto n = sampleInt(rng, 1, 5);
    const MaxMatrix<long long> m = randomMatrix(rng, n, n, 350);
    for (int len = 0; len <= 6; ++len) {
      const auto p = power(m, len);
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
          c.require(p(i, j) == oracles::bestWalkExact(m, static_cast<int>(i),
                                                      static_cast<int>(j), len),
                    "power vs path enumeration");
    }
  }

  // kleene star vs any-length enumeration (nonpositive weights keep it finite)
  for (int trial = 0; trial < 15 && c.pass; ++trial) {
    const auto n = sampleInt(rng, 1, 5);
    const MaxMatrix<long long> m = randomMatrix(rng, n, n, 350, -9, 0);
    const auto star = kleeneStar(m);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        c.require(star(i, j) ==
                      oracles::bestWalkUpTo(m, static_cast<int>(i),
                                            static_cast<int>(j),
                                            static_cast<int>(n) - 1),
                  "kleene star vs path enumeration");
  }

  // Karp vs simple-circuit enumeration (n <= 6)
  for (int trial = 0; trial < 150 && c.pass; ++trial) {
    const auto n = sampleInt(rng, 1, 6);
    const MaxMatrix<long long> m = randomMatrix(rng, n, n, sampleInt(rng, 100, 700));
    const auto karp = maxCycleMean(m);
    const auto brute = oracles::bestCircuitMean(m);
    if (brute)
      c.require(karp == MaxScalar<Rational>::finite(*brute),
                "max cycle mean vs circuit enumeration");
    else
      c.require(karp == MaxScalar<Rational>::eps(), "circuit-free graph");
  }
}

// ---------------------------------------------------------------- criterion 2

void criterion2(Check& c) {
  Rng rng(4002);
  for (int trial = 0; trial < 200 && c.pass; ++trial) {
    const C coin = randomCoin(rng, -9, 9);
    SdmGrid<long long> grid = SdmGrid<long long>::initial();
    for (int n = 0; n <= 12 && c.pass; ++n) {
      if (n > 0) grid = sdmStep(grid, coin);
      for (int k = -n; k <= n; k += 2)
        c.require(matEqual(sdmClosedForm(coin, n, k), grid.at(k)),
                  "closed form != recursion at n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
    }
  }
}

// ---------------------------------------------------------------- criterion 3

void criterion3(Check& c) {
  Rng rng(4003);
  const Basis all[] = {Basis::P, Basis::Q, Basis::R, Basis::S};
  for (int trial = 0; trial < 100 && c.pass; ++trial) {
    const C coin = randomCoin(rng);
    for (Basis x : all)
      for (Basis y : all) {
        const auto rule = productRule(x, y, coin);
        c.require(matEqual(otimes(basisMatrix(coin, x), basisMatrix(coin, y)),
                           otimes(MS::finite(rule.coefficient),
                                  basisMatrix(coin, rule.basis))),
                  "product table mismatch");
      }
  }
}

// ---------------------------------------------------------------- criterion 4

void criterion4(Check& c) {
  Rng rng(4004);
  for (int trial = 0; trial < 100 && c.pass; ++trial) {
    const C coin = randomCoin(rng);
    const long long a = coin.a, b = coin.b, cc = coin.c, d = coin.d;
    Mat2<long long> expected;
    expected << fin(b + cc + d), fin(b + 2 * d),
        fin(std::max(b + 2 * cc, a + cc + d)), fin(b + cc + d);
    c.require(matEqual(sdmClosedForm(coin, 3, 1), expected),
              "A_1^3 symbolic form");
    c.require(matEqual(sdmRecursive(coin, 3).at(1), expected),
              "A_1^3 recursion");
  }
}

// ---------------------------------------------------------------- criterion 5

void criterion5(Check& c) {
  Rng rng(4005);

  for (int trial = 0; trial < 50 && c.pass; ++trial) {
    const C coin = randomConditionACoin(rng);
    for (int n = 1; n <= 50; ++n)
      c.require(eigSum(coin, n) == Rational(0),
                "eigSum != 0 under (A) at n=" + std::to_string(n));
  }

  const DeltaStratum strata[] = {DeltaStratum::Negative,
                                 DeltaStratum::ZeroTraceNonzero,
                                 DeltaStratum::Positive};
  for (int trial = 0; trial < 70 && c.pass; ++trial) {
    for (DeltaStratum stratum : strata) {
      const C coin = randomCoinInStratum(rng, stratum);
      const Rational delta(coin.delta());
      const Rational trace(coin.a + coin.d);
      bool constant = true;
      const Rational first = eigSum(coin, 1);
      for (int n = 1; n <= 20; ++n) {
        const Rational got = eigSum(coin, n);
        const Rational expected =
            coin.delta() < 0
                ? (Rational(2 * n + 1) * trace * Rational(n) +
                   Rational(2 * n + 1) * delta) / Rational(2)
                : (Rational(n) * Rational(2 * n + 1) * trace +
                   Rational(static_cast<long long>(n) * n - 1) * delta) /
                      Rational(2);
        c.require(got == expected, "eigSum closed form mismatch");
        constant = constant && got == first;
      }
      c.require(!constant, "eigSum unexpectedly constant off (A)");
    }
  }
}

// ---------------------------------------------------------------- criterion 6

void criterion6(Check& c) {
  Rng rng(4006);
  for (int trial = 0; trial < 20 && c.pass; ++trial) {
    const C coin = randomConditionACoin(rng);
    for (int n = 1; n <= 30 && c.pass; ++n) {
      for (int k = -n; k <= n; k += 2) {
        const auto mat = sdmClosedForm(coin, n, k);
        c.require(maxCycleMean(mat) ==
                      MaxScalar<Rational>::finite(Rational(-k * coin.a)),
                  "max cycle mean != -ka at n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
      }
    }
  }
}

// ---------------------------------------------------------------- criterion 7

void criterion7(Check& c) {
  Rng rng(4007);
  for (int radius : {2, 5, 20, 50}) {
    for (int trial = 0; trial < 3 && c.pass; ++trial) {
      const C coin = randomConditionACoin(rng);

      c.require(windowSpectrum(coin, radius) ==
                    MaxScalar<Rational>::finite(Rational(0)),
                "window spectrum != 0 at K=" + std::to_string(radius));

      for (int k = -(radius - 1); k <= radius - 1; ++k)
        c.require(verifyLocalEigenEquation(coin, k),
                  "local eigen-equation fails at k=" + std::to_string(k));

      const auto w = buildWindow(coin, radius);
      const auto vec =
          eigenvector(w.matrix, MaxScalar<Rational>::finite(Rational(0)));
      const auto profile = stationaryVector(coin, radius);
      MaxVector<Rational> got = MaxVector<Rational>::Constant(
          2 * (2 * radius - 1), MaxScalar<Rational>::eps());
      MaxVector<Rational> want = got;
      Eigen::Index idx = 0;
      for (int k = -(radius - 1); k <= radius - 1; ++k)
        for (int comp = 0; comp < 2; ++comp, ++idx) {
          got(idx) = vec(w.indexOf(k, comp));
          want(idx) = MaxScalar<Rational>::finite(
              Rational(profile.at(k)(comp).value()));
        }
      c.require(tensorShift(got, want).has_value(),
                "window eigenvector not a shift of the stationary profile");
    }

    // interior blocks of every power up to K equal A_{i-j}^n
    const C coin = randomConditionACoin(rng);
    const auto w = buildWindow(coin, radius);
    MaxMatrix<long long> pw = identity<long long>(w.size());
    for (int n = 1; n <= radius && c.pass; ++n) {
      pw = otimes(pw, w.matrix);
      const int inner = radius - n;
      for (int i = -inner; i <= inner && c.pass; ++i)
        for (int j = -inner; j <= inner; ++j) {
          const int offset = i - j;
          const bool onSup = std::abs(offset) <= n && (n - offset) % 2 == 0;
          const Mat2<long long> expected =
              onSup ? sdmClosedForm(coin, n, offset) : allEps2<long long>();
          c.require(
              matEqual(pw.block<2, 2>(w.indexOf(i, 0), w.indexOf(j, 0)),
                       expected),
              "power block mismatch at K=" + std::to_string(radius) +
                  " n=" + std::to_string(n));
        }
    }
  }
}

// ---------------------------------------------------------------- criterion 8

void criterion8(Check& c) {
  const auto coin = qw::UnitaryCoin::hadamard();

  const auto state =
      qw::qwEvolve(qw::QwState::seeded(qw::Vector2c(1.0, 0.0)), coin, 500);
  c.require(std::abs(qw::totalProbability(state) - 1.0) <= 1e-12,
            "l2 norm drift beyond 1e-12 at n=500");

  for (int n = 0; n <= 30 && c.pass; ++n)
    c.require(std::abs(qw::frobeniusTotal(coin, n) - 1.0) <= 1e-10,
              "Frobenius identity fails at n=" + std::to_string(n));

  for (int n = 1; n <= 30 && c.pass; ++n) {
    const auto grid = qw::qwSdmRecursive(coin, n);
    for (int k = -n + 2; k <= n - 2; k += 2)
      c.require((qw::qwSdmClosedForm(coin, n, k) - grid.at(k))
                        .cwiseAbs()
                        .maxCoeff() <= 1e-10,
                "closed form vs recursion at n=" + std::to_string(n));
  }
}

// ---------------------------------------------------------------- criterion 9

void criterion9(Check& c) {
  const double inv = 1.0 / std::sqrt(2.0);
  const double f0 = qw::konnoDensity(0.0, inv);
  c.require(std::abs(f0 - 1.0 / 3.14159265358979323846) <= 1e-12,
            "f_K(0; 1/sqrt 2) != 1/pi");

  std::vector<double> grid;
  for (int i = -12; i <= 12; ++i) grid.push_back(0.05 * i);
  const auto report = qw::weakLimitCheck(
      qw::UnitaryCoin::hadamard(),
      qw::Vector2c(qw::Complex(inv, 0.0), qw::Complex(0.0, inv)), 1000, grid);
  c.require(report.supDiff <= 0.05,
            "sup CDF discrepancy " + std::to_string(report.supDiff) + " > 0.05");
}

// --------------------------------------------------------------- criterion 10

void criterion10(Check& c) {
  Rng rng(4010);
  for (int trial = 0; trial < 20 && c.pass; ++trial) {
    const C coin = randomConditionACoin(rng);
    for (int n = 1; n <= 8 && c.pass; ++n) {
      const auto coarse = qw::ultradiscretizationCheck(coin, 1e-2, n);
      const auto fine = qw::ultradiscretizationCheck(coin, 1e-3, n);
      c.require(coarse.structureOk && fine.structureOk,
                "eps pattern mismatch at n=" + std::to_string(n));
      c.require(coarse.withinBound && fine.withinBound,
                "deviation above eps*(n log2 + 4) at n=" + std::to_string(n));
      if (n >= 3)
        c.require(fine.maxDeviation < coarse.maxDeviation,
                  "deviation not decreasing in eps at n=" + std::to_string(n));
      else
        c.require(fine.maxDeviation <= coarse.maxDeviation,
                  "deviation increased in eps at n=" + std::to_string(n));
    }
  }
}

struct Criterion {
  int id;
  const char* label;
  double budgetSeconds;  // 0 = no stated budget
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "semiring laws + path/circuit oracles (exact)", 10.0, criterion1},
      {2, "closed form = recursion, n <= 12, 200 coins", 30.0, criterion2},
      {3, "all 16 product rules, 100 coins", 0.0, criterion3},
      {4, "A_1^3 worked example, 100 coins", 0.0, criterion4},
      {5, "eigenvalue-sum conservation iff (A), closed forms", 30.0, criterion5},
      {6, "max cycle mean of A_k^n is -ka under (A), n <= 30", 0.0, criterion6},
      {7, "window spectrum/stationarity/Toeplitz powers, K in {2,5,20,50}",
       60.0, criterion7},
      {8, "quantum walk conservation + Konno closed form", 0.0, criterion8},
      {9, "weak-limit CDF discrepancy <= 0.05 at n = 1000", 60.0, criterion9},
      {10, "ultradiscretization bound and monotonicity", 30.0, criterion10},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    criterion.run(check);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (criterion.budgetSeconds > 0 && seconds > criterion.budgetSeconds) {
      check.pass = false;
      check.detail << " (runtime " << seconds << "s exceeds "
                   << criterion.budgetSeconds << "s)";
    }
    std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n",
                check.pass ? "PASS" : "FAIL", criterion.id, criterion.label,
                seconds, check.detail.str().empty() ? "" : " - ",
                check.detail.str().c_str());
    if (!check.pass) ++failures;
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}

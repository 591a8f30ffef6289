#include "verify_suites.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "common.hpp"
#include "maxplus/sampling.hpp"
#include "maxplus/spectral.hpp"
#include "maxplus/walk/window.hpp"
#include "qw/konno.hpp"
#include "qw/ultradiscrete.hpp"

namespace suites {

using namespace maxplus;
using namespace maxplus::walk;

namespace {

using C = Coin<long long>;

std::string coinStr(const C& c) {
  std::ostringstream os;
  os << "a=" << c.a << ",b=" << c.b << ",c=" << c.c << ",d=" << c.d;
  return os.str();
}

}  // namespace

int runTable1(const Options& opt, std::ostream& os) {
  Rng rng(opt.seed);
  const Basis all[] = {Basis::P, Basis::Q, Basis::R, Basis::S};
  for (int trial = 0; trial < opt.trials; ++trial) {
    const C coin = randomCoin(rng);
    for (Basis x : all) {
      for (Basis y : all) {
        const auto rule = productRule(x, y, coin);
        const auto lhs = otimes(basisMatrix(coin, x), basisMatrix(coin, y));
        const auto rhs = otimes(MaxScalar<long long>::finite(rule.coefficient),
                                basisMatrix(coin, rule.basis));
        if (!matEqual(lhs, rhs)) {
          os << "table1: FAIL at coin " << coinStr(coin) << " pair ("
             << static_cast<int>(x) << "," << static_cast<int>(y) << ")\n";
          return 1;
        }
      }
    }
  }
  os << "table1: 16 product rules verified on " << opt.trials
     << " random coins - pass\n";
  return 0;
}

int runThm31(const Options& opt, std::ostream& os) {
  Rng rng(opt.seed);
  const int nMax = opt.steps > 0 ? opt.steps : 12;
  for (int trial = 0; trial < opt.trials; ++trial) {
    const C coin = randomCoin(rng);
    SdmGrid<long long> grid = SdmGrid<long long>::initial();
    for (int n = 0; n <= nMax; ++n) {
      if (n > 0) grid = sdmStep(grid, coin);
      for (int k = -n; k <= n; k += 2) {
        if (!matEqual(sdmClosedForm(coin, n, k), grid.at(k))) {
          os << "thm3-1: FAIL at coin " << coinStr(coin) << " n=" << n
             << " k=" << k << "\n";
          return 1;
        }
      }
    }
  }
  os << "thm3-1: closed form = recursion for n <= " << nMax << " on "
     << opt.trials << " random coins - pass\n";
  return 0;
}

int runThm41(const Options& opt, std::ostream& os) {
  Rng rng(opt.seed);
  const int nMax = opt.steps > 0 ? opt.steps : 20;
  int classified = 0;
  for (int trial = 0; trial < opt.trials; ++trial) {
    C coin;
    switch (trial % 4) {
      case 0: coin = randomConditionACoin(rng); break;
      case 1: coin = randomCoinInStratum(rng, DeltaStratum::Negative); break;
      case 2: coin = randomCoinInStratum(rng, DeltaStratum::ZeroTraceNonzero); break;
      default: coin = randomCoinInStratum(rng, DeltaStratum::Positive); break;
    }
    const bool underA = checkConditionA(coin).satisfied;
    bool constant = true;
    const Rational first = eigSum(coin, 1);
    for (int n = 2; n <= nMax && constant; ++n)
      constant = eigSum(coin, n) == first;
    if (constant != underA || (underA && first != Rational(0))) {
      os << "thm4-1: FAIL at coin " << coinStr(coin)
         << " (conserved=" << constant << ", condition A=" << underA << ")\n";
      return 1;
    }
    // the proof's closed forms for the non-(A) strata
    if (!underA) {
      for (int n = 1; n <= nMax; ++n) {
        const Rational delta(coin.delta());
        const Rational trace(coin.a + coin.d);
        const Rational expected =
            coin.delta() < 0
                ? (Rational(2 * n + 1) * trace * Rational(n) +
                   Rational(2 * n + 1) * delta) / Rational(2)
                : (Rational(n) * Rational(2 * n + 1) * trace +
                   Rational(static_cast<long long>(n) * n - 1) * delta) /
                      Rational(2);
        if (eigSum(coin, n) != expected) {
          os << "thm4-1: FAIL closed form at coin " << coinStr(coin)
             << " n=" << n << "\n";
          return 1;
        }
      }
    }
    ++classified;
  }
  os << "thm4-1: " << classified << "/" << opt.trials
     << " coins classified correctly (conserved iff condition A) - pass\n";
  return 0;
}

int runThm51(const Options& opt, std::ostream& os) {
  Rng rng(opt.seed);
  const int radius = opt.radius > 0 ? opt.radius : 50;
  const int coins = opt.trials > 0 ? std::min(opt.trials, 20) : 5;
  for (int trial = 0; trial < coins; ++trial) {
    const C coin = randomConditionACoin(rng);

    const auto spectrum = windowSpectrum(coin, radius);
    if (!(spectrum == MaxScalar<Rational>::finite(Rational(0)))) {
      os << "thm5-1: FAIL spectrum != 0 at coin " << coinStr(coin) << "\n";
      return 1;
    }

    for (int k = -radius; k <= radius; ++k) {
      if (!verifyLocalEigenEquation(coin, k)) {
        os << "thm5-1: FAIL local eigen-equation at coin " << coinStr(coin)
           << " k=" << k << "\n";
        return 1;
      }
    }

    const auto w = buildWindow(coin, radius);
    const auto vec =
        eigenvector(w.matrix, MaxScalar<Rational>::finite(Rational(0)));
    const auto profile = stationaryVector(coin, radius);
    MaxVector<Rational> got = MaxVector<Rational>::Constant(
        2 * (2 * radius - 1), MaxScalar<Rational>::eps());
    MaxVector<Rational> want = got;
    Eigen::Index idx = 0;
    for (int k = -(radius - 1); k <= radius - 1; ++k) {
      for (int comp = 0; comp < 2; ++comp, ++idx) {
        got(idx) = vec(w.indexOf(k, comp));
        want(idx) =
            MaxScalar<Rational>::finite(Rational(profile.at(k)(comp).value()));
      }
    }
    if (!tensorShift(got, want)) {
      os << "thm5-1: FAIL eigenvector not proportional to the stationary "
            "profile at coin "
         << coinStr(coin) << "\n";
      return 1;
    }
  }

  // block-Toeplitz structure of the powers, checked on a moderate window
  const int powRadius = std::min(radius, 12);
  const C coin = randomConditionACoin(rng);
  const auto w = buildWindow(coin, powRadius);
  MaxMatrix<long long> pw = identity<long long>(w.size());
  for (int n = 1; n <= powRadius; ++n) {
    pw = otimes(pw, w.matrix);
    const int inner = powRadius - n;
    for (int i = -inner; i <= inner; ++i) {
      for (int j = -inner; j <= inner; ++j) {
        const int offset = i - j;
        const auto block = pw.block<2, 2>(w.indexOf(i, 0), w.indexOf(j, 0));
        const bool onSup = std::abs(offset) <= n && (n - offset) % 2 == 0;
        const Mat2<long long> expected =
            onSup ? sdmClosedForm(coin, n, offset) : allEps2<long long>();
        if (!matEqual(block, expected)) {
          os << "thm5-1: FAIL power block (" << i << "," << j << ") at n=" << n
             << "\n";
          return 1;
        }
      }
    }
  }

  os << "thm5-1: spectrum 0, stationarity and Toeplitz powers on K=" << radius
     << " - pass\n";
  return 0;
}

int runUd(const Options& opt, std::ostream& os) {
  Rng rng(opt.seed);
  const int nMax = opt.steps > 0 ? opt.steps : 8;
  const int coins = std::min(opt.trials, 50);
  for (int trial = 0; trial < coins; ++trial) {
    const C coin = randomConditionACoin(rng);
    for (int n = 1; n <= nMax; ++n) {
      const auto fine = qw::ultradiscretizationCheck(coin, 1e-3, n);
      const auto coarse = qw::ultradiscretizationCheck(coin, 1e-2, n);
      if (!fine.structureOk || !coarse.structureOk || !fine.withinBound ||
          !coarse.withinBound) {
        os << "ud: FAIL bound at coin " << coinStr(coin) << " n=" << n << "\n";
        return 1;
      }
      if (n >= 3 && !(fine.maxDeviation < coarse.maxDeviation)) {
        os << "ud: FAIL deviation not decreasing at coin " << coinStr(coin)
           << " n=" << n << "\n";
        return 1;
      }
    }
  }
  os << "ud: log-sum-exp walk within eps*(n log2 + 4) of the max-plus walk, "
        "deviation decreasing, on "
     << coins << " coins - pass\n";
  return 0;
}

int runWeakLimit(const Options& opt, std::ostream& os) {
  const int steps = opt.steps > 0 ? opt.steps : 1000;
  const auto coin = qw::UnitaryCoin::hadamard();
  const double inv = 1.0 / std::sqrt(2.0);
  const qw::Vector2c phi(qw::Complex(inv, 0.0), qw::Complex(0.0, inv));
  std::vector<double> grid;
  for (int i = -12; i <= 12; ++i) grid.push_back(0.05 * i);

  const auto report = qw::weakLimitCheck(coin, phi, steps, grid);

  if (opt.csvOut) {
    std::ostringstream csv;
    csv << "u,empirical_cdf,limit_cdf,abs_diff\n";
    for (const auto& row : report.rows)
      csv << io::formatNumber(row.u) << ',' << io::formatNumber(row.empirical)
          << ',' << io::formatNumber(row.limit) << ','
          << io::formatNumber(row.absDiff) << '\n';
    cli::writeFile(*opt.csvOut, csv.str());
  }

  const double f0 = qw::konnoDensity(0.0, inv);
  const double expected = 1.0 / 3.14159265358979323846;
  if (std::abs(f0 - expected) > 1e-12) {
    os << "weak-limit: FAIL f_K(0; 1/sqrt 2) = " << f0 << " != 1/pi\n";
    return 1;
  }
  if (report.supDiff > 0.05) {
    os << "weak-limit: FAIL sup|empirical - limit| = " << report.supDiff
       << " > 0.05 at n=" << steps << "\n";
    return 1;
  }
  os << "weak-limit: sup discrepancy " << report.supDiff << " <= 0.05 at n="
     << steps << ", f_K(0) = 1/pi - pass\n";
  return 0;
}

int runSuite(const std::string& name, const Options& opt, std::ostream& os) {
  if (name == "table1") return runTable1(opt, os);
  if (name == "thm3-1") return runThm31(opt, os);
  if (name == "thm4-1") return runThm41(opt, os);
  if (name == "thm5-1") return runThm51(opt, os);
  if (name == "ud") return runUd(opt, os);
  if (name == "weak-limit") return runWeakLimit(opt, os);
  if (name == "all") {
    int rc = 0;
    for (const char* s :
         {"table1", "thm3-1", "thm4-1", "thm5-1", "ud", "weak-limit"})
      rc |= runSuite(s, opt, os);
    return rc;
  }
  throw cli::ConfigError("unknown verification suite '" + name + "'");
}

}  // namespace suites

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "maxplus/digraph.hpp"
#include "maxplus/io.hpp"
#include "maxplus/sampling.hpp"
#include "maxplus/spectral.hpp"
#include "oracles.hpp"

using namespace maxplus;

namespace {

using MS = MaxScalar<long long>;
using MM = MaxMatrix<long long>;

MM parse(const std::string& text) {
  std::istringstream is(text);
  auto ms = io::readMatricesText<long long>(is);
  REQUIRE(ms.size() == 1);
  return ms[0];
}

}  // namespace

TEST_CASE("scalar addition is max with eps as identity") {
  CHECK(oplus(fin(2), fin(3)) == fin(3));
  CHECK(oplus(MS::eps(), fin(5)) == fin(5));
  CHECK(oplus(MS::eps(), MS::eps()) == MS::eps());
}

TEST_CASE("scalar multiplication is plus with eps absorbing") {
  CHECK(otimes(fin(2), fin(3)) == fin(5));
  CHECK(otimes(MS::eps(), fin(5)) == MS::eps());
  CHECK(otimes(MS::unit(), fin(7)) == fin(7));
  CHECK(otimes(MS::eps(), MS::eps()) == MS::eps());
}

TEST_CASE("semiring laws hold on random scalars") {
  Rng rng(2024);
  auto draw = [&]() {
    if (sampleInt(rng, 0, 9) == 0) return MS::eps();
    return MS::finite(sampleInt(rng, -50, 50));
  };
  for (int i = 0; i < 1200; ++i) {
    const MS x = draw(), y = draw(), z = draw();
    CHECK(oplus(x, y) == oplus(y, x));
    CHECK(oplus(oplus(x, y), z) == oplus(x, oplus(y, z)));
    CHECK(oplus(x, x) == x);
    CHECK(otimes(otimes(x, y), z) == otimes(x, otimes(y, z)));
    CHECK(otimes(x, y) == otimes(y, x));
    CHECK(otimes(x, oplus(y, z)) == oplus(otimes(x, y), otimes(x, z)));
    CHECK(otimes(x, MS::eps()) == MS::eps());
    CHECK(otimes(x, MS::unit()) == x);
    CHECK(oplus(x, MS::eps()) == x);
  }
}

TEST_CASE("matrix sum is entrywise max") {
  const MM a = parse("1 e\ne 2\n");
  const MM b = parse("0 3\ne e\n");
  CHECK(matEqual(oplus(a, b), parse("1 3\ne 2\n")));
  CHECK(matEqual(oplus(a, a), a));
  CHECK(matEqual(oplus(a, allEps<long long>(2, 2)), a));
  CHECK_THROWS_AS(oplus(a, allEps<long long>(2, 3)), std::invalid_argument);
}

TEST_CASE("matrix product follows the semiring rule") {
  const MM a = parse("0 e\ne e\n");
  const MM b = parse("e 1\n2 e\n");
  CHECK(matEqual(otimes(a, b), parse("e 1\ne e\n")));

  Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    const MM m = randomMatrix(rng, 3, 3, 300);
    CHECK(matEqual(otimes(m, identity<long long>(3)), m));
    CHECK(matEqual(otimes(identity<long long>(3), m), m));
  }
  CHECK_THROWS_AS(otimes(a, allEps<long long>(3, 2)), std::invalid_argument);
}

TEST_CASE("matrix semiring laws on random matrices") {
  Rng rng(2025);
  for (int i = 0; i < 60; ++i) {
    const auto n = sampleInt(rng, 1, 4);
    const auto m = sampleInt(rng, 1, 4);
    const auto p = sampleInt(rng, 1, 4);
    const auto q = sampleInt(rng, 1, 4);
    const MM a = randomMatrix(rng, n, m, 250);
    const MM b = randomMatrix(rng, m, p, 250);
    const MM c = randomMatrix(rng, p, q, 250);
    CHECK(matEqual(otimes(otimes(a, b), c), otimes(a, otimes(b, c))));
    const MM b2 = randomMatrix(rng, m, p, 250);
    CHECK(matEqual(otimes(a, oplus(b, b2)), oplus(otimes(a, b), otimes(a, b2))));
    const MS alpha = MS::finite(sampleInt(rng, -9, 9));
    CHECK(matEqual(otimes(alpha, otimes(a, b)), otimes(otimes(alpha, a), b)));
  }
}

TEST_CASE("scalar multiple shifts every finite entry") {
  const MM a = parse("0 1\ne 2\n");
  CHECK(matEqual(otimes(fin(3), a), parse("3 4\ne 5\n")));
  CHECK(matEqual(otimes(MS::eps(), a), allEps<long long>(2, 2)));
  CHECK(matEqual(otimes(MS::unit(), a), a));
}

TEST_CASE("tropical determinant") {
  const MM a = parse("1 2\n3 4\n");
  CHECK(tropdet(a) == fin(5));  // max(1+4, 2+3)
  CHECK(tropdet(identity<long long>(2)) == fin(0));

  // tropdet(H) = 0 whenever a+d = b+c = 0
  const MM h = parse("1 2\n-2 -1\n");
  CHECK(tropdet(h) == fin(0));

  CHECK_THROWS_AS(tropdet(allEps<long long>(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(tropdet(allEps<long long>(9, 9)), std::invalid_argument);

  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto n = sampleInt(rng, 1, 4);
    const MM m = randomMatrix(rng, n, n, 300);
    CHECK(tropdet(m) == oracles::tropdetExpansion(m));
  }
}

TEST_CASE("digraph conversion") {
  const MM a = parse("e 2\n3 e\n");
  const auto g = toDigraph(a);
  REQUIRE(g.edges.size() == 2);
  CHECK(g.vertexCount == 2);
  CHECK(g.edges[0].tail == 1);
  CHECK(g.edges[0].head == 2);
  CHECK(g.edges[0].weight == 2);
  CHECK(g.edges[1].tail == 2);
  CHECK(g.edges[1].head == 1);
  CHECK(g.edges[1].weight == 3);

  CHECK(toDigraph(allEps<long long>(3, 3)).edges.empty());

  Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    const auto n = sampleInt(rng, 1, 5);
    const MM m = randomMatrix(rng, n, n, 400);
    CHECK(matEqual(fromDigraph(toDigraph(m)), m));
  }

  WeightedDigraph<long long> dup;
  dup.vertexCount = 2;
  dup.edges = {{1, 2, 1}, {1, 2, 3}};
  CHECK_THROWS_AS(fromDigraph(dup), std::invalid_argument);
}

TEST_CASE("circuit average weight") {
  WeightedDigraph<long long> g;
  g.vertexCount = 2;
  g.edges = {{1, 2, 2}, {2, 1, 3}};
  CHECK(circuitAverageWeight(g, {1, 2, 1}) == Rational(5, 2));

  WeightedDigraph<long long> loop;
  loop.vertexCount = 1;
  loop.edges = {{1, 1, 0}};
  CHECK(circuitAverageWeight(loop, {1, 1}) == Rational(0));

  WeightedDigraph<long long> tri;
  tri.vertexCount = 3;
  tri.edges = {{1, 2, 1}, {2, 3, 1}, {3, 1, 1}};
  CHECK(circuitAverageWeight(tri, {1, 2, 3, 1}) == Rational(1));

  CHECK_THROWS_AS(circuitAverageWeight(g, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(circuitAverageWeight(tri, {1, 3, 1}), std::invalid_argument);
}

TEST_CASE("kleene star") {
  const MM a = parse("e -1\n-2 e\n");
  CHECK(matEqual(kleeneStar(a), parse("0 -1\n-2 0\n")));
  CHECK(matEqual(kleeneStar(allEps<long long>(3, 3)), identity<long long>(3)));

  MM diverging = parse("1 e\ne e\n");
  CHECK_THROWS_AS(kleeneStar(diverging), PositiveCircuitError);

  Rng rng(17);
  for (int i = 0; i < 60; ++i) {
    const auto n = sampleInt(rng, 1, 5);
    const MM m = randomMatrix(rng, n, n, 350, -9, 0);  // nonpositive: no divergence
    const MM star = kleeneStar(m);
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index c = 0; c < n; ++c)
        CHECK(star(r, c) ==
              oracles::bestWalkUpTo(m, static_cast<int>(r), static_cast<int>(c),
                                    static_cast<int>(n) - 1));
  }
}

TEST_CASE("matrix powers give best fixed-length walks") {
  Rng rng(19);
  for (int i = 0; i < 25; ++i) {
    const auto n = sampleInt(rng, 1, 5);
    const MM m = randomMatrix(rng, n, n, 350);
    for (int len = 0; len <= 6; ++len) {
      const MM p = power(m, len);
      for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c)
          CHECK(p(r, c) == oracles::bestWalkExact(m, static_cast<int>(r),
                                                  static_cast<int>(c), len));
    }
  }
}

TEST_CASE("maximum cycle mean") {
  CHECK(maxCycleMean(parse("e 2\n3 e\n")) ==
        MaxScalar<Rational>::finite(Rational(5, 2)));
  CHECK(maxCycleMean(parse("1\n")) == MaxScalar<Rational>::finite(Rational(1)));
  CHECK(maxCycleMean(parse("e 1\ne e\n")) == MaxScalar<Rational>::eps());

  // Non-strongly-connected input: the max over components.
  const MM two = parse("1 0\ne 3\n");
  CHECK(maxCycleMean(two) == MaxScalar<Rational>::finite(Rational(3)));

  Rng rng(23);
  for (int i = 0; i < 150; ++i) {
    const auto n = sampleInt(rng, 1, 6);
    const MM m = randomMatrix(rng, n, n, sampleInt(rng, 100, 700));
    const auto karp = maxCycleMean(m);
    const auto brute = oracles::bestCircuitMean(m);
    if (brute)
      CHECK(karp == MaxScalar<Rational>::finite(*brute));
    else
      CHECK(karp == MaxScalar<Rational>::eps());
  }
}

TEST_CASE("eigenvector from critical columns") {
  const MM a = parse("0 -1\n1 0\n");
  const auto lambda = maxCycleMean(a);
  CHECK(lambda == MaxScalar<Rational>::finite(Rational(0)));
  const auto v = eigenvector(a, lambda);
  REQUIRE(v.size() == 2);
  CHECK(v(0) == MaxScalar<Rational>::finite(Rational(0)));
  CHECK(v(1) == MaxScalar<Rational>::finite(Rational(1)));
  CHECK(matEqual(otimes(liftNumeric<Rational>(a), v), otimes(lambda, v)));

  // scalar case
  const MM s = parse("4\n");
  const auto vs = eigenvector(s, maxCycleMean(s));
  CHECK(vs(0) == MaxScalar<Rational>::finite(Rational(0)));

  CHECK_THROWS_AS(eigenvector(a, MaxScalar<Rational>::eps()),
                  std::invalid_argument);

  Rng rng(29);
  for (int i = 0; i < 80; ++i) {
    const auto n = sampleInt(rng, 1, 6);
    const MM m = randomStronglyConnectedMatrix(rng, n);
    const auto lam = maxCycleMean(m);
    REQUIRE(lam.isFinite());
    const auto x = eigenvector(m, lam);
    bool nonTrivial = false;
    for (Eigen::Index j = 0; j < x.size(); ++j)
      nonTrivial = nonTrivial || x(j).isFinite();
    CHECK(nonTrivial);
    CHECK(matEqual(otimes(liftNumeric<Rational>(m), x), otimes(lam, x)));
  }
}

TEST_CASE("strongly connected components") {
  WeightedDigraph<long long> cyc;
  cyc.vertexCount = 2;
  cyc.edges = {{1, 2, 0}, {2, 1, 0}};
  CHECK(stronglyConnected(cyc));

  WeightedDigraph<long long> none;
  none.vertexCount = 2;
  CHECK_FALSE(stronglyConnected(none));
  CHECK(sccDecompose(none).componentCount == 2);

  WeightedDigraph<long long> chain;
  chain.vertexCount = 3;
  chain.edges = {{1, 2, 0}, {2, 3, 0}, {3, 2, 0}};
  const auto scc = sccDecompose(chain);
  CHECK(scc.componentCount == 2);
  CHECK(scc.componentOf[1] == scc.componentOf[2]);
  CHECK(scc.componentOf[0] != scc.componentOf[1]);
}

TEST_CASE("float mode uses tagged eps and tolerance comparisons") {
  using MD = MaxScalar<double>;
  CHECK(oplus(MD::eps(), MD::finite(1.5)) == MD::finite(1.5));
  CHECK(otimes(MD::eps(), MD::finite(1.5)) == MD::eps());
  CHECK(approxEqual(MD::finite(1.0), MD::finite(1.0 + 1e-12)));
  CHECK_FALSE(approxEqual(MD::finite(1.0), MD::finite(1.0 + 1e-6)));
  CHECK_FALSE(approxEqual(MD::eps(), MD::finite(0.0)));

  MaxMatrix<double> a = allEps<double>(2, 2);
  a(0, 1) = MD::finite(-1.0);
  a(1, 0) = MD::finite(-2.0);
  const auto star = kleeneStar(a);
  CHECK(star(0, 0) == MD::finite(0.0));
  CHECK(maxCycleMean(a) == MaxScalar<double>::finite(-1.5));
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(-4, 8) == Rational(-1, 2));
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK(Rational(7, 2) * Rational(2, 7) == Rational(1));
  CHECK((-Rational(3, 2)).num() == -3);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK(Rational(5, -10) == Rational(-1, 2));
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(-7).str() == "-7");
}

TEST_CASE("matrix text and json round trips") {
  const MM a = parse("1 e -4\nE 0 2\n7 e e\n");
  CHECK(a(0, 1).isEps());
  CHECK(a(1, 0).isEps());  // 'E' accepted case-insensitively
  CHECK(a(2, 0) == fin(7));

  std::ostringstream os;
  io::writeMatrixText(os, a);
  std::istringstream is(os.str());
  const auto back = io::readMatricesText<long long>(is);
  REQUIRE(back.size() == 1);
  CHECK(matEqual(back[0], a));

  std::istringstream two("0 1\n\n2 e\n3 4\n");
  const auto pair = io::readMatricesText<long long>(two);
  REQUIRE(pair.size() == 2);
  CHECK(pair[0].rows() == 1);
  CHECK(pair[1].rows() == 2);

  const auto j = io::matrixToJson(a);
  CHECK(j["rows"] == 3);
  CHECK(j["entries"][0][1] == "eps");
  CHECK(matEqual(io::matrixFromJson<long long>(j), a));

  std::istringstream bad("1 x\n");
  CHECK_THROWS_AS(io::readMatricesText<long long>(bad), std::invalid_argument);
}

TEST_CASE("double round trip through text format") {
  MaxMatrix<double> a = allEps<double>(2, 2);
  a(0, 0) = MaxScalar<double>::finite(0.1);
  a(1, 1) = MaxScalar<double>::finite(-3.25);
  std::ostringstream os;
  io::writeMatrixText(os, a);
  std::istringstream is(os.str());
  const auto back = io::readMatricesText<double>(is);
  REQUIRE(back.size() == 1);
  CHECK(matEqual(back[0], a));  // to_chars round-trips exactly
}

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "nrcdt/cdt.hpp"
#include "nrcdt/rng.hpp"

using namespace nrcdt;

namespace {

Measure1D two_atoms() {
  Vec a(2), w(2);
  a << 1.0, 3.0;
  w << 0.5, 0.5;
  return Measure1D(a, w);
}

Measure1D random_measure(int max_atoms, Rng& rng, bool uniform_weights) {
  int k = 1 + static_cast<int>(rng.next_u64() %
                               static_cast<std::uint64_t>(max_atoms));
  Vec a(k), w(k);
  for (int i = 0; i < k; ++i) {
    a[i] = rng.uniform(-5.0, 5.0);
    w[i] = uniform_weights ? 1.0 : rng.uniform(0.1, 1.0);
  }
  return Measure1D(a, w);
}

// north-west-corner transport between sorted discrete measures; the exact
// 1-D optimal coupling for convex costs
double w2_oracle(const Measure1D& m1, const Measure1D& m2) {
  Eigen::Index i = 0, j = 0;
  double wi = m1.weights()[0], wj = m2.weights()[0];
  double cost = 0.0;
  while (true) {
    double move = std::min(wi, wj);
    double d = m1.atoms()[i] - m2.atoms()[j];
    cost += move * d * d;
    wi -= move;
    wj -= move;
    if (wi <= 1e-15) {
      if (++i >= m1.size()) break;
      wi = m1.weights()[i];
    }
    if (wj <= 1e-15) {
      if (++j >= m2.size()) break;
      wj = m2.weights()[j];
    }
  }
  return std::sqrt(cost);
}

}  // namespace

TEST_CASE("QuantileGrid midpoints are symmetric") {
  QuantileGrid g(8);
  for (int j = 0; j < 8; ++j) {
    CHECK(g.t(j) > 0.0);
    CHECK(g.t(j) < 1.0);
    CHECK(g.t(j) + g.t(7 - j) == 1.0);
  }
  CHECK_THROWS_AS(QuantileGrid(0), std::invalid_argument);
}

TEST_CASE("cdf_eval is the right-continuous step function") {
  Measure1D d0 = Measure1D::dirac(0.0);
  CHECK(cdf_eval(d0, -1.0) == 0.0);
  CHECK(cdf_eval(d0, 0.0) == 1.0);
  Measure1D m = two_atoms();
  CHECK(cdf_eval(m, 2.0) == 0.5);
  CHECK(cdf_eval(m, 0.5) == 0.0);
  CHECK(cdf_eval(m, 3.0) == 1.0);
  // non-decreasing on a sampled grid
  double prev = -1.0;
  for (double s = -1.0; s <= 4.0; s += 0.01) {
    double v = cdf_eval(m, s);
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("quantile_eval uses the strict-inequality convention") {
  Measure1D m = two_atoms();
  CHECK(quantile_eval(m, 0.25) == 1.0);
  CHECK(quantile_eval(m, 0.5) == 3.0);  // F(s) > t, not >=
  CHECK(quantile_eval(m, 0.75) == 3.0);
  Measure1D da = Measure1D::dirac(2.5);
  for (double t : {0.1, 0.5, 0.9}) CHECK(quantile_eval(da, t) == 2.5);
  CHECK_THROWS_AS(quantile_eval(m, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(quantile_eval(m, 1.0), std::invalid_argument);
}

TEST_CASE("cdt_sample of the discretized reference is the identity") {
  const int n = 512;
  Vec a(n), w(n);
  for (int i = 0; i < n; ++i) {
    a[i] = (i + 0.5) / n;
    w[i] = 1.0;
  }
  Measure1D rho(a, w);
  QuantileGrid g(64);
  Vec v = cdt_sample(rho, g, CdtMode::Exact);
  for (int j = 0; j < 64; ++j)
    CHECK(std::abs(v[j] - g.t(j)) <= 1.0 / n + 1e-12);
}

TEST_CASE("cdt_sample of a Dirac is constant, and always non-decreasing") {
  QuantileGrid g(32);
  Vec v = cdt_sample(Measure1D::dirac(-1.75), g, CdtMode::Exact);
  CHECK(v.minCoeff() == -1.75);
  CHECK(v.maxCoeff() == -1.75);
  Rng rng(8);
  for (int trial = 0; trial < 25; ++trial) {
    Measure1D m = random_measure(10, rng, false);
    Vec s = cdt_sample(m, g, CdtMode::Exact);
    for (int j = 0; j + 1 < 32; ++j) CHECK(s[j] <= s[j + 1]);
  }
}

TEST_CASE("exact-mode CDT is shift and scale equivariant") {
  Rng rng(9);
  QuantileGrid g(64);
  for (int trial = 0; trial < 20; ++trial) {
    Measure1D m = random_measure(8, rng, false);
    double c = rng.uniform(-3.0, 3.0);
    double s = rng.uniform(0.1, 4.0);
    Vec base = cdt_sample(m, g, CdtMode::Exact);
    Measure1D shifted(m.atoms().array() + c, m.weights());
    Measure1D scaled(m.atoms() * s, m.weights());
    CHECK((cdt_sample(shifted, g, CdtMode::Exact) - (base.array() + c).matrix())
              .cwiseAbs()
              .maxCoeff() == 0.0);
    CHECK((cdt_sample(scaled, g, CdtMode::Exact) - base * s)
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }
}

TEST_CASE("linear-interp mode inverts the histogram CDF") {
  // histogram: two bins of width 0.5 centered at 0.25 and 0.75 with masses
  // 0.25 / 0.75; the quantile function is piecewise linear
  Vec a(2), w(2);
  a << 0.25, 0.75;
  w << 0.25, 0.75;
  Measure1D m(a, w);
  QuantileGrid g(1000);
  Vec v = cdt_sample(m, g, CdtMode::LinearInterp, 0.5);
  for (int j = 0; j < 1000; ++j) {
    double t = g.t(j);
    double expected =
        t < 0.25 ? t / 0.25 * 0.5 : 0.5 + (t - 0.25) / 0.75 * 0.5;
    CHECK(v[j] == doctest::Approx(expected).epsilon(1e-12));
  }
  CHECK_THROWS_AS(cdt_sample(m, g, CdtMode::LinearInterp),
                  std::invalid_argument);
}

TEST_CASE("wasserstein2 matches hand values") {
  QuantileGrid g(10000);
  CHECK(wasserstein2(Measure1D::dirac(0.0), Measure1D::dirac(-2.5), g) ==
        doctest::Approx(2.5));
  Vec a1(2), a2(2), w(2);
  a1 << 0.0, 1.0;
  a2 << 2.0, 3.0;
  w << 0.5, 0.5;
  CHECK(wasserstein2(Measure1D(a1, w), Measure1D(a2, w), g) ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("wasserstein2 agrees with the sorted-matching transport oracle") {
  Rng rng(123);
  QuantileGrid g(10000);
  for (int trial = 0; trial < 100; ++trial) {
    Measure1D m1 = random_measure(10, rng, false);
    Measure1D m2 = random_measure(10, rng, false);
    CHECK(std::abs(wasserstein2(m1, m2, g) - w2_oracle(m1, m2)) < 1e-3);
  }
}

TEST_CASE("wasserstein2 is exact for equal atom counts with uniform weights") {
  Rng rng(321);
  QuantileGrid g(10000);
  for (int k : {1, 2, 4, 5, 8, 10}) {  // all divide 10^4
    Vec a1(k), a2(k), w(k);
    for (int i = 0; i < k; ++i) {
      a1[i] = rng.uniform(-4.0, 4.0);
      a2[i] = rng.uniform(-4.0, 4.0);
      w[i] = 1.0;
    }
    Measure1D m1(a1, w), m2(a2, w);
    CHECK(std::abs(wasserstein2(m1, m2, g) - w2_oracle(m1, m2)) < 1e-8);
  }
}

TEST_CASE("wasserstein2 is a metric on sampled measures") {
  Rng rng(55);
  QuantileGrid g(2048);
  for (int trial = 0; trial < 30; ++trial) {
    Measure1D x = random_measure(6, rng, false);
    Measure1D y = random_measure(6, rng, false);
    Measure1D z = random_measure(6, rng, false);
    CHECK(wasserstein2(x, x, g) == 0.0);
    CHECK(wasserstein2(x, y, g) == doctest::Approx(wasserstein2(y, x, g)));
    CHECK(wasserstein2(x, z, g) <=
          wasserstein2(x, y, g) + wasserstein2(y, z, g) + 1e-9);
  }
}

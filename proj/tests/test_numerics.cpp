#include <cmath>

#include "doctest.h"
#include "ymlab/numerics.hpp"

using namespace ymlab;

TEST_CASE("gauss-legendre integrates polynomials exactly") {
  // order p is exact through degree 2p - 1
  const double v = integrate([](double x) { return x * x * x * x * x * x; }, -1.0, 2.0, 8);
  const double exact = (std::pow(2.0, 7.0) - std::pow(-1.0, 7.0)) / 7.0;
  CHECK(std::abs(v - exact) < 1e-13);
}

TEST_CASE("gauss-legendre weights sum to the interval length") {
  const QuadRule rule = gauss_legendre(32, 0.25, 0.75);
  double sum = 0.0;
  for (double w : rule.weights) sum += w;
  CHECK(std::abs(sum - 0.5) < 1e-14);
}

TEST_CASE("bump has unit integral and compact support") {
  const double mass = integrate_composite(
      [](double s) { return bump(s, 0.4, 0.15); }, 0.25, 0.55, 32, 16);
  CHECK(std::abs(mass - 1.0) < 1e-12);
  CHECK(bump(0.249, 0.4, 0.15) == 0.0);
  CHECK(bump(0.551, 0.4, 0.15) == 0.0);
}

TEST_CASE("smoothstep endpoints are flat") {
  CHECK(smoothstep(0.0) == 0.0);
  CHECK(smoothstep(1.0) == 1.0);
  CHECK(smoothstep_deriv(1.0 - 1e-9) < 1e-15);
  // interior derivative matches a finite difference
  const double fd = (smoothstep(0.3 + 1e-6) - smoothstep(0.3 - 1e-6)) / 2e-6;
  CHECK(std::abs(fd - smoothstep_deriv(0.3)) < 1e-8);
}

TEST_CASE("richardson cancels the leading error term") {
  auto g = [](double w) { return 3.0 + 2.0 * w * w + 0.5 * w * w * w * w; };
  const double ext = richardson(g(0.2), g(0.1), 2);
  CHECK(std::abs(ext - 3.0) < 3e-4);
}

TEST_CASE("jackknife matches the direct stderr for a plain mean") {
  Rng rng(7);
  std::vector<double> xs(256);
  for (auto& x : xs) x = rng.gaussian();
  const auto direct = mean_and_stderr(xs);
  const auto jack = jackknife(xs);
  CHECK(std::abs(direct.mean - jack.mean) < 1e-15);
  CHECK(std::abs(direct.stderr_ - jack.stderr_) / direct.stderr_ < 1e-10);
}

TEST_CASE("regression slope recovers a line") {
  std::vector<double> x{1.0, 2.0, 3.0, 4.0}, y;
  for (double v : x) y.push_back(-0.5 * v + 3.0);
  CHECK(std::abs(regression_slope(x, y) + 0.5) < 1e-13);
}

TEST_CASE("latin hypercube fills every stratum once per axis") {
  Box box{{0.0, -1.0}, {1.0, 1.0}};
  Rng rng(3);
  const auto pts = latin_hypercube(box, 16, rng);
  REQUIRE(pts.size() == 16);
  for (int axis = 0; axis < 2; ++axis) {
    std::vector<bool> seen(16, false);
    for (const auto& p : pts) {
      const double u = (p[axis] - box.lo[axis]) / (box.hi[axis] - box.lo[axis]);
      const int stratum = static_cast<int>(u * 16.0);
      REQUIRE(stratum >= 0);
      REQUIRE(stratum < 16);
      CHECK(!seen[stratum]);
      seen[stratum] = true;
    }
  }
}

TEST_CASE("rng substreams are deterministic and distinct") {
  Rng a(42), b(42);
  CHECK(a.u64() == b.u64());
  Rng s0 = a.substream(0);
  Rng s1 = a.substream(1);
  CHECK(s0.u64() != s1.u64());
  // substream does not depend on parent consumption
  Rng c(42);
  c.gaussian();
  c.gaussian();
  Rng s0_again = c.substream(0);
  Rng s0_ref = b.substream(0);
  CHECK(s0_again.u64() == s0_ref.u64());
}

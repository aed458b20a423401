#include <cmath>
#include <memory>

#include "doctest.h"
#include "test_support.hpp"
#include "ymlab/connection.hpp"
#include "ymlab/errors.hpp"
#include "ymlab/holonomy.hpp"
#include "ymlab/numerics.hpp"

using namespace ymlab;
using namespace ymlab::testing;

namespace {

RVector point2(double a, double b) {
  RVector x(2);
  x << a, b;
  return x;
}

RVector point3(double a, double b, double c) {
  RVector x(3);
  x << a, b, c;
  return x;
}

Eigen::MatrixXd fmat2(double f01) {
  Eigen::MatrixXd f = Eigen::MatrixXd::Zero(2, 2);
  f(0, 1) = f01;
  f(1, 0) = -f01;
  return f;
}

double residual_norm(const std::vector<AlgebraElement>& r) {
  double m = 0.0;
  for (const auto& x : r) m = std::max(m, norm(x));
  return m;
}

}  // namespace

TEST_CASE("zero connection has zero curvature") {
  const auto a = ConnectionField::zero(3, 2);
  const auto f = curvature(a, point3(0.3, -1.0, 2.0));
  for (int mu = 0; mu < 3; ++mu)
    for (int nu = 0; nu < 3; ++nu) CHECK(norm(f.at(mu, nu)) == 0.0);
}

TEST_CASE("constant-curvature abelian family is exact") {
  const auto t = orthonormal_basis(2).back();
  const double c = 0.7;
  const auto a = ConnectionField::abelian_constant_f(2, 2, fmat2(c), t);
  const RVector x = point2(1.3, -0.4);
  SUBCASE("analytic route") {
    const auto f = curvature(a, x);
    CHECK(frob_diff(f.at(0, 1).m, c * t.m) < 1e-15);
    CHECK(frob_diff(f.at(1, 0).m, -c * t.m) < 1e-15);
  }
  SUBCASE("finite-difference route agrees since the commutator vanishes") {
    // strip the analytic curvature to force the FD path
    const auto numeric = ConnectionField::custom(
        2, 2, "stripped", [a](const RVector& p) { return a.eval(p); });
    const auto f = curvature(numeric, x, 1e-4);
    CHECK(frob_diff(f.at(0, 1).m, c * t.m) < 1e-10);
  }
  SUBCASE("the field is in the radial gauge already") {
    const auto ax = a.eval(x);
    CHECK(norm(AlgebraElement((x[0] * ax[0].m + x[1] * ax[1].m).eval())) < 1e-15);
  }
}

TEST_CASE("finite-difference curvature converges at second order") {
  const auto a = ConnectionField::polynomial_random(2, 2, 2, 0.6, 41);
  const auto numeric = ConnectionField::custom(
      2, 2, "stripped", [a](const RVector& p) { return a.eval(p); });
  const RVector x = point2(0.4, 0.9);
  const auto exact = a.analytic_curvature(x);
  auto err = [&](double h) {
    const auto f = curvature(numeric, x, h);
    return frob_diff(f.at(0, 1).m, exact.at(0, 1).m);
  };
  const double e1 = err(2e-2);
  const double e2 = err(1e-2);
  CHECK(e1 / e2 > 3.0);
  CHECK(e1 / e2 < 5.0);
}

TEST_CASE("curvature tensor is antisymmetric by construction") {
  const auto a = ConnectionField::polynomial_random(3, 3, 2, 0.5, 42);
  const auto f = curvature(a, point3(0.2, 0.5, -0.7));
  for (int mu = 0; mu < 3; ++mu) {
    CHECK(norm(f.at(mu, mu)) == 0.0);
    for (int nu = 0; nu < 3; ++nu)
      CHECK(frob_diff(f.at(mu, nu).m, (-f.at(nu, mu)).m) == 0.0);
  }
}

TEST_CASE("radial polynomial family satisfies the gauge condition identically") {
  const auto a = ConnectionField::radial_polynomial_random(3, 2, 1, 0.8, 43);
  Rng rng(44);
  for (int rep = 0; rep < 10; ++rep) {
    RVector x(3);
    for (int d = 0; d < 3; ++d) x[d] = rng.uniform(-1.5, 1.5);
    const auto ax = a.eval(x);
    AlgebraElement dot = AlgebraElement::Zero(2);
    for (int mu = 0; mu < 3; ++mu) dot += x[mu] * ax[mu];
    CHECK(norm(dot) < 1e-14);
  }
  CHECK(residual_norm(a.eval(RVector::Zero(3))) == 0.0);
}

TEST_CASE("ym action of the zero connection vanishes") {
  Box box{{-1.0, -1.0}, {1.0, 1.0}};
  CHECK(ym_action(ConnectionField::zero(2, 2), box, 4) == 0.0);
}

TEST_CASE("ym action closed form for the abelian family") {
  const auto t = orthonormal_basis(2).back();
  const double c = 1.3;
  const auto a = ConnectionField::abelian_constant_f(2, 2, fmat2(c), t);
  Box box{{0.0, 0.0}, {1.0, 1.0}};
  const double want = c * c * inner(t, t) * 2.0;  // both (0,1) and (1,0) terms
  CHECK(std::abs(ym_action(a, box, 4) - want) < 1e-12);
  // Gauss quadrature is exact on polynomials: doubling the order is inert
  const auto p = ConnectionField::polynomial_random(2, 2, 2, 0.5, 45);
  const double v1 = ym_action(p, box, 8);
  const double v2 = ym_action(p, box, 16);
  CHECK(std::abs(v1 - v2) < 1e-10 * std::max(1.0, std::abs(v1)));
}

TEST_CASE("radial gauge transform") {
  Rng rng(46);
  SUBCASE("an already-radial field is a fixed point") {
    const auto t = orthonormal_basis(2).back();
    const auto a = ConnectionField::abelian_constant_f(2, 2, fmat2(0.9), t);
    const auto ar = to_radial_gauge(a, 600);
    for (int rep = 0; rep < 3; ++rep) {
      const RVector x = point2(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
      const auto v0 = a.eval(x);
      const auto v1 = ar.eval(x);
      for (int mu = 0; mu < 2; ++mu) CHECK(norm(v1[mu] - v0[mu]) < 1e-6);
    }
  }
  SUBCASE("generic fields acquire the gauge condition") {
    const auto a = ConnectionField::polynomial_random(2, 2, 2, 0.7, 47);
    const auto ar = to_radial_gauge(a, 1000);
    double worst = 0.0;
    double worst_f = 0.0;
    for (int rep = 0; rep < 5; ++rep) {
      const RVector x = point2(rng.uniform(-1.2, 1.2), rng.uniform(-1.2, 1.2));
      const auto v = ar.eval(x);
      AlgebraElement dot = AlgebraElement::Zero(2);
      for (int mu = 0; mu < 2; ++mu) dot += x[mu] * v[mu];
      worst = std::max(worst, norm(dot));
      // curvature density is gauge invariant
      const auto f0 = curvature(a, x);
      const auto f1 = curvature(ar, x, 1e-4);
      worst_f = std::max(worst_f,
                         std::abs(inner(f1.at(0, 1), f1.at(0, 1)) -
                                  inner(f0.at(0, 1), f0.at(0, 1))));
    }
    CHECK(worst < 1e-6);
    CHECK(worst_f < 1e-5);
    // the origin is fixed to zero
    CHECK(residual_norm(ar.eval(RVector::Zero(2))) < 1e-6);
  }
}

TEST_CASE("local equation-of-motion residual") {
  SUBCASE("zero and constant-curvature fields solve the equations") {
    CHECK(residual_norm(eom_residual(ConnectionField::zero(2, 2),
                                     point2(0.3, 0.4), 1e-3)) == 0.0);
    const auto t = orthonormal_basis(2).back();
    const auto a = ConnectionField::abelian_constant_f(2, 2, fmat2(1.1), t);
    CHECK(residual_norm(eom_residual(a, point2(0.7, -0.2), 1e-3)) < 1e-13);
  }
  SUBCASE("the cubic abelian solution has zero divergence") {
    const auto a = ConnectionField::maxwell_cubic(2);
    // curvature is quadratic, so the central difference is exact
    CHECK(residual_norm(eom_residual(a, point3(0.8, -0.5, 0.3), 1e-3)) < 1e-10);
  }
  SUBCASE("a generic field does not solve the equations") {
    const auto a = ConnectionField::polynomial_random(2, 2, 2, 0.7, 48);
    CHECK(residual_norm(eom_residual(a, point2(0.5, 0.1), 1e-4)) > 1e-2);
  }
}

TEST_CASE("loop-form residual matches the transported local residual") {
  EndpointFdParams params;
  params.h = 1e-5;
  params.w = 0.2;
  params.steps = 1200;

  SUBCASE("zero connection") {
    auto path = std::make_shared<LinePath>(RVector::Zero(2), point2(1.0, 0.5));
    const auto r = eom_residual_loop(ConnectionField::zero(2, 2), path, params);
    CHECK(norm(r) < 1e-12);
  }
  SUBCASE("constant-curvature abelian field") {
    const auto t = orthonormal_basis(2).back();
    const auto a = ConnectionField::abelian_constant_f(2, 2, fmat2(0.8), t);
    auto path = std::make_shared<LinePath>(RVector::Zero(2), point2(0.9, -0.6));
    CHECK(norm(eom_residual_loop(a, path, params)) < 1e-4);
  }
  SUBCASE("generic field: cross-check against the local form") {
    const auto a = ConnectionField::polynomial_random(2, 2, 2, 0.6, 49);
    auto path = std::make_shared<LinePath>(point2(-0.2, 0.1), point2(0.7, 0.5));
    const AlgebraElement loop_form = eom_residual_loop(a, path, params);

    const RVector x1 = path->eval(1.0);
    const RVector v1 = path->velocity(1.0);
    const auto local = eom_residual(a, x1, 1e-4);
    AlgebraElement contracted = AlgebraElement::Zero(2);
    for (int nu = 0; nu < 2; ++nu) contracted += v1[nu] * local[nu];
    const GroupElement p = transport(a, *path, params.steps);
    const AlgebraElement target =
        project_algebra(p.m.adjoint() * contracted.m * p.m);

    CHECK(norm(target) > 1e-2);  // genuinely away from a solution
    CHECK(norm(loop_form - target) / norm(target) < 1e-3);
  }
}

TEST_CASE("connection specs build reproducible fields and reject unknown names") {
  ConnectionSpec spec;
  spec.family = "polynomial_random";
  spec.dim = 2;
  spec.n = 2;
  spec.seed = 99;
  const auto a = ConnectionField::from_spec(spec);
  const auto b = ConnectionField::from_spec(spec);
  const RVector x = point2(0.3, 0.4);
  CHECK(frob_diff(a.eval(x)[0].m, b.eval(x)[0].m) == 0.0);

  ConnectionSpec bad = spec;
  bad.family = "nope";
  CHECK_THROWS_AS(ConnectionField::from_spec(bad), ConfigError);
}

#include <cmath>
#include <vector>

#include "doctest.h"
#include "test_support.hpp"
#include "ymlab/errors.hpp"
#include "ymlab/liealg.hpp"
#include "ymlab/numerics.hpp"

using namespace ymlab;
using namespace ymlab::testing;

TEST_CASE("exp of zero is the identity") {
  const auto u = exp_map(AlgebraElement::Zero(3));
  CHECK(frob_diff(u.m, CMatrix::Identity(3, 3)) < 1e-15);
}

TEST_CASE("exp(X) exp(-X) = 1 for random X") {
  Rng rng(11);
  for (int n : {2, 3}) {
    for (int rep = 0; rep < 5; ++rep) {
      const auto x = random_algebra(n, rng, 2.0);
      const auto u = exp_map(x) * exp_map(-x);
      CHECK(frob_diff(u.m, CMatrix::Identity(n, n)) < 1e-12);
    }
  }
}

TEST_CASE("exp matches the scaling-and-squaring Taylor oracle") {
  Rng rng(12);
  for (int rep = 0; rep < 10; ++rep) {
    const auto x = random_algebra(3, rng, 1.5);
    CHECK(frob_diff(exp_map(x).m, taylor_exp(x.m)) < 1e-12);
  }
}

TEST_CASE("exp stays special unitary up to large norms") {
  Rng rng(13);
  for (double scale : {5.0, 20.0, 50.0}) {
    auto x = random_algebra(2, rng, 1.0);
    x *= scale / norm(x);
    CHECK(is_group_element(exp_map(x).m, 1e-10));
  }
}

TEST_CASE("exp rejects non-finite input") {
  CMatrix bad = CMatrix::Zero(2, 2);
  bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(exp_map(AlgebraElement(bad)), NumericError);
}

TEST_CASE("project_algebra is idempotent and kills pure traces") {
  Rng rng(14);
  const auto x = random_algebra(3, rng, 1.0);
  CHECK(frob_diff(project_algebra(x.m).m, x.m) < 1e-14);
  CHECK(project_algebra(CMatrix::Identity(4, 4)).m.norm() < 1e-15);
  // double application changes nothing
  CMatrix m(2, 2);
  m << Complex(0.3, 0.1), Complex(1.0, -2.0), Complex(0.2, 0.8), Complex(-1.1, 0.4);
  const auto once = project_algebra(m);
  const auto twice = project_algebra(once.m);
  CHECK(frob_diff(once.m, twice.m) < 1e-14);
}

TEST_CASE("project_algebra is the nearest point in the basis span") {
  Rng rng(15);
  for (int n : {2, 3}) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = Complex(rng.gaussian(), rng.gaussian());
    // least-squares oracle: expand in the orthonormal basis of su(n) under
    // the real Frobenius inner product Re Tr(A^+ B)
    const auto basis = orthonormal_basis(n);
    CMatrix best = CMatrix::Zero(n, n);
    for (const auto& b : basis) {
      const double c = (b.m.adjoint() * m).trace().real() /
                       (b.m.adjoint() * b.m).trace().real();
      best += c * b.m;
    }
    CHECK(frob_diff(project_algebra(m).m, best) < 1e-12);
    CHECK(is_algebra_element(project_algebra(m).m));
  }
}

TEST_CASE("inner on the su(2) Pauli basis") {
  // X_a = (i/2) sigma_a gives <X_a, X_b> = delta_ab / 2
  std::vector<CMatrix> pauli(3, CMatrix::Zero(2, 2));
  pauli[0] << 0, 1, 1, 0;
  pauli[1] << 0, Complex(0, -1), Complex(0, 1), 0;
  pauli[2] << 1, 0, 0, -1;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const AlgebraElement xa(Complex(0, 0.5) * pauli[a]);
      const AlgebraElement xb(Complex(0, 0.5) * pauli[b]);
      CHECK(std::abs(inner(xa, xb) - (a == b ? 0.5 : 0.0)) < 1e-14);
    }
  }
}

TEST_CASE("inner is bilinear and positive definite") {
  Rng rng(16);
  const auto x = random_algebra(3, rng), y = random_algebra(3, rng), z = random_algebra(3, rng);
  const double a = 0.7, b = -1.3;
  CHECK(std::abs(inner(a * x + b * y, z) - (a * inner(x, z) + b * inner(y, z))) < 1e-12);
  CHECK(inner(x, AlgebraElement::Zero(3)) == 0.0);
  CHECK(inner(x, x) > 0.0);
  CHECK(std::abs(inner(x, y) - inner(y, x)) < 1e-13);
}

TEST_CASE("inner is invariant under the adjoint action") {
  Rng rng(17);
  for (int n : {2, 3}) {
    const auto x = random_algebra(n, rng), y = random_algebra(n, rng);
    const auto u = haar_sample(n, rng);
    CHECK(std::abs(inner(adjoint_action(u, x), adjoint_action(u, y)) - inner(x, y)) < 1e-12);
  }
}

TEST_CASE("inner rejects dimension mismatch") {
  CHECK_THROWS_AS(inner(AlgebraElement::Zero(2), AlgebraElement::Zero(3)), DimensionError);
}

TEST_CASE("haar samples are deterministic given the seed") {
  Rng a(101), b(101);
  const auto ua = haar_sample(3, a), ub = haar_sample(3, b);
  CHECK((ua.m - ub.m).cwiseAbs().maxCoeff() == 0.0);
  CHECK(is_group_element(ua.m));
}

TEST_CASE("haar mean of Tr(U)/N vanishes") {
  Rng rng(102);
  const int n_samples = 100000;
  std::vector<double> re(n_samples);
  for (int i = 0; i < n_samples; ++i)
    re[i] = haar_sample(2, rng).m.trace().real() / 2.0;
  const auto m = mean_and_stderr(re);
  CHECK(std::abs(m.mean) < 4.0 * m.stderr_);
}

TEST_CASE("haar distribution is left-translation invariant") {
  Rng rng(103);
  const auto v = haar_sample(2, rng);
  const int n = 10000;
  std::vector<double> plain(n), translated(n);
  for (int i = 0; i < n; ++i) plain[i] = haar_sample(2, rng).m.trace().real();
  for (int i = 0; i < n; ++i)
    translated[i] = (v.m * haar_sample(2, rng).m).trace().real();
  const double d = ks_statistic(plain, translated);
  // two-sample KS threshold at alpha ~ 0.01
  CHECK(d < 1.63 * std::sqrt(2.0 / n));
}

TEST_CASE("orthonormal basis spans su(n)") {
  for (int n : {2, 3}) {
    const auto basis = orthonormal_basis(n);
    REQUIRE(static_cast<int>(basis.size()) == n * n - 1);
    for (std::size_t a = 0; a < basis.size(); ++a) {
      CHECK(is_algebra_element(basis[a].m));
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const double expected = a == b ? 1.0 : 0.0;
        CHECK(std::abs(inner(basis[a], basis[b]) - expected) < 1e-12);
      }
    }
    // completeness: any element reconstructs from its coefficients
    Rng rng(104);
    const auto x = random_algebra(n, rng, 2.0);
    AlgebraElement rebuilt = AlgebraElement::Zero(n);
    for (const auto& b : basis) rebuilt += inner(b, x) * b;
    CHECK(frob_diff(rebuilt.m, x.m) < 1e-12);
  }
}

TEST_CASE("log_group inverts exp_map inside the principal domain") {
  Rng rng(105);
  for (int n : {2, 3}) {
    for (int rep = 0; rep < 5; ++rep) {
      auto x = random_algebra(n, rng, 0.5);
      const auto u = exp_map(x);
      CHECK(frob_diff(log_group(u).m, x.m) < 1e-11);
    }
  }
}

TEST_CASE("log_group rejects the branch cut") {
  CMatrix m = CMatrix::Identity(2, 2);
  m(0, 0) = Complex(-1.0, 0.0);
  m(1, 1) = Complex(-1.0, 0.0);
  CHECK_THROWS_AS(log_group(GroupElement(m)), LogBranchError);
}

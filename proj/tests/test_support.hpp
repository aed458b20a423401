// Shared helpers and independent oracles for the test suites.
#ifndef YMLAB_TEST_SUPPORT_HPP
#define YMLAB_TEST_SUPPORT_HPP

#include <cmath>
#include <vector>

#include "ymlab/liealg.hpp"
#include "ymlab/loopgeom.hpp"

namespace ymlab::testing {

inline double frob(const CMatrix& m) { return m.norm(); }

inline double frob_diff(const CMatrix& a, const CMatrix& b) { return (a - b).norm(); }

// Matrix exponential by scaling-and-squaring over a truncated Taylor series;
// independent of the eigendecomposition route used by exp_map.
inline CMatrix taylor_exp(const CMatrix& x, int terms = 50) {
  const int n = static_cast<int>(x.rows());
  int squarings = 0;
  CMatrix scaled = x;
  while (scaled.norm() > 0.25) {
    scaled *= 0.5;
    ++squarings;
  }
  CMatrix sum = CMatrix::Identity(n, n);
  CMatrix term = CMatrix::Identity(n, n);
  for (int k = 1; k <= terms; ++k) {
    term = term * scaled / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

// A deterministic, not-too-symmetric loop for kinematics tests.
inline LoopPath test_loop(int dim, std::uint64_t seed, double scale = 0.5,
                          int cutoff = 4) {
  Rng rng(seed);
  Eigen::MatrixXd modes(dim, cutoff);
  for (int d = 0; d < dim; ++d)
    for (int k = 0; k < cutoff; ++k)
      modes(d, k) = scale * rng.gaussian() / ((k + 1) * (k + 1));
  return LoopPath(RVector::Zero(dim), std::move(modes));
}

}  // namespace ymlab::testing

#endif  // YMLAB_TEST_SUPPORT_HPP

// Copyright 2026 The ymlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef YMLAB_LIEALG_HPP
#define YMLAB_LIEALG_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "ymlab/rng.hpp"

namespace ymlab {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

// su(N): anti-Hermitian traceless N x N complex matrix.
struct AlgebraElement {
  CMatrix m;

  AlgebraElement() = default;
  explicit AlgebraElement(CMatrix mat) : m(std::move(mat)) {}
  static AlgebraElement Zero(int n) { return AlgebraElement(CMatrix::Zero(n, n)); }

  int dim() const { return static_cast<int>(m.rows()); }
  bool is_zero() const { return m.size() == 0 || m.isZero(0.0); }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    if (m.size() == 0) m = CMatrix::Zero(o.m.rows(), o.m.cols());
    m += o.m;
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    if (m.size() == 0) m = CMatrix::Zero(o.m.rows(), o.m.cols());
    m -= o.m;
    return *this;
  }
  AlgebraElement& operator*=(double c) {
    m *= c;
    return *this;
  }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(double c, AlgebraElement a) { return a *= c; }
  friend AlgebraElement operator*(AlgebraElement a, double c) { return a *= c; }
  friend AlgebraElement operator-(AlgebraElement a) { return a *= -1.0; }
};

// SU(N): special unitary N x N complex matrix.
struct GroupElement {
  CMatrix m;

  GroupElement() = default;
  explicit GroupElement(CMatrix mat) : m(std::move(mat)) {}
  static GroupElement Identity(int n) { return GroupElement(CMatrix::Identity(n, n)); }

  int dim() const { return static_cast<int>(m.rows()); }
  GroupElement inverse() const { return GroupElement(m.adjoint()); }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    return GroupElement(a.m * b.m);
  }
};

// Invariant checks used by tests and input validation.
bool is_algebra_element(const CMatrix& m, double tol = 1e-12);
bool is_group_element(const CMatrix& m, double tol = 1e-10);

// exp: su(N) -> SU(N). Exact for anti-Hermitian input (unitary
// eigendecomposition), accurate to ~1e-14 for norms up to ~50.
GroupElement exp_map(const AlgebraElement& x);

// Orthogonal projection of an arbitrary square matrix onto su(N):
// anti-Hermitian part minus its trace part. Idempotent on su(N).
AlgebraElement project_algebra(const CMatrix& m);

// Positive-definite invariant inner product <X, Y> = -Tr(XY).
double inner(const AlgebraElement& x, const AlgebraElement& y);

inline double norm(const AlgebraElement& x) { return std::sqrt(inner(x, x)); }

AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y);

// u x u^{-1}
AlgebraElement adjoint_action(const GroupElement& u, const AlgebraElement& x);

// Haar-distributed SU(N) element (Ginibre + QR, det corrected).
GroupElement haar_sample(int n, Rng& rng);

// Orthonormal basis of su(N) under `inner` (n^2 - 1 elements).
std::vector<AlgebraElement> orthonormal_basis(int n);

// Principal matrix logarithm of a special unitary matrix, projected to
// su(N). Throws LogBranchError when an eigenphase is within `margin` of
// the cut at +-pi or when the principal phases fail to sum to zero.
AlgebraElement log_group(const GroupElement& u, double margin = 1e-9);

// Random su(N) element with Gaussian coefficients of scale `scale` in the
// orthonormal basis. Test/driver helper.
AlgebraElement random_algebra(int n, Rng& rng, double scale = 1.0);

}  // namespace ymlab

#endif  // YMLAB_LIEALG_HPP

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

#include "ymlab/liealg.hpp"

#include <cmath>

#include "ymlab/errors.hpp"

namespace ymlab {

bool is_algebra_element(const CMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() < 1) return false;
  if (!m.allFinite()) return false;
  if ((m + m.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  return std::abs(m.trace()) <= tol;
}

bool is_group_element(const CMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() < 1) return false;
  if (!m.allFinite()) return false;
  const int n = static_cast<int>(m.rows());
  if ((m.adjoint() * m - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff() > tol)
    return false;
  return std::abs(m.determinant() - Complex(1.0, 0.0)) <= tol;
}

GroupElement exp_map(const AlgebraElement& x) {
  if (!x.m.allFinite()) throw NumericError("exp_map: non-finite input");
  if (x.m.rows() != x.m.cols()) throw DimensionError("exp_map: non-square input");
  // X anti-Hermitian => H = -iX Hermitian, exp(X) = V exp(i diag) V^+.
  const CMatrix h = Complex(0.0, -1.0) * x.m;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  if (es.info() != Eigen::Success) throw NumericError("exp_map: eigensolver failed");
  const auto& lam = es.eigenvalues();
  CMatrix phases = CMatrix::Zero(x.dim(), x.dim());
  for (int i = 0; i < x.dim(); ++i)
    phases(i, i) = std::exp(Complex(0.0, lam(i)));
  return GroupElement(es.eigenvectors() * phases * es.eigenvectors().adjoint());
}

AlgebraElement project_algebra(const CMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("project_algebra: non-square input");
  if (!m.allFinite()) throw NumericError("project_algebra: non-finite input");
  CMatrix a = 0.5 * (m - m.adjoint());
  a -= (a.trace() / static_cast<double>(m.rows())) * CMatrix::Identity(m.rows(), m.cols());
  return AlgebraElement(std::move(a));
}

double inner(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.dim() != y.dim()) throw DimensionError("inner: dimension mismatch");
  return -(x.m * y.m).trace().real();
}

AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.dim() != y.dim()) throw DimensionError("commutator: dimension mismatch");
  return AlgebraElement(x.m * y.m - y.m * x.m);
}

AlgebraElement adjoint_action(const GroupElement& u, const AlgebraElement& x) {
  return AlgebraElement(u.m * x.m * u.m.adjoint());
}

GroupElement haar_sample(int n, Rng& rng) {
  if (n < 2) throw ParameterError("haar_sample: n must be >= 2");
  CMatrix z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      z(i, j) = Complex(rng.gaussian(), rng.gaussian()) * M_SQRT1_2;
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity of QR so q is Haar on U(N), then rotate the
  // determinant to 1 by the principal N-th root.
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    q.col(j) *= (std::abs(d) > 0.0) ? d / std::abs(d) : Complex(1.0, 0.0);
  }
  const Complex det = q.determinant();
  q *= std::exp(Complex(0.0, -std::arg(det) / n));
  return GroupElement(std::move(q));
}

std::vector<AlgebraElement> orthonormal_basis(int n) {
  if (n < 2) throw ParameterError("orthonormal_basis: n must be >= 2");
  std::vector<AlgebraElement> basis;
  basis.reserve(n * n - 1);
  const Complex i_unit(0.0, 1.0);
  const double inv_sqrt2 = M_SQRT1_2;
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      CMatrix sym = CMatrix::Zero(n, n);
      sym(j, k) = i_unit * inv_sqrt2;
      sym(k, j) = i_unit * inv_sqrt2;
      basis.emplace_back(std::move(sym));
      CMatrix asym = CMatrix::Zero(n, n);
      asym(j, k) = inv_sqrt2;
      asym(k, j) = -inv_sqrt2;
      basis.emplace_back(std::move(asym));
    }
  }
  for (int l = 1; l < n; ++l) {
    CMatrix diag = CMatrix::Zero(n, n);
    const double c = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (int j = 0; j < l; ++j) diag(j, j) = i_unit * c;
    diag(l, l) = -i_unit * c * static_cast<double>(l);
    basis.emplace_back(std::move(diag));
  }
  return basis;
}

AlgebraElement log_group(const GroupElement& u, double margin) {
  if (!u.m.allFinite()) throw NumericError("log_group: non-finite input");
  const int n = u.dim();
  Eigen::ComplexSchur<CMatrix> schur(u.m);
  if (schur.info() != Eigen::Success) throw NumericError("log_group: Schur failed");
  // The Schur form of a unitary matrix is diagonal; the Schur vectors are
  // an orthonormal eigenbasis.
  const CMatrix& t = schur.matrixT();
  double offdiag = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) offdiag = std::max(offdiag, std::abs(t(i, j)));
  if (offdiag > 1e-8) throw NumericError("log_group: input is not normal/unitary");
  double phase_sum = 0.0;
  CMatrix logdiag = CMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const double theta = std::arg(t(i, i));
    if (std::abs(theta) > M_PI - margin)
      throw LogBranchError("log_group: eigenphase at the branch cut");
    phase_sum += theta;
    logdiag(i, i) = Complex(0.0, theta);
  }
  if (std::abs(phase_sum) > 1e-6)
    throw LogBranchError("log_group: principal phases do not sum to zero");
  const CMatrix x = schur.matrixU() * logdiag * schur.matrixU().adjoint();
  return project_algebra(x);
}

AlgebraElement random_algebra(int n, Rng& rng, double scale) {
  const auto basis = orthonormal_basis(n);
  AlgebraElement x = AlgebraElement::Zero(n);
  for (const auto& b : basis) x += (scale * rng.gaussian()) * b;
  return x;
}

}  // namespace ymlab

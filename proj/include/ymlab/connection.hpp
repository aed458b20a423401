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

#ifndef YMLAB_CONNECTION_HPP
#define YMLAB_CONNECTION_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ymlab/liealg.hpp"
#include "ymlab/loopgeom.hpp"
#include "ymlab/numerics.hpp"

namespace ymlab {

// Conventions used throughout this library (see README):
//   transport solves P'(t) = A_mu(gamma(t)) gammadot^mu(t) P(t), P(0) = 1,
//   curvature is F_mn = d_m A_n - d_n A_m - [A_m, A_n],
//   gauge maps act as A -> k A k^{-1} + (d k) k^{-1},
// under which F -> k F k^{-1}, pure gauges are flat, and the functional
// derivative of the transport reproduces the transported curvature exactly.

// Antisymmetric D x D array of su(N) values at a point; antisymmetry is
// structural (only mu < nu is stored).
class CurvatureTensor {
 public:
  CurvatureTensor(int dim, int n);

  int dim() const { return dim_; }
  void set(int mu, int nu, AlgebraElement f);
  AlgebraElement at(int mu, int nu) const;

 private:
  int dim_;
  int n_;
  std::vector<AlgebraElement> upper_;
};

// Declarative record a connection family is built from, so runs driven by a
// config file are reproducible.
struct ConnectionSpec {
  std::string family;
  int dim = 2;
  int n = 2;
  std::uint64_t seed = 1;
  std::map<std::string, double> params;
};

// su(N)-valued 1-form on R^D with optional analytic curvature.
class ConnectionField {
 public:
  using EvalFn = std::function<std::vector<AlgebraElement>(const RVector&)>;
  using CurvFn = std::function<CurvatureTensor(const RVector&)>;

  ConnectionField() = default;

  int dim() const { return dim_; }
  int group_dim() const { return n_; }
  const std::string& family() const { return family_; }

  std::vector<AlgebraElement> eval(const RVector& x) const;
  AlgebraElement component(const RVector& x, int mu) const { return eval(x)[mu]; }

  bool has_analytic_curvature() const { return static_cast<bool>(curv_); }
  CurvatureTensor analytic_curvature(const RVector& x) const;

  // families
  static ConnectionField zero(int dim, int n);
  static ConnectionField abelian_constant_f(int dim, int n,
                                            const Eigen::MatrixXd& f,
                                            const AlgebraElement& generator);
  static ConnectionField polynomial_random(int dim, int n, int degree,
                                           double scale, std::uint64_t seed);
  static ConnectionField radial_polynomial_random(int dim, int n, int degree,
                                                  double scale, std::uint64_t seed);
  static ConnectionField gaussian_bump(int dim, int n, double width,
                                       double scale, std::uint64_t seed);
  static ConnectionField maxwell_cubic(int n);

  static ConnectionField from_spec(const ConnectionSpec& spec);

  static ConnectionField custom(int dim, int n, std::string family, EvalFn eval,
                                CurvFn curv = nullptr);

 private:
  ConnectionField(int dim, int n, std::string family, EvalFn eval, CurvFn curv)
      : dim_(dim), n_(n), family_(std::move(family)), eval_(std::move(eval)),
        curv_(std::move(curv)) {}

  int dim_ = 0;
  int n_ = 0;
  std::string family_;
  EvalFn eval_;
  CurvFn curv_;
};

// Curvature at x: analytic when the family provides it, otherwise central
// finite differences for the derivative part plus the exact commutator.
CurvatureTensor curvature(const ConnectionField& a, const RVector& x,
                          double fd_step = 1e-4);

// Gauge transform of `a` by the inverse ray transport, so that the result
// satisfies x . A'(x) = 0 and A'(0) = 0. Derivatives of the transport factor
// are taken by central differences with step `fd_step`.
ConnectionField to_radial_gauge(const ConnectionField& a, int transport_steps,
                                double fd_step = 1e-4);

// Integral over `box` of sum_{mu,rho} <F_mu_rho, F_mu_rho> by tensor-product
// Gauss quadrature.
double ym_action(const ConnectionField& a, const Box& box, int quad_order,
                 double fd_step = 1e-4);

// R^nu(x) = sum_mu (d_mu F_mu_nu - [A_mu, F_mu_nu]); zero iff the
// loop-variable equation of motion holds at x.
std::vector<AlgebraElement> eom_residual(const ConnectionField& a,
                                         const RVector& x, double fd_step);

struct EndpointFdParams {
  double h = 1e-5;       // displacement amplitude
  double w = 0.2;        // smoothstep window before the endpoint
  int steps = 1200;      // transport resolution
  bool extrapolate = true;  // one Richardson step in w (first order)
};

// Endpoint-contracted derivative of the transported curvature along an open
// path: sum_mu of the functional derivative of
//   Fcal_mu(gamma) = P(gamma)^{-1} F_mu_nu(gamma(1)) gammadot^nu(1) P(gamma)
// with respect to the endpoint displacement in direction mu. Equals the
// transported local residual P^{-1} R^nu gammadot_nu P when both exist.
AlgebraElement eom_residual_loop(const ConnectionField& a,
                                 std::shared_ptr<const Path> path,
                                 const EndpointFdParams& params);

}  // namespace ymlab

#endif  // YMLAB_CONNECTION_HPP

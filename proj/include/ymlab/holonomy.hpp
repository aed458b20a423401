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

#ifndef YMLAB_HOLONOMY_HPP
#define YMLAB_HOLONOMY_HPP

#include <functional>
#include <memory>
#include <vector>

#include "ymlab/connection.hpp"
#include "ymlab/liealg.hpp"
#include "ymlab/loopgeom.hpp"

namespace ymlab {

// Path-ordered exponential: solves P'(t) = A_mu(gamma(t)) gammadot^mu(t) P(t),
// P(0) = 1, with a midpoint-exponential product integrator (second order).
// Piecewise paths are split at their kinks. For an abelian single-generator
// field this is exp(+ integral of A along the path).
GroupElement transport(const ConnectionField& a, const Path& path, int steps);

// Transport of path restricted to [0, t_end], at the same step density.
GroupElement transport_partial(const ConnectionField& a, const Path& path,
                               double t_end, int steps);

// The loop variable at (mu, s): D su(N) values
//   B_mu_s(gamma) = P(gamma_s)^{-1} F_mu_nu(gamma(s)) gammadot^nu(s) P(gamma_s),
// the curvature at gamma(s), contracted with the velocity and transported
// back along the initial segment. Equal to the logarithmic functional
// derivative of the transport (see mg_fd); transverse by antisymmetry of F.
struct MGSample {
  double s = 0.0;
  std::vector<AlgebraElement> values;  // one per direction mu

  AlgebraElement contract(const RVector& velocity) const;
};

MGSample mg_transport(const ConnectionField& a, const Path& loop, double s,
                      int steps);

// The defining formula, by finite differences:
//   P(gamma)^{-1} [P(gamma + h bump) - P(gamma - h bump)] / 2h
// projected to the algebra; the bump has unit integral and width w. With
// `extrapolate` a Richardson step in w cancels the smearing error.
AlgebraElement mg_fd(const ConnectionField& a, const LoopPath& loop, double s,
                     int mu, double h, double w, int steps,
                     bool extrapolate = true);

// su(N)-valued 1-form on loop space. The declared flags are promises checked
// by the loopspace residual operations, never assumed.
struct LoopForm {
  int dim = 0;
  int group_dim = 0;
  bool transverse = false;
  bool nonanticipating = false;
  // all components at parameter s
  std::function<std::vector<AlgebraElement>(const Path&, double)> values;

  AlgebraElement value(const Path& path, int mu, double s) const {
    return values(path, s)[mu];
  }
};

LoopForm mg_form(const ConnectionField& a, int steps);

LoopForm loop_form_combination(double ca, const LoopForm& a, double cb,
                               const LoopForm& b);

// Reconstruction of a connection from a loop form, evaluated on the tent
// loop through x:
//   A_mu(x) = - int_0^{1/2} B_mu_s(sigma_x) 2s ds
// by Gauss quadrature. The orientation sign is calibrated once against the
// round trip A -> B(A) -> A on radial-gauge fields (see README conventions).
std::vector<AlgebraElement> t_map(const LoopForm& b, const RVector& x,
                                  int quad_points);

// Loop-dependent SU(N) element.
using LoopGroupFn = std::function<GroupElement(const Path&)>;

// Residual of T(phi B phi^{-1})(x) = phi(sigma_x) T(B)(x) phi(sigma_x)^{-1}.
// With `truncated_reading` the conjugating element inside the integral is
// evaluated on sigma_x truncated at s; otherwise on the whole loop. The two
// readings coincide for loop forms conjugated by a constant-on-the-loop phi.
double adjoint_equivariance_check(const LoopForm& b, const LoopGroupFn& phi,
                                  const RVector& x, int quad_points,
                                  bool truncated_reading = false);

// Tr(P(gamma)) / N
Complex wilson_loop(const ConnectionField& a, const Path& loop, int steps);

}  // namespace ymlab

#endif  // YMLAB_HOLONOMY_HPP

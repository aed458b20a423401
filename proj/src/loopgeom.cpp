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

#include "ymlab/loopgeom.hpp"

#include <cmath>

#include "ymlab/errors.hpp"

namespace ymlab {

namespace {

void check_param(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw ParameterError("path parameter outside [0, 1]");
}

}  // namespace

LoopPath::LoopPath(RVector base, Eigen::MatrixXd modes)
    : base_(std::move(base)), modes_(std::move(modes)) {
  if (modes_.rows() != base_.size())
    throw DimensionError("LoopPath: modes rows must match base dimension");
}

RVector LoopPath::eval(double s) const {
  check_param(s);
  RVector x = base_;
  // the sine pinning is exact at the endpoints; do not let sin(pi k) roundoff in
  if (s == 0.0 || s == 1.0) {
    for (const auto& d : deforms_) x[d.axis] += d.profile(s);
    return x;
  }
  for (int k = 0; k < modes_.cols(); ++k) {
    const double sk = std::sin(M_PI * (k + 1) * s);
    x += modes_.col(k) * sk;
  }
  for (const auto& d : deforms_) x[d.axis] += d.profile(s);
  return x;
}

RVector LoopPath::velocity(double s) const {
  check_param(s);
  RVector v = RVector::Zero(dim());
  for (int k = 0; k < modes_.cols(); ++k) {
    const double ck = M_PI * (k + 1) * std::cos(M_PI * (k + 1) * s);
    v += modes_.col(k) * ck;
  }
  for (const auto& d : deforms_) v[d.axis] += d.profile_deriv(s);
  return v;
}

PathSegment::PathSegment(std::shared_ptr<const Path> parent, double s)
    : parent_(std::move(parent)), s_(s) {
  if (!(s_ > 0.0 && s_ <= 1.0))
    throw ParameterError("PathSegment: truncation parameter must lie in (0, 1]");
}

RVector PathSegment::velocity(double t) const {
  return s_ * parent_->velocity(s_ * t);
}

std::vector<double> PathSegment::kinks() const {
  std::vector<double> out;
  for (double k : parent_->kinks())
    if (k < s_) out.push_back(k / s_);
  return out;
}

RVector RadialLoop::eval(double s) const {
  check_param(s);
  return (s <= 0.5 ? 2.0 * s : 2.0 * (1.0 - s)) * x_;
}

RVector RadialLoop::velocity(double s) const {
  check_param(s);
  if (s == 0.5) throw KinkError("RadialLoop: velocity undefined at the kink s = 1/2");
  return (s < 0.5 ? 2.0 : -2.0) * x_;
}

RVector DeformedPath::eval(double s) const {
  RVector x = base_->eval(s);
  for (const auto& d : deforms_) x[d.axis] += d.profile(s);
  return x;
}

RVector DeformedPath::velocity(double s) const {
  RVector v = base_->velocity(s);
  for (const auto& d : deforms_) v[d.axis] += d.profile_deriv(s);
  return v;
}

double LoopMeasure::mode_variance(int k) const {
  if (k < 1) throw ParameterError("mode index is 1-based");
  const double lam = (M_PI * k) * (M_PI * k) + 1.0;
  return 1.0 / (epsilon * lam * lam);
}

LoopPath sample_loop(const LoopMeasure& measure, Rng& rng) {
  if (measure.epsilon <= 0.0) throw ParameterError("LoopMeasure: epsilon must be > 0");
  if (measure.cutoff < 1) throw ParameterError("LoopMeasure: cutoff must be >= 1");
  RVector base = measure.base.size() == measure.dim
                     ? measure.base
                     : RVector::Zero(measure.dim);
  Eigen::MatrixXd modes(measure.dim, measure.cutoff);
  for (int d = 0; d < measure.dim; ++d)
    for (int k = 0; k < measure.cutoff; ++k)
      modes(d, k) = std::sqrt(measure.mode_variance(k + 1)) * rng.gaussian();
  return LoopPath(std::move(base), std::move(modes));
}

LoopPath bump_deform(const LoopPath& loop, double s0, int mu, double h, double w) {
  if (w <= 0.0) throw ParameterError("bump_deform: width must be > 0");
  if (!(s0 - w > 0.0 && s0 + w < 1.0))
    throw ParameterError("bump_deform: bump support must stay inside (0, 1)");
  if (mu < 0 || mu >= loop.dim()) throw DimensionError("bump_deform: bad axis");
  LoopPath out = loop;
  if (h == 0.0) return out;
  DeformTerm term;
  term.axis = mu;
  term.profile = [s0, w, h](double s) { return h * bump(s, s0, w); };
  // d/ds of the mollifier: eta'(s) = eta(s) * (-2u / (1-u^2)^2) / w
  term.profile_deriv = [s0, w, h](double s) {
    const double u = (s - s0) / w;
    if (std::abs(u) >= 1.0) return 0.0;
    const double g = 1.0 - u * u;
    return h * bump(s, s0, w) * (-2.0 * u / (g * g)) / w;
  };
  out.add_deformation(std::move(term));
  return out;
}

double functional_derivative(const std::function<double(const LoopPath&)>& f,
                             const LoopPath& loop, double s0, int mu, double h,
                             double w) {
  if (h == 0.0) throw ParameterError("functional_derivative: h must be nonzero");
  const double fp = f(bump_deform(loop, s0, mu, h, w));
  const double fm = f(bump_deform(loop, s0, mu, -h, w));
  return (fp - fm) / (2.0 * h);
}

double functional_derivative_extrapolated(
    const std::function<double(const LoopPath&)>& f, const LoopPath& loop,
    double s0, int mu, double h, double w) {
  // the symmetric bump smears with even powers of w; eliminate w^2 and w^4
  const double g0 = functional_derivative(f, loop, s0, mu, h, w);
  const double g1 = functional_derivative(f, loop, s0, mu, h, 0.5 * w);
  const double g2 = functional_derivative(f, loop, s0, mu, h, 0.25 * w);
  return richardson(richardson(g0, g1, 2), richardson(g1, g2, 2), 4);
}

}  // namespace ymlab

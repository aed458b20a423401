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

#ifndef YMLAB_LOOPGEOM_HPP
#define YMLAB_LOOPGEOM_HPP

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <vector>

#include "ymlab/numerics.hpp"
#include "ymlab/rng.hpp"

namespace ymlab {

using RVector = Eigen::VectorXd;

// Parametrized curve [0,1] -> R^D. Velocity is defined away from the
// (finitely many) kinks returned by kinks().
class Path {
 public:
  virtual ~Path() = default;
  virtual int dim() const = 0;
  virtual RVector eval(double s) const = 0;
  virtual RVector velocity(double s) const = 0;
  virtual std::vector<double> kinks() const { return {}; }
};

// Smooth additive deformation term: amplitude * profile(s) along one axis.
struct DeformTerm {
  int axis = 0;
  std::function<double(double)> profile;        // value
  std::function<double(double)> profile_deriv;  // d/ds
};

// Based loop as a truncated sine series,
//   gamma_d(s) = base_d + sum_k modes(d,k) sin(pi (k+1) s),
// optionally carrying smooth additive deformation terms (bumps). The sine
// pinning makes gamma(0) = gamma(1) = base exact.
class LoopPath : public Path {
 public:
  LoopPath(RVector base, Eigen::MatrixXd modes);

  int dim() const override { return static_cast<int>(base_.size()); }
  RVector eval(double s) const override;
  RVector velocity(double s) const override;

  const RVector& base() const { return base_; }
  const Eigen::MatrixXd& modes() const { return modes_; }
  int cutoff() const { return static_cast<int>(modes_.cols()); }

  void add_deformation(DeformTerm term) { deforms_.push_back(std::move(term)); }
  const std::vector<DeformTerm>& deformations() const { return deforms_; }

 private:
  RVector base_;
  Eigen::MatrixXd modes_;  // D x K
  std::vector<DeformTerm> deforms_;
};

// Truncated path gamma_s(t) = gamma(s t).
class PathSegment : public Path {
 public:
  PathSegment(std::shared_ptr<const Path> parent, double s);

  int dim() const override { return parent_->dim(); }
  RVector eval(double t) const override { return parent_->eval(s_ * t); }
  RVector velocity(double t) const override;
  std::vector<double> kinks() const override;

  double truncation() const { return s_; }

 private:
  std::shared_ptr<const Path> parent_;
  double s_;
};

// Tent loop through x: sigma_x(s) = 2 s x for s <= 1/2, 2 (1-s) x after.
class RadialLoop : public Path {
 public:
  explicit RadialLoop(RVector x) : x_(std::move(x)) {}

  int dim() const override { return static_cast<int>(x_.size()); }
  RVector eval(double s) const override;
  RVector velocity(double s) const override;
  std::vector<double> kinks() const override { return {0.5}; }

  const RVector& tip() const { return x_; }

 private:
  RVector x_;
};

// Straight segment x0 -> x1.
class LinePath : public Path {
 public:
  LinePath(RVector x0, RVector x1) : x0_(std::move(x0)), x1_(std::move(x1)) {}

  int dim() const override { return static_cast<int>(x0_.size()); }
  RVector eval(double s) const override { return x0_ + s * (x1_ - x0_); }
  RVector velocity(double /*s*/) const override { return x1_ - x0_; }

 private:
  RVector x0_, x1_;
};

// Any path plus smooth additive deformation terms.
class DeformedPath : public Path {
 public:
  explicit DeformedPath(std::shared_ptr<const Path> base) : base_(std::move(base)) {}

  int dim() const override { return base_->dim(); }
  RVector eval(double s) const override;
  RVector velocity(double s) const override;
  std::vector<double> kinks() const override { return base_->kinks(); }

  void add_deformation(DeformTerm term) { deforms_.push_back(std::move(term)); }

 private:
  std::shared_ptr<const Path> base_;
  std::vector<DeformTerm> deforms_;
};

// Gaussian loop measure: mode k+1 of every coordinate is centered Gaussian
// with variance 1 / (epsilon ((pi (k+1))^2 + 1)^2).
struct LoopMeasure {
  double epsilon = 0.05;
  int cutoff = 8;
  int dim = 2;
  RVector base;

  double mode_variance(int k) const;  // k is 1-based: the sin(pi k s) mode
};

LoopPath sample_loop(const LoopMeasure& measure, Rng& rng);

// Adds h * eta(s) e_mu with eta the unit-integral mollifier supported on
// [s0 - w, s0 + w]. The support must stay inside (0, 1).
LoopPath bump_deform(const LoopPath& loop, double s0, int mu, double h, double w);

// Central difference of f against the bump: approximates the functional
// derivative of f at (s0, mu) smeared over the bump, O(w^2) + O(h^2).
double functional_derivative(const std::function<double(const LoopPath&)>& f,
                             const LoopPath& loop, double s0, int mu, double h,
                             double w);

// Same with one Richardson step in w (cancels the O(w^2) smearing error).
double functional_derivative_extrapolated(
    const std::function<double(const LoopPath&)>& f, const LoopPath& loop,
    double s0, int mu, double h, double w);

}  // namespace ymlab

#endif  // YMLAB_LOOPGEOM_HPP

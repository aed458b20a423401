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

#ifndef YMLAB_NUMERICS_HPP
#define YMLAB_NUMERICS_HPP

#include <functional>
#include <span>
#include <vector>

#include "ymlab/rng.hpp"

namespace ymlab {

// ---------------------------------------------------------------------------
// Quadrature

struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre rule on [a, b]; rules are cached per order.
const QuadRule& gauss_legendre(int order);
QuadRule gauss_legendre(int order, double a, double b);

double integrate(const std::function<double(double)>& f, double a, double b,
                 int order);

// Composite Gauss-Legendre over equal panels; for integrands whose high
// derivatives blow up near the endpoints (mollifiers).
double integrate_composite(const std::function<double(double)>& f, double a,
                           double b, int order, int panels);

// ---------------------------------------------------------------------------
// Extrapolation

// Two-point Richardson step: given g(w) = g0 + c w^p + o(w^p), combine g(w)
// and g(w/2) to cancel the leading term.
inline double richardson(double coarse, double fine, int p) {
  const double f = static_cast<double>(1 << p);
  return (f * fine - coarse) / (f - 1.0);
}

// ---------------------------------------------------------------------------
// Test functions for smeared functional derivatives

// C^inf mollifier with unit integral supported on [center-width, center+width].
double bump(double s, double center, double width);

// Quintic smoothstep: 0 below 0, 1 above 1, C^2 with flat ends.
double smoothstep(double u);
double smoothstep_deriv(double u);

// ---------------------------------------------------------------------------
// Statistics

struct MeanErr {
  double mean = 0.0;
  double stderr_ = 0.0;
  std::size_t n = 0;
};

MeanErr mean_and_stderr(std::span<const double> xs);

// Jackknife standard error of a statistic evaluated on group means.
// `group_values` holds one (mean) value per group.
MeanErr jackknife(std::span<const double> group_values);

double sample_variance(std::span<const double> xs);
double sample_skewness(std::span<const double> xs);

// Two-sample Kolmogorov-Smirnov statistic.
double ks_statistic(std::vector<double> a, std::vector<double> b);

// Least-squares slope of y against x.
double regression_slope(std::span<const double> x, std::span<const double> y);

// ---------------------------------------------------------------------------
// Stratified box sampling

struct Box {
  std::vector<double> lo;
  std::vector<double> hi;
  int dim() const { return static_cast<int>(lo.size()); }
  double volume() const;
};

// Latin-hypercube batch of `count` points inside `box`.
std::vector<std::vector<double>> latin_hypercube(const Box& box, int count,
                                                 Rng& rng);

}  // namespace ymlab

#endif  // YMLAB_NUMERICS_HPP

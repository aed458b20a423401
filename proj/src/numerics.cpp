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

#include "ymlab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "ymlab/errors.hpp"

namespace ymlab {

namespace {

QuadRule compute_gauss_legendre(int order) {
  QuadRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  // Newton iteration on P_n, seeded with the Chebyshev approximation.
  for (int i = 0; i < order; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[order - 1 - i] = x;
    rule.weights[order - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

const QuadRule& gauss_legendre(int order) {
  if (order < 1) throw ParameterError("quadrature order must be >= 1");
  static std::map<int, QuadRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_gauss_legendre(order)).first;
  return it->second;
}

QuadRule gauss_legendre(int order, double a, double b) {
  const QuadRule& base = gauss_legendre(order);
  QuadRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (int i = 0; i < order; ++i) {
    rule.nodes[i] = mid + half * base.nodes[i];
    rule.weights[i] = half * base.weights[i];
  }
  return rule;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 int order) {
  const QuadRule rule = gauss_legendre(order, a, b);
  double sum = 0.0;
  for (int i = 0; i < order; ++i) sum += rule.weights[i] * f(rule.nodes[i]);
  return sum;
}

double integrate_composite(const std::function<double(double)>& f, double a,
                           double b, int order, int panels) {
  double sum = 0.0;
  const double h = (b - a) / panels;
  for (int i = 0; i < panels; ++i)
    sum += integrate(f, a + i * h, a + (i + 1) * h, order);
  return sum;
}

namespace {

// integral of exp(-1/(1-u^2)) over (-1, 1), computed once to high accuracy
double mollifier_mass() {
  static const double mass = integrate_composite(
      [](double u) { return std::exp(-1.0 / (1.0 - u * u)); }, -1.0, 1.0, 32, 16);
  return mass;
}

}  // namespace

double bump(double s, double center, double width) {
  const double u = (s - center) / width;
  if (std::abs(u) >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - u * u)) / (mollifier_mass() * width);
}

double smoothstep(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  return u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
}

double smoothstep_deriv(double u) {
  if (u <= 0.0 || u >= 1.0) return 0.0;
  const double v = u * (1.0 - u);
  return 30.0 * v * v;
}

MeanErr mean_and_stderr(std::span<const double> xs) {
  MeanErr out;
  out.n = xs.size();
  if (out.n == 0) return out;
  out.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / out.n;
  if (out.n < 2) return out;
  double ss = 0.0;
  for (double x : xs) ss += (x - out.mean) * (x - out.mean);
  out.stderr_ = std::sqrt(ss / (out.n * (out.n - 1.0)));
  return out;
}

MeanErr jackknife(std::span<const double> group_values) {
  MeanErr out;
  const std::size_t g = group_values.size();
  out.n = g;
  if (g == 0) return out;
  const double total = std::accumulate(group_values.begin(), group_values.end(), 0.0);
  out.mean = total / g;
  if (g < 2) return out;
  double ss = 0.0;
  for (double v : group_values) {
    const double loo = (total - v) / (g - 1.0);
    ss += (loo - out.mean) * (loo - out.mean);
  }
  out.stderr_ = std::sqrt(ss * (g - 1.0) / g);
  return out;
}

double sample_variance(std::span<const double> xs) {
  if (xs.size() < 2) return 0.0;
  const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return ss / (xs.size() - 1.0);
}

double sample_skewness(std::span<const double> xs) {
  if (xs.size() < 3) return 0.0;
  const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  double m2 = 0.0, m3 = 0.0;
  for (double x : xs) {
    const double d = x - mean;
    m2 += d * d;
    m3 += d * d * d;
  }
  m2 /= xs.size();
  m3 /= xs.size();
  if (m2 <= 0.0) return 0.0;
  return m3 / std::pow(m2, 1.5);
}

double ks_statistic(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j]) {
      ++i;
    } else {
      ++j;
    }
    const double fa = static_cast<double>(i) / a.size();
    const double fb = static_cast<double>(j) / b.size();
    d = std::max(d, std::abs(fa - fb));
  }
  return d;
}

double regression_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw ParameterError("regression needs >= 2 paired points");
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / x.size();
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / y.size();
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  return sxy / sxx;
}

double Box::volume() const {
  double v = 1.0;
  for (std::size_t i = 0; i < lo.size(); ++i) v *= hi[i] - lo[i];
  return v;
}

std::vector<std::vector<double>> latin_hypercube(const Box& box, int count,
                                                 Rng& rng) {
  const int d = box.dim();
  std::vector<std::vector<int>> perms(d);
  for (int a = 0; a < d; ++a) {
    perms[a].resize(count);
    std::iota(perms[a].begin(), perms[a].end(), 0);
    for (int i = count - 1; i > 0; --i) {
      const int j = static_cast<int>(rng.u64() % (i + 1));
      std::swap(perms[a][i], perms[a][j]);
    }
  }
  std::vector<std::vector<double>> points(count, std::vector<double>(d));
  for (int i = 0; i < count; ++i) {
    for (int a = 0; a < d; ++a) {
      const double u = (perms[a][i] + rng.uniform()) / count;
      points[i][a] = box.lo[a] + u * (box.hi[a] - box.lo[a]);
    }
  }
  return points;
}

}  // namespace ymlab

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

#include "ymlab/connection.hpp"

#include <cmath>
#include <utility>

#include "ymlab/errors.hpp"
#include "ymlab/holonomy.hpp"

namespace ymlab {

CurvatureTensor::CurvatureTensor(int dim, int n) : dim_(dim), n_(n) {
  upper_.assign(dim * (dim - 1) / 2, AlgebraElement::Zero(n));
}

namespace {
int upper_index(int dim, int mu, int nu) {
  // index of (mu, nu) with mu < nu in row-major upper-triangle order
  return mu * dim - mu * (mu + 1) / 2 + (nu - mu - 1);
}
}  // namespace

void CurvatureTensor::set(int mu, int nu, AlgebraElement f) {
  if (mu < 0 || nu < 0 || mu >= dim_ || nu >= dim_ || mu == nu)
    throw DimensionError("CurvatureTensor::set: bad index pair");
  if (mu < nu)
    upper_[upper_index(dim_, mu, nu)] = std::move(f);
  else
    upper_[upper_index(dim_, nu, mu)] = -std::move(f);
}

AlgebraElement CurvatureTensor::at(int mu, int nu) const {
  if (mu < 0 || nu < 0 || mu >= dim_ || nu >= dim_)
    throw DimensionError("CurvatureTensor::at: bad index pair");
  if (mu == nu) return AlgebraElement::Zero(n_);
  if (mu < nu) return upper_[upper_index(dim_, mu, nu)];
  return -upper_[upper_index(dim_, nu, mu)];
}

std::vector<AlgebraElement> ConnectionField::eval(const RVector& x) const {
  if (!eval_) throw NumericError("ConnectionField: empty field");
  if (x.size() != dim_) throw DimensionError("ConnectionField::eval: bad point dimension");
  if (!x.allFinite()) throw NumericError("ConnectionField::eval: non-finite point");
  return eval_(x);
}

CurvatureTensor ConnectionField::analytic_curvature(const RVector& x) const {
  if (!curv_) throw NumericError("ConnectionField: no analytic curvature");
  return curv_(x);
}

ConnectionField ConnectionField::custom(int dim, int n, std::string family,
                                        EvalFn eval, CurvFn curv) {
  return ConnectionField(dim, n, std::move(family), std::move(eval), std::move(curv));
}

ConnectionField ConnectionField::zero(int dim, int n) {
  auto eval = [dim, n](const RVector&) {
    return std::vector<AlgebraElement>(dim, AlgebraElement::Zero(n));
  };
  auto curv = [dim, n](const RVector&) { return CurvatureTensor(dim, n); };
  return ConnectionField(dim, n, "zero", std::move(eval), std::move(curv));
}

ConnectionField ConnectionField::abelian_constant_f(int dim, int n,
                                                    const Eigen::MatrixXd& f,
                                                    const AlgebraElement& generator) {
  if (f.rows() != dim || f.cols() != dim)
    throw DimensionError("abelian_constant_f: f must be D x D");
  if ((f + f.transpose()).cwiseAbs().maxCoeff() > 1e-14)
    throw ParameterError("abelian_constant_f: f must be antisymmetric");
  const CMatrix t = generator.m;
  auto eval = [dim, n, f, t](const RVector& x) {
    std::vector<AlgebraElement> a(dim, AlgebraElement::Zero(n));
    for (int mu = 0; mu < dim; ++mu) {
      double c = 0.0;
      for (int nu = 0; nu < dim; ++nu) c += -0.5 * f(mu, nu) * x[nu];
      a[mu] = AlgebraElement(c * t);
    }
    return a;
  };
  auto curv = [dim, n, f, t](const RVector&) {
    CurvatureTensor out(dim, n);
    for (int mu = 0; mu < dim; ++mu)
      for (int nu = mu + 1; nu < dim; ++nu)
        out.set(mu, nu, AlgebraElement(f(mu, nu) * t));
    return out;
  };
  return ConnectionField(dim, n, "abelian_constant_f", std::move(eval), std::move(curv));
}

namespace {

struct Monomial {
  std::vector<int> exps;
  CMatrix coeff;
};

using PolyComponents = std::vector<std::vector<Monomial>>;  // per direction mu

double mono_eval(const std::vector<int>& exps, const RVector& x) {
  double v = 1.0;
  for (std::size_t i = 0; i < exps.size(); ++i)
    for (int e = 0; e < exps[i]; ++e) v *= x[static_cast<int>(i)];
  return v;
}

// all exponent tuples with total degree <= deg
void enumerate_exps(int dim, int deg, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == dim) {
    out.push_back(cur);
    return;
  }
  int used = 0;
  for (int e : cur) used += e;
  for (int e = 0; e + used <= deg; ++e) {
    cur.push_back(e);
    enumerate_exps(dim, deg, cur, out);
    cur.pop_back();
  }
}

ConnectionField make_poly_connection(int dim, int n, std::string family,
                                     PolyComponents comps) {
  auto shared = std::make_shared<PolyComponents>(std::move(comps));
  auto eval = [dim, n, shared](const RVector& x) {
    std::vector<AlgebraElement> a(dim, AlgebraElement::Zero(n));
    for (int mu = 0; mu < dim; ++mu) {
      CMatrix m = CMatrix::Zero(n, n);
      for (const auto& mono : (*shared)[mu]) m += mono_eval(mono.exps, x) * mono.coeff;
      a[mu] = AlgebraElement(std::move(m));
    }
    return a;
  };
  auto curv = [dim, n, shared, eval](const RVector& x) {
    CurvatureTensor out(dim, n);
    const auto a = eval(x);
    for (int mu = 0; mu < dim; ++mu) {
      for (int nu = mu + 1; nu < dim; ++nu) {
        CMatrix d = CMatrix::Zero(n, n);
        for (const auto& mono : (*shared)[nu]) {  // d_mu A_nu
          if (mono.exps[mu] == 0) continue;
          auto exps = mono.exps;
          exps[mu] -= 1;
          d += mono.exps[mu] * mono_eval(exps, x) * mono.coeff;
        }
        for (const auto& mono : (*shared)[mu]) {  // - d_nu A_mu
          if (mono.exps[nu] == 0) continue;
          auto exps = mono.exps;
          exps[nu] -= 1;
          d -= mono.exps[nu] * mono_eval(exps, x) * mono.coeff;
        }
        AlgebraElement f(std::move(d));
        f -= commutator(a[mu], a[nu]);
        out.set(mu, nu, std::move(f));
      }
    }
    return out;
  };
  return ConnectionField::custom(dim, n, std::move(family), std::move(eval), std::move(curv));
}

}  // namespace

ConnectionField ConnectionField::polynomial_random(int dim, int n, int degree,
                                                   double scale, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::vector<int>> exps;
  std::vector<int> cur;
  enumerate_exps(dim, degree, cur, exps);
  PolyComponents comps(dim);
  for (int mu = 0; mu < dim; ++mu) {
    for (const auto& e : exps) {
      int total = 0;
      for (int v : e) total += v;
      const double fall = std::pow(0.5, total);
      comps[mu].push_back({e, random_algebra(n, rng, scale * fall).m});
    }
  }
  return make_poly_connection(dim, n, "polynomial_random", std::move(comps));
}

ConnectionField ConnectionField::radial_polynomial_random(int dim, int n, int degree,
                                                          double scale,
                                                          std::uint64_t seed) {
  // A_mu(x) = sum_nu c_mu_nu(x) x^nu with c antisymmetric in (mu, nu), which
  // satisfies x . A(x) = 0 and A(0) = 0 identically.
  Rng rng(seed);
  std::vector<std::vector<int>> exps;
  std::vector<int> cur;
  enumerate_exps(dim, degree, cur, exps);
  PolyComponents comps(dim);
  for (auto& c : comps) c = {};
  for (int mu = 0; mu < dim; ++mu) {
    for (int nu = mu + 1; nu < dim; ++nu) {
      for (const auto& e : exps) {
        int total = 0;
        for (int v : e) total += v;
        const double fall = std::pow(0.5, total);
        const CMatrix c = random_algebra(n, rng, scale * fall).m;
        auto e_mu = e;
        e_mu[nu] += 1;
        comps[mu].push_back({e_mu, c});
        auto e_nu = e;
        e_nu[mu] += 1;
        comps[nu].push_back({e_nu, -c});
      }
    }
  }
  return make_poly_connection(dim, n, "radial_polynomial_random", std::move(comps));
}

ConnectionField ConnectionField::gaussian_bump(int dim, int n, double width,
                                               double scale, std::uint64_t seed) {
  Rng rng(seed);
  auto xs = std::make_shared<std::vector<AlgebraElement>>();
  for (int mu = 0; mu < dim; ++mu) xs->push_back(random_algebra(n, rng, scale));
  const double inv_w2 = 1.0 / (width * width);
  auto eval = [dim, n, xs, inv_w2](const RVector& x) {
    const double g = std::exp(-x.squaredNorm() * inv_w2);
    std::vector<AlgebraElement> a(dim, AlgebraElement::Zero(n));
    for (int mu = 0; mu < dim; ++mu) a[mu] = g * (*xs)[mu];
    return a;
  };
  auto curv = [dim, n, xs, inv_w2](const RVector& x) {
    const double g = std::exp(-x.squaredNorm() * inv_w2);
    CurvatureTensor out(dim, n);
    for (int mu = 0; mu < dim; ++mu) {
      for (int nu = mu + 1; nu < dim; ++nu) {
        // d_mu (g X_nu) - d_nu (g X_mu) - g^2 [X_mu, X_nu]
        AlgebraElement f = (-2.0 * x[mu] * inv_w2 * g) * (*xs)[nu] -
                           (-2.0 * x[nu] * inv_w2 * g) * (*xs)[mu];
        f -= (g * g) * commutator((*xs)[mu], (*xs)[nu]);
        out.set(mu, nu, std::move(f));
      }
    }
    return out;
  };
  return ConnectionField(dim, n, "gaussian_bump", std::move(eval), std::move(curv));
}

ConnectionField ConnectionField::maxwell_cubic(int n) {
  // Abelian D = 3 solution with non-constant curvature:
  //   A = (0, x1^2 x2 / 2, (x2^2 - x1^2) x3 / 2) T
  // solves sum_mu d_mu F_mu_nu = 0 identically.
  const AlgebraElement t = orthonormal_basis(n).back();
  PolyComponents comps(3);
  comps[1].push_back({{2, 1, 0}, 0.5 * t.m});
  comps[2].push_back({{0, 2, 1}, 0.5 * t.m});
  comps[2].push_back({{2, 0, 1}, -0.5 * t.m});
  return make_poly_connection(3, n, "maxwell_cubic", std::move(comps));
}

ConnectionField ConnectionField::from_spec(const ConnectionSpec& spec) {
  auto param = [&spec](const std::string& key, double fallback) {
    auto it = spec.params.find(key);
    return it == spec.params.end() ? fallback : it->second;
  };
  if (spec.dim < 2) throw ConfigError("connection '" + spec.family + "': dim must be >= 2");
  if (spec.n < 2) throw ConfigError("connection '" + spec.family + "': n must be >= 2");
  if (spec.family == "zero") return zero(spec.dim, spec.n);
  if (spec.family == "abelian_constant_f") {
    Eigen::MatrixXd f = Eigen::MatrixXd::Zero(spec.dim, spec.dim);
    for (int mu = 0; mu < spec.dim; ++mu) {
      for (int nu = mu + 1; nu < spec.dim; ++nu) {
        const double v = param("f" + std::to_string(mu) + std::to_string(nu),
                               mu == 0 && nu == 1 ? 0.8 : 0.0);
        f(mu, nu) = v;
        f(nu, mu) = -v;
      }
    }
    const AlgebraElement t = orthonormal_basis(spec.n).back();
    return abelian_constant_f(spec.dim, spec.n, f, param("t_scale", 1.0) * t);
  }
  if (spec.family == "polynomial_random")
    return polynomial_random(spec.dim, spec.n, static_cast<int>(param("degree", 2)),
                             param("scale", 0.5), spec.seed);
  if (spec.family == "radial_polynomial_random")
    return radial_polynomial_random(spec.dim, spec.n,
                                    static_cast<int>(param("degree", 1)),
                                    param("scale", 0.5), spec.seed);
  if (spec.family == "gaussian_bump")
    return gaussian_bump(spec.dim, spec.n, param("width", 1.5), param("scale", 0.6),
                         spec.seed);
  if (spec.family == "maxwell_cubic") {
    if (spec.dim != 3) throw ConfigError("connection 'maxwell_cubic': dim must be 3");
    return maxwell_cubic(spec.n);
  }
  throw ConfigError("unknown connection family '" + spec.family + "'");
}

CurvatureTensor curvature(const ConnectionField& a, const RVector& x, double fd_step) {
  if (a.has_analytic_curvature()) return a.analytic_curvature(x);
  if (!(fd_step > 0.0)) throw ParameterError("curvature: fd_step must be > 0");
  const int dim = a.dim();
  const int n = a.group_dim();
  const auto a0 = a.eval(x);
  std::vector<std::vector<AlgebraElement>> plus(dim), minus(dim);
  for (int mu = 0; mu < dim; ++mu) {
    RVector xp = x, xm = x;
    xp[mu] += fd_step;
    xm[mu] -= fd_step;
    plus[mu] = a.eval(xp);
    minus[mu] = a.eval(xm);
  }
  CurvatureTensor out(dim, n);
  for (int mu = 0; mu < dim; ++mu) {
    for (int nu = mu + 1; nu < dim; ++nu) {
      AlgebraElement f = (1.0 / (2.0 * fd_step)) * (plus[mu][nu] - minus[mu][nu]) -
                         (1.0 / (2.0 * fd_step)) * (plus[nu][mu] - minus[nu][mu]);
      f -= commutator(a0[mu], a0[nu]);
      out.set(mu, nu, project_algebra(f.m));
    }
  }
  return out;
}

ConnectionField to_radial_gauge(const ConnectionField& a, int transport_steps,
                                double fd_step) {
  if (transport_steps < 1) throw ParameterError("to_radial_gauge: steps must be >= 1");
  const int dim = a.dim();
  const int n = a.group_dim();
  const RVector origin = RVector::Zero(dim);
  auto ray_transport = [a, transport_steps, origin](const RVector& x) {
    return transport(a, LinePath(origin, x), transport_steps);
  };
  auto eval = [a, dim, n, fd_step, ray_transport](const RVector& x) {
    const CMatrix g = ray_transport(x).m;
    const auto ax = a.eval(x);
    std::vector<AlgebraElement> out(dim, AlgebraElement::Zero(n));
    for (int mu = 0; mu < dim; ++mu) {
      RVector xp = x, xm = x;
      xp[mu] += fd_step;
      xm[mu] -= fd_step;
      const CMatrix dginv =
          (ray_transport(xp).m.adjoint() - ray_transport(xm).m.adjoint()) /
          (2.0 * fd_step);
      // k A k^{-1} + (d k) k^{-1} with k = g^{-1}
      out[mu] = project_algebra(g.adjoint() * ax[mu].m * g + dginv * g);
    }
    return out;
  };
  return ConnectionField::custom(dim, n, "radial(" + a.family() + ")", std::move(eval));
}

double ym_action(const ConnectionField& a, const Box& box, int quad_order,
                 double fd_step) {
  if (box.dim() != a.dim()) throw DimensionError("ym_action: box dimension mismatch");
  const int dim = a.dim();
  std::vector<QuadRule> rules;
  for (int d = 0; d < dim; ++d)
    rules.push_back(gauss_legendre(quad_order, box.lo[d], box.hi[d]));
  std::vector<int> idx(dim, 0);
  double sum = 0.0;
  while (true) {
    RVector x(dim);
    double w = 1.0;
    for (int d = 0; d < dim; ++d) {
      x[d] = rules[d].nodes[idx[d]];
      w *= rules[d].weights[idx[d]];
    }
    const CurvatureTensor f = curvature(a, x, fd_step);
    double density = 0.0;
    for (int mu = 0; mu < dim; ++mu)
      for (int nu = mu + 1; nu < dim; ++nu) {
        const AlgebraElement fmn = f.at(mu, nu);
        density += 2.0 * inner(fmn, fmn);
      }
    sum += w * density;
    int d = 0;
    for (; d < dim; ++d) {
      if (++idx[d] < quad_order) break;
      idx[d] = 0;
    }
    if (d == dim) break;
  }
  return sum;
}

std::vector<AlgebraElement> eom_residual(const ConnectionField& a, const RVector& x,
                                         double fd_step) {
  if (!(fd_step > 0.0)) throw ParameterError("eom_residual: fd_step must be > 0");
  const int dim = a.dim();
  const int n = a.group_dim();
  const auto a0 = a.eval(x);
  const CurvatureTensor f0 = curvature(a, x, fd_step);
  std::vector<CurvatureTensor> fplus, fminus;
  for (int mu = 0; mu < dim; ++mu) {
    RVector xp = x, xm = x;
    xp[mu] += fd_step;
    xm[mu] -= fd_step;
    fplus.push_back(curvature(a, xp, fd_step));
    fminus.push_back(curvature(a, xm, fd_step));
  }
  std::vector<AlgebraElement> r(dim, AlgebraElement::Zero(n));
  for (int nu = 0; nu < dim; ++nu) {
    for (int mu = 0; mu < dim; ++mu) {
      if (mu == nu) continue;
      r[nu] += (1.0 / (2.0 * fd_step)) * (fplus[mu].at(mu, nu) - fminus[mu].at(mu, nu));
      r[nu] -= commutator(a0[mu], f0.at(mu, nu));
    }
  }
  return r;
}

namespace {

AlgebraElement transported_endpoint_curvature(const ConnectionField& a,
                                              const Path& path, int mu, int steps) {
  const GroupElement p = transport(a, path, steps);
  const RVector x1 = path.eval(1.0);
  const RVector v1 = path.velocity(1.0);
  const CurvatureTensor f = curvature(a, x1);
  AlgebraElement fv = AlgebraElement::Zero(a.group_dim());
  for (int nu = 0; nu < a.dim(); ++nu) fv += v1[nu] * f.at(mu, nu);
  return project_algebra(p.m.adjoint() * fv.m * p.m);
}

AlgebraElement endpoint_divergence(const ConnectionField& a,
                                   const std::shared_ptr<const Path>& path,
                                   double h, double w, int steps) {
  const int dim = a.dim();
  AlgebraElement sum = AlgebraElement::Zero(a.group_dim());
  for (int mu = 0; mu < dim; ++mu) {
    auto make = [&](double amp) {
      DeformedPath p(path);
      DeformTerm term;
      term.axis = mu;
      term.profile = [amp, w](double s) { return amp * smoothstep((s - (1.0 - w)) / w); };
      term.profile_deriv = [amp, w](double s) {
        return amp * smoothstep_deriv((s - (1.0 - w)) / w) / w;
      };
      p.add_deformation(std::move(term));
      return p;
    };
    const DeformedPath pp = make(h);
    const DeformedPath pm = make(-h);
    sum += (1.0 / (2.0 * h)) * (transported_endpoint_curvature(a, pp, mu, steps) -
                                transported_endpoint_curvature(a, pm, mu, steps));
  }
  return sum;
}

}  // namespace

AlgebraElement eom_residual_loop(const ConnectionField& a,
                                 std::shared_ptr<const Path> path,
                                 const EndpointFdParams& params) {
  const AlgebraElement g0 =
      endpoint_divergence(a, path, params.h, params.w, params.steps);
  if (!params.extrapolate) return g0;
  // the one-sided window contributes a power series in w starting at order
  // one; eliminate the w and w^2 terms
  const AlgebraElement g1 =
      endpoint_divergence(a, path, params.h, 0.5 * params.w, params.steps);
  const AlgebraElement g2 =
      endpoint_divergence(a, path, params.h, 0.25 * params.w, params.steps);
  const AlgebraElement r1 = 2.0 * g1 - g0;
  const AlgebraElement r2 = 2.0 * g2 - g1;
  return (1.0 / 3.0) * (4.0 * r2 - r1);
}

}  // namespace ymlab

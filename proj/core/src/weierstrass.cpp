#include "adscmc/weierstrass.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "adscmc/errors.hpp"

namespace adscmc {

WeierstrassData weierstrass_data(std::string_view q, std::string_view f, std::string_view r,
                                 std::string_view g) {
  return {ScalarField1D::parse(q, "u"), ScalarField1D::parse(f, "u"), ScalarField1D::parse(r, "v"),
          ScalarField1D::parse(g, "v")};
}

namespace {

std::string fmt_g(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

Vec3 psi_u_of(double q, double f) {
  return {0.5 * (1.0 + q * q) * f, -0.5 * (1.0 - q * q) * f, -q * f};
}

Vec3 psi_v_of(double r, double g) {
  return {-0.5 * (1.0 + r * r) * g, -0.5 * (1.0 - r * r) * g, -r * g};
}

double integrate_component(const std::function<double(double)>& fn, double a, double b,
                           double tol) {
  if (a == b) return 0.0;
  double err = 0.0, l1 = 0.0;
  double val = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(fn, a, b, 15, tol,
                                                                            &err, &l1);
  // the reported estimate is in the [-1, 1] variable
  err *= std::abs(b - a) / 2;
  if (!std::isfinite(val) || err > std::max(tol * l1, 1e-14))
    throw QuadratureError("quadrature did not converge on [" + fmt_g(a) + ", " +
                          std::to_string(b) + "], error estimate " + std::to_string(err));
  return val;
}

// Antiderivative of a curve-valued integrand at the nodes, zero at t = base.
std::vector<Vec3> primitive(const std::function<Vec3(double)>& dv, const std::vector<double>& nodes,
                            double base, double tol) {
  std::vector<Vec3> out(nodes.size());
  auto step = [&](double a, double b) {
    Vec3 s;
    s.x1 = integrate_component([&](double t) { return dv(t).x1; }, a, b, tol);
    s.x2 = integrate_component([&](double t) { return dv(t).x2; }, a, b, tol);
    s.x3 = integrate_component([&](double t) { return dv(t).x3; }, a, b, tol);
    return s;
  };
  int n = static_cast<int>(nodes.size());
  int up = static_cast<int>(std::lower_bound(nodes.begin(), nodes.end(), base) - nodes.begin());
  Vec3 acc;
  double prev = base;
  for (int k = up; k < n; ++k) {
    Vec3 s = step(prev, nodes[k]);
    acc = {acc.x1 + s.x1, acc.x2 + s.x2, acc.x3 + s.x3};
    out[k] = acc;
    prev = nodes[k];
  }
  acc = {};
  prev = base;
  for (int k = up - 1; k >= 0; --k) {
    Vec3 s = step(prev, nodes[k]);
    acc = {acc.x1 + s.x1, acc.x2 + s.x2, acc.x3 + s.x3};
    out[k] = acc;
    prev = nodes[k];
  }
  return out;
}

}  // namespace

std::pair<Vec3, Vec3> weierstrass_derivatives(const WeierstrassData& data, double u, double v) {
  return {psi_u_of(data.q(u), data.f(u)), psi_v_of(data.r(v), data.g(v))};
}

double minimal_metric_factor(const WeierstrassData& data, double u, double v) {
  double s = 1.0 + data.q(u) * data.r(v);
  return s * s * data.f(u) * data.g(v);
}

SurfaceGridE31 integrate_minimal(const WeierstrassData& data, const Domain& domain, int nu, int nv,
                                 const Tolerances& tol) {
  domain.validate();
  if (nu < 2 || nv < 2) throw DomainError("integrate_minimal needs nu, nv >= 2");
  auto us = uniform_nodes(domain.u0, domain.u1, nu - 1);
  auto vs = uniform_nodes(domain.v0, domain.v1, nv - 1);
  double bu = std::clamp(0.0, domain.u0, domain.u1);
  double bv = std::clamp(0.0, domain.v0, domain.v1);
  auto A = primitive([&](double t) { return psi_u_of(data.q(t), data.f(t)); }, us, bu,
                     tol.quadrature);
  auto B = primitive([&](double t) { return psi_v_of(data.r(t), data.g(t)); }, vs, bv,
                     tol.quadrature);
  SurfaceGridE31 s;
  s.domain = domain;
  s.nu = nu;
  s.nv = nv;
  s.points.resize(static_cast<std::size_t>(nu) * nv);
  s.mask.assign(s.points.size(), 0);
  for (int i = 0; i < nu; ++i) {
    for (int j = 0; j < nv; ++j) {
      std::size_t k = static_cast<std::size_t>(i) * nv + j;
      s.points[k] = {A[i].x1 + B[j].x1, A[i].x2 + B[j].x2, A[i].x3 + B[j].x3};
      if (std::abs(minimal_metric_factor(data, us[i], vs[j])) <= tol.degen) s.mask[k] = 1;
    }
  }
  return s;
}

Vec3 minimal_normal(const WeierstrassData& data, double u, double v, const Tolerances& tol) {
  if (std::abs(minimal_metric_factor(data, u, v)) <= tol.degen)
    throw DegenerateMetric("degenerate point of the minimal surface at (" + std::to_string(u) +
                           ", " + std::to_string(v) + ")");
  auto [pu, pv] = weierstrass_derivatives(data, u, v);
  Vec3 c = cross(pu, pv);
  Vec3 n{-c.x1, c.x2, c.x3};
  double nn = scalar_product(n, n);
  if (!(nn > 0.0)) throw NormalSolveError("tangent plane is not timelike");
  double s = 1.0 / std::sqrt(nn);
  n = {n.x1 * s, n.x2 * s, n.x3 * s};
  Vec3 px{pu.x1 - pv.x1, pu.x2 - pv.x2, pu.x3 - pv.x3};
  Vec3 py{pu.x1 + pv.x1, pu.x2 + pv.x2, pu.x3 + pv.x3};
  Vec3 pxy = cross(px, py);
  double orient = pxy.x1 * n.x1 + pxy.x2 * n.x2 + pxy.x3 * n.x3;
  if (orient < 0.0) n = {-n.x1, -n.x2, -n.x3};
  return n;
}

const char* to_string(Pole p) { return p == Pole::Plus ? "plus" : "minus"; }

std::pair<double, double> stereographic_s21(const Vec3& p, Pole pole, const Tolerances& tol) {
  double norm = -p.x1 * p.x1 + p.x2 * p.x2 + p.x3 * p.x3;
  if (!(std::abs(norm - 1.0) <= tol.sphere))
    throw HyperquadricError("point is not on S^2_1(1)");
  double den = pole == Pole::Plus ? 1.0 + p.x3 : 1.0 - p.x3;
  if (!(std::abs(den) > 1e-12)) throw PoleError("point is the projection pole");
  return {(p.x1 + p.x2) / den, (-p.x1 + p.x2) / den};
}

std::pair<double, double> projected_gauss_minimal(const WeierstrassData& data, double u, double v,
                                                  const Tolerances& tol) {
  return stereographic_s21(minimal_normal(data, u, v, tol), Pole::Minus, tol);
}

}  // namespace adscmc

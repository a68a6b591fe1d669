#include "adscmc/lax.hpp"

#include <algorithm>
#include <cmath>

#include "adscmc/errors.hpp"
#include "adscmc/ode.hpp"

namespace adscmc {

double GmcResidual::max_abs() const {
  double m = 0.0;
  for (double x : gauss) m = std::max(m, std::abs(x));
  for (double x : codazzi) m = std::max(m, std::abs(x));
  return m;
}

GmcResidual gmc_residual(const GmcData& data, const Domain& domain, int nu, int nv,
                         double fd_step) {
  domain.validate();
  GmcResidual r;
  r.nu = nu;
  r.nv = nv;
  r.gauss.resize(static_cast<std::size_t>(nu) * nv);
  r.codazzi.assign(r.gauss.size(), 0.0);
  double h = fd_step;
  for (int i = 0; i < nu; ++i) {
    double u = domain.u_at(i, nu);
    double Q = data.Q(u);
    for (int j = 0; j < nv; ++j) {
      double v = domain.v_at(j, nv);
      const auto& w = data.omega;
      double w_uv = (-w.du(u, v + 2 * h) + 8.0 * w.du(u, v + h) - 8.0 * w.du(u, v - h) +
                     w.du(u, v - 2 * h)) /
                    (12.0 * h);
      double ew = std::exp(w(u, v));
      double R = data.R(v);
      std::size_t k = static_cast<std::size_t>(i) * nv + j;
      r.gauss[k] = w_uv + 0.5 * ew * (data.H * data.H - 1.0) - 2.0 * Q * R / ew;
      // H is constant and Q, R are one-variable fields: H_u = Q_v = H_v = R_u = 0.
      r.codazzi[k] = 0.0;
    }
  }
  return r;
}

LaxMatrices lax_matrices(const GmcData& data, Assembly action, double u, double v) {
  double w = data.omega(u, v);
  double wu = data.omega.du(u, v), wv = data.omega.dv(u, v);
  double H = data.H, Q = data.Q(u), R = data.R(v);
  double ep = std::exp(0.5 * w), em = std::exp(-0.5 * w);
  LaxMatrices m;
  m.U1 = {wu / 4, 0.5 * ep * (H + 1), -em * Q, -wu / 4};
  m.V1 = {-wv / 4, em * R, -0.5 * ep * (H - 1), wv / 4};
  if (action == Assembly::Nu) {
    m.U2 = {wu / 4, 0.5 * ep * (H - 1), -em * Q, -wu / 4};
    m.V2 = {-wv / 4, em * R, -0.5 * ep * (H + 1), wv / 4};
  } else {
    m.U2 = {-wu / 4, em * Q, -0.5 * ep * (H - 1), wu / 4};
    m.V2 = {wv / 4, 0.5 * ep * (H + 1), -em * R, -wv / 4};
  }
  return m;
}

double LaxFrames::max_det_drift() const {
  double m = 0.0;
  for (const auto& x : phi1) m = std::max(m, std::abs(x.det() - 1.0));
  for (const auto& x : phi2) m = std::max(m, std::abs(x.det() - 1.0));
  return m;
}

namespace {

enum class Dir { U, V };

// Frames on the grid for one factor, sweeping first along `first`.
std::vector<Mat2> sweep(const GmcData& data, Assembly action, int factor, Dir first,
                        const std::vector<double>& us, const std::vector<double>& vs, double au,
                        double av, const Mat2& init, int sub_u, int sub_v) {
  auto coeff = [&](Dir d, double u, double v) {
    LaxMatrices m = lax_matrices(data, action, u, v);
    if (factor == 1) return d == Dir::U ? m.U1 : m.V1;
    return d == Dir::U ? m.U2 : m.V2;
  };
  int nu = static_cast<int>(us.size()), nv = static_cast<int>(vs.size());
  std::vector<Mat2> out(static_cast<std::size_t>(nu) * nv);
  if (first == Dir::U) {
    auto row = march(us, au, init,
                     rk4_stepper([&](double u) { return coeff(Dir::U, u, av); }, false, sub_u));
    for (int i = 0; i < nu; ++i) {
      double u = us[i];
      auto col = march(vs, av, row[i],
                       rk4_stepper([&](double v) { return coeff(Dir::V, u, v); }, false, sub_v));
      for (int j = 0; j < nv; ++j) out[static_cast<std::size_t>(i) * nv + j] = col[j];
    }
  } else {
    auto col = march(vs, av, init,
                     rk4_stepper([&](double v) { return coeff(Dir::V, au, v); }, false, sub_v));
    for (int j = 0; j < nv; ++j) {
      double v = vs[j];
      auto row = march(us, au, col[j],
                       rk4_stepper([&](double u) { return coeff(Dir::U, u, v); }, false, sub_u));
      for (int i = 0; i < nu; ++i) out[static_cast<std::size_t>(i) * nv + j] = row[i];
    }
  }
  return out;
}

}  // namespace

LaxFrames integrate_lax(const GmcData& data, Assembly action, const Domain& domain, int nu, int nv,
                        const LaxOptions& opts, const Tolerances& tol) {
  domain.validate();
  if (nu < 2 || nv < 2) throw DomainError("integrate_lax needs nu, nv >= 2");
  if (action == Assembly::None) throw TagMismatch("integrate_lax needs the mu or nu action");
  GmcResidual res = gmc_residual(data, domain, nu, nv);
  double worst = res.max_abs();
  if (!(worst <= tol.compat))
    throw CompatibilityError("Gauss-Mainardi-Codazzi residual " + std::to_string(worst) +
                             " exceeds " + std::to_string(tol.compat));
  auto us = uniform_nodes(domain.u0, domain.u1, nu - 1);
  auto vs = uniform_nodes(domain.v0, domain.v1, nv - 1);
  double au = std::clamp(opts.anchor_u, domain.u0, domain.u1);
  double av = std::clamp(opts.anchor_v, domain.v0, domain.v1);
  double hu = (domain.u1 - domain.u0) / (nu - 1), hv = (domain.v1 - domain.v0) / (nv - 1);
  int sub_u = std::max(1, static_cast<int>(std::ceil(hu / opts.max_step)));
  int sub_v = std::max(1, static_cast<int>(std::ceil(hv / opts.max_step)));

  LaxFrames fr;
  fr.domain = domain;
  fr.nu = nu;
  fr.nv = nv;
  fr.action = action;
  fr.phi1 = sweep(data, action, 1, Dir::U, us, vs, au, av, opts.init1.mat(), sub_u, sub_v);
  fr.phi2 = sweep(data, action, 2, Dir::U, us, vs, au, av, opts.init2.mat(), sub_u, sub_v);
  auto alt1 = sweep(data, action, 1, Dir::V, us, vs, au, av, opts.init1.mat(), sub_u, sub_v);
  auto alt2 = sweep(data, action, 2, Dir::V, us, vs, au, av, opts.init2.mat(), sub_u, sub_v);
  for (std::size_t k = 0; k < fr.phi1.size(); ++k) {
    fr.path_defect = std::max(fr.path_defect, max_abs_diff(fr.phi1[k], alt1[k]));
    fr.path_defect = std::max(fr.path_defect, max_abs_diff(fr.phi2[k], alt2[k]));
  }
  if (fr.path_defect > tol.path)
    fr.warnings.push_back("path-independence defect " + std::to_string(fr.path_defect) +
                          " exceeds " + std::to_string(tol.path));
  return fr;
}

SurfaceGridH31 assemble_lax(const LaxFrames& frames, const GmcData& data, const Tolerances& tol) {
  SurfaceGridH31 s;
  s.domain = frames.domain;
  s.nu = frames.nu;
  s.nv = frames.nv;
  s.assembly = frames.action;
  std::size_t total = frames.phi1.size();
  s.points.resize(total);
  s.metric.resize(total);
  s.mask.assign(total, 0);
  for (int i = 0; i < s.nu; ++i) {
    double u = s.domain.u_at(i, s.nu);
    for (int j = 0; j < s.nv; ++j) {
      double v = s.domain.v_at(j, s.nv);
      std::size_t k = static_cast<std::size_t>(i) * s.nv + j;
      const Mat2& a = frames.phi1[k];
      const Mat2& b = frames.phi2[k];
      s.points[k] = frames.action == Assembly::Mu ? a * b.transpose() : a * b.inverse();
      s.metric[k] = std::exp(data.omega(u, v));
      if (s.metric[k] < tol.degen) s.mask[k] = 1;
    }
  }
  return s;
}

namespace {

struct LegData {
  std::vector<double> s, w;
};

LegData extract_leg(const FrameCurve& c) {
  // Recompute the coefficient from the samples rather than trusting stored values.
  FrameCurve re = FrameCurve::from_samples(c.leg, c.t0, c.t1, c.F);
  LegData out;
  auto nodes = re.nodes();
  for (std::size_t k = 0; k < re.coeff.size(); ++k) {
    const Mat2& m = re.coeff[k];
    double div = c.leg == Leg::RNu ? m.b : m.c;
    if (!(std::abs(div) > 1e-10))
      throw DivisionError("coefficient divisor vanishes at t = " + std::to_string(nodes[k]));
    out.s.push_back(m.a / div);
    out.w.push_back(div);
  }
  return out;
}

}  // namespace

WeierstrassData extract_weierstrass_data(const FrameCurve& F1, const FrameCurve& F2) {
  if (F1.leg != Leg::Q) throw TagMismatch("first frame must be the q leg");
  if (F2.leg == Leg::Q) throw TagMismatch("second frame must be an r leg");
  LegData a = extract_leg(F1), b = extract_leg(F2);
  WeierstrassData d;
  d.q = ScalarField1D::sampled(F1.t0, F1.step(), a.s);
  d.f = ScalarField1D::sampled(F1.t0, F1.step(), a.w);
  d.r = ScalarField1D::sampled(F2.t0, F2.step(), b.s);
  d.g = ScalarField1D::sampled(F2.t0, F2.step(), b.w);
  return d;
}

double extraction_nullity_defect(const FrameCurve& F1, const FrameCurve& F2) {
  double m = 0.0;
  for (const FrameCurve* c : {&F1, &F2}) {
    FrameCurve re = FrameCurve::from_samples(c->leg, c->t0, c->t1, c->F);
    for (const auto& x : re.coeff) m = std::max(m, std::abs(x.a * x.a + x.b * x.c));
  }
  return m;
}

}  // namespace adscmc

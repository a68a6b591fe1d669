#include "adscmc/gauss.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "adscmc/errors.hpp"

namespace adscmc {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

GaussMapGrid empty_grid(const Domain& d, int nu, int nv, Pole sign, std::string chart) {
  GaussMapGrid g;
  g.domain = d;
  g.nu = nu;
  g.nv = nv;
  g.sign = sign;
  g.chart = std::move(chart);
  std::size_t n = static_cast<std::size_t>(nu) * nv;
  g.rep.assign(n, Mat2{});
  g.g1.assign(n, kNaN);
  g.g2.assign(n, kNaN);
  g.mask.assign(n, 1);
  return g;
}

void set_point(GaussMapGrid& g, std::size_t k, const Mat2& rep, const Tolerances& tol) {
  g.rep[k] = rep;
  ChartPoint c = null_chart(rep, tol);
  if (!c.ok) return;
  g.g1[k] = c.g1;
  g.g2[k] = c.g2;
  g.mask[k] = 0;
}

Mat2 outer(double a1, double a2, double b1, double b2) { return {a1 * b1, a1 * b2, a2 * b1, a2 * b2}; }

// Rank-one representative whose chart is the frame-entry chart.
Mat2 frame_rep(const Mat2& A, const Mat2& B, Pole sign, Assembly action) {
  bool plus = sign == Pole::Plus;
  if (action == Assembly::Mu) {
    return plus ? outer(A.a, A.c, B.a, B.c) : outer(A.b, A.d, B.b, B.d);
  }
  // rows of B^{-1} = [[B.d, -B.b], [-B.c, B.a]]
  return plus ? outer(A.a, A.c, B.d, -B.b) : outer(A.b, A.d, -B.c, B.a);
}

}  // namespace

double column_ratio(const Mat2& m, const Tolerances& tol) {
  double scale = m.max_abs();
  if (std::abs(m.d) >= std::abs(m.c)) {
    if (!(std::abs(m.d) > tol.chart_pole * scale)) return kNaN;
    return m.b / m.d;
  }
  if (!(std::abs(m.c) > tol.chart_pole * scale)) return kNaN;
  return m.a / m.c;
}

double row_ratio(const Mat2& m, const Tolerances& tol) {
  double scale = m.max_abs();
  if (std::abs(m.d) >= std::abs(m.b)) {
    if (!(std::abs(m.d) > tol.chart_pole * scale)) return kNaN;
    return m.c / m.d;
  }
  if (!(std::abs(m.b) > tol.chart_pole * scale)) return kNaN;
  return m.a / m.b;
}

ChartPoint null_chart(const Mat2& m, const Tolerances& tol) {
  ChartPoint c;
  c.g1 = column_ratio(m, tol);
  c.g2 = row_ratio(m, tol);
  c.ok = std::isfinite(c.g1) && std::isfinite(c.g2);
  return c;
}

double GaussMapGrid::spread() const {
  double m = 0.0;
  std::size_t first = mask.size();
  for (std::size_t k = 0; k < mask.size(); ++k)
    if (!mask[k]) {
      if (first == mask.size()) {
        first = k;
        continue;
      }
      m = std::max({m, std::abs(g1[k] - g1[first]), std::abs(g2[k] - g2[first])});
    }
  return m;
}

GaussMapGrid hyperbolic_gauss(const SurfaceGridH31& s, const FundamentalData& fd, Pole sign,
                              const Tolerances& tol) {
  if (fd.nu != s.nu || fd.nv != s.nv) throw TagMismatch("grid sizes differ");
  if (fd.ambient.kind != AmbientKind::H31) throw TagMismatch("hyperbolic Gauss map needs H31 data");
  GaussMapGrid g = empty_grid(s.domain, s.nu, s.nv, sign, "surface");
  double sg = sign == Pole::Plus ? 1.0 : -1.0;
  for (std::size_t k = 0; k < fd.points.size(); ++k) {
    const auto& p = fd.points[k];
    if (!p.has_data()) continue;
    Mat2 N = to_mat(Vec4(p.N[0], p.N[1], p.N[2], p.N[3]));
    set_point(g, k, s.points[k] + sg * N, tol);
  }
  return g;
}

GaussMapGrid frame_gauss_coordinates(const LaxFrames& frames, Pole sign, const Tolerances& tol) {
  GaussMapGrid g = empty_grid(frames.domain, frames.nu, frames.nv, sign,
                              frames.action == Assembly::Mu ? "lax-mu" : "lax-nu");
  for (std::size_t k = 0; k < frames.phi1.size(); ++k)
    set_point(g, k, frame_rep(frames.phi1[k], frames.phi2[k], sign, frames.action), tol);
  return g;
}

GaussMapGrid frame_gauss_coordinates(const FrameCurve& F1, const FrameCurve& F2, Pole sign,
                                     Assembly action, const Tolerances& tol) {
  if (F1.leg != Leg::Q) throw TagMismatch("first frame must be the q leg");
  if ((action == Assembly::Mu && F2.leg != Leg::RMu) ||
      (action == Assembly::Nu && F2.leg != Leg::RNu) || action == Assembly::None)
    throw TagMismatch("second frame leg does not match the action");
  int nu = F1.n + 1, nv = F2.n + 1;
  Domain d{F1.t0, F1.t1, F2.t0, F2.t1};
  GaussMapGrid g = empty_grid(d, nu, nv, sign, action == Assembly::Mu ? "bryant-mu" : "bryant-nu");
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nv; ++j)
      set_point(g, g.index(i, j), frame_rep(F1.F[i], F2.F[j], sign, action), tol);
  return g;
}

const char* to_string(Holomorphy h) {
  switch (h) {
    case Holomorphy::Constant: return "constant";
    case Holomorphy::Holomorphic: return "holomorphic";
    case Holomorphy::Antiholomorphic: return "antiholomorphic";
    case Holomorphy::Neither: break;
  }
  return "neither";
}

namespace {

struct Rhs {
  double omega = kNaN, H = kNaN, Q = kNaN, R = kNaN;
};

// (x_d) y - x (y_d) for entries picked from the frame grid, central differences.
template <class Pick>
double wronskian(const std::vector<Mat2>& F, int nv, int i, int j, int di, int dj, double h,
                 Pick pick) {
  auto at = [&](int a, int b) { return F[static_cast<std::size_t>(a) * nv + b]; };
  auto [x0, y0] = pick(at(i, j));
  auto [xp, yp] = pick(at(i + di, j + dj));
  auto [xm, ym] = pick(at(i - di, j - dj));
  double xd = (xp - xm) / (2.0 * h), yd = (yp - ym) / (2.0 * h);
  return xd * y0 - x0 * yd;
}

template <class RhsAt>
HolomorphyCheck check(const LaxFrames& fr, Pole sign, const Tolerances& tol, RhsAt rhs_at) {
  if (fr.action != Assembly::Mu) throw TagMismatch("holomorphicity check needs mu-action frames");
  HolomorphyCheck c;
  c.nu = fr.nu;
  c.nv = fr.nv;
  c.sign = sign;
  std::size_t n = fr.phi1.size();
  for (auto* v : {&c.u1, &c.u2, &c.v1, &c.v2, &c.res_u1, &c.res_u2, &c.res_v1, &c.res_v2})
    v->assign(n, kNaN);
  c.cls.assign(n, Holomorphy::Neither);
  double hu = (fr.domain.u1 - fr.domain.u0) / (fr.nu - 1);
  double hv = (fr.domain.v1 - fr.domain.v0) / (fr.nv - 1);
  bool plus = sign == Pole::Plus;
  auto pick = [plus](const Mat2& m) {
    return plus ? std::pair{m.a, m.c} : std::pair{m.b, m.d};
  };
  bool first = true;
  bool uniform = true;
  for (int i = 1; i < fr.nu - 1; ++i) {
    for (int j = 1; j < fr.nv - 1; ++j) {
      Rhs r = rhs_at(i, j);
      if (std::isnan(r.omega)) continue;
      std::size_t k = static_cast<std::size_t>(i) * fr.nv + j;
      c.u1[k] = wronskian(fr.phi1, fr.nv, i, j, 1, 0, hu, pick);
      c.u2[k] = wronskian(fr.phi2, fr.nv, i, j, 1, 0, hu, pick);
      c.v1[k] = wronskian(fr.phi1, fr.nv, i, j, 0, 1, hv, pick);
      c.v2[k] = wronskian(fr.phi2, fr.nv, i, j, 0, 1, hv, pick);
      double eq = std::exp(-0.5 * r.omega) * r.Q, er = std::exp(-0.5 * r.omega) * r.R;
      double hm = 0.5 * std::exp(0.5 * r.omega) * (r.H - 1.0);
      double hp = 0.5 * std::exp(0.5 * r.omega) * (r.H + 1.0);
      c.res_u1[k] = std::abs(c.u1[k] - (plus ? eq : hp));
      c.res_u2[k] = std::abs(c.u2[k] - (plus ? hm : eq));
      c.res_v1[k] = std::abs(c.v1[k] - (plus ? hm : er));
      c.res_v2[k] = std::abs(c.v2[k] - (plus ? er : hp));
      c.max_residual = std::max({c.max_residual, c.res_u1[k], c.res_u2[k], c.res_v1[k], c.res_v2[k]});
      bool uz = std::abs(c.u1[k]) <= tol.hol && std::abs(c.u2[k]) <= tol.hol;
      bool vz = std::abs(c.v1[k]) <= tol.hol && std::abs(c.v2[k]) <= tol.hol;
      Holomorphy h = uz && vz ? Holomorphy::Constant
                     : uz     ? Holomorphy::Antiholomorphic
                     : vz     ? Holomorphy::Holomorphic
                              : Holomorphy::Neither;
      c.cls[k] = h;
      if (first) {
        c.overall = h;
        first = false;
      } else if (h != c.overall) {
        uniform = false;
      }
    }
  }
  if (first || !uniform) c.overall = Holomorphy::Neither;
  return c;
}

}  // namespace

HolomorphyCheck holomorphicity_check(const LaxFrames& frames, const GmcData& data, Pole sign,
                                     const Tolerances& tol) {
  return check(frames, sign, tol, [&](int i, int j) {
    double u = frames.domain.u_at(i, frames.nu), v = frames.domain.v_at(j, frames.nv);
    return Rhs{data.omega(u, v), data.H, data.Q(u), data.R(v)};
  });
}

HolomorphyCheck holomorphicity_check(const LaxFrames& frames, const FundamentalData& fd, Pole sign,
                                     const Tolerances& tol) {
  if (fd.nu != frames.nu || fd.nv != frames.nv) throw TagMismatch("grid sizes differ");
  return check(frames, sign, tol, [&](int i, int j) {
    const auto& p = fd.at(i, j);
    if (!p.has_data()) return Rhs{};
    return Rhs{p.omega, p.H, p.Q, p.R};
  });
}

ConformalityCheck gauss_conformality_check(const SurfaceGridH31& s, const FundamentalData& fd,
                                           Pole sign, const Tolerances& tol) {
  if (fd.nu != s.nu || fd.nv != s.nv) throw TagMismatch("grid sizes differ");
  ConformalityCheck c;
  std::size_t n = s.points.size();
  c.coefficient.assign(n, kNaN);
  c.residual.assign(n, kNaN);
  double sg = sign == Pole::Plus ? 1.0 : -1.0;
  auto G = [&](int i, int j) {
    const auto& p = fd.at(i, j);
    return s.at(i, j) + sg * to_mat(Vec4(p.N[0], p.N[1], p.N[2], p.N[3]));
  };
  double hu = s.hu(), hv = s.hv();
  for (int i = 2; i < s.nu - 2; ++i) {
    for (int j = 2; j < s.nv - 2; ++j) {
      const auto& p = fd.at(i, j);
      if (!p.has_data() || !fd.at(i + 1, j).has_data() || !fd.at(i - 1, j).has_data() ||
          !fd.at(i, j + 1).has_data() || !fd.at(i, j - 1).has_data())
        continue;
      Mat2 Gu = (1.0 / (2.0 * hu)) * (G(i + 1, j) - G(i - 1, j));
      Mat2 Gv = (1.0 / (2.0 * hv)) * (G(i, j + 1) - G(i, j - 1));
      std::size_t k = static_cast<std::size_t>(i) * s.nv + j;
      c.coefficient[k] = 2.0 * scalar_product(Gu, Gv);
      c.residual[k] = std::abs(c.coefficient[k] + p.K * std::exp(p.omega));
      if (in_statistics(p, tol)) {
        c.max_residual = std::max(c.max_residual, c.residual[k]);
        c.max_coefficient = std::max(c.max_coefficient, std::abs(c.coefficient[k]));
      }
    }
  }
  return c;
}

std::pair<GaussMapGrid, GaussMapGrid> generalized_gauss(const SurfaceGridH31& s,
                                                        const FundamentalData& fd,
                                                        const Tolerances& tol) {
  if (fd.nu != s.nu || fd.nv != s.nv) throw TagMismatch("grid sizes differ");
  GaussMapGrid plus = empty_grid(s.domain, s.nu, s.nv, Pole::Plus, "generalized");
  GaussMapGrid minus = empty_grid(s.domain, s.nu, s.nv, Pole::Minus, "generalized");
  double hu = s.hu(), hv = s.hv();
  for (int i = 1; i < s.nu - 1; ++i) {
    for (int j = 1; j < s.nv - 1; ++j) {
      if (!fd.at(i, j).has_data()) continue;
      Mat2 pu = (1.0 / (2.0 * hu)) * (s.at(i + 1, j) - s.at(i - 1, j));
      Mat2 pv = (1.0 / (2.0 * hv)) * (s.at(i, j + 1) - s.at(i, j - 1));
      double a = scalar_product(pu, pu), b = scalar_product(pu, pv), c = scalar_product(pv, pv);
      double disc = b * b - a * c;
      if (!(disc >= 0.0) || !(b > 0.0)) continue;
      double den = b + std::sqrt(disc);
      Mat2 X = pu + (-a / den) * pv;
      Mat2 Y = pv + (-c / den) * pu;
      std::size_t k = plus.index(i, j);
      double xc = column_ratio(X, tol), xr = row_ratio(X, tol);
      double yc = column_ratio(Y, tol), yr = row_ratio(Y, tol);
      plus.rep[k] = X;
      minus.rep[k] = Y;
      if (std::isfinite(xc) && std::isfinite(yr)) {
        plus.g1[k] = xc;
        plus.g2[k] = yr;
        plus.mask[k] = 0;
      }
      if (std::isfinite(yc) && std::isfinite(xr)) {
        minus.g1[k] = yc;
        minus.g2[k] = xr;
        minus.mask[k] = 0;
      }
    }
  }
  return {std::move(plus), std::move(minus)};
}

double max_chart_difference(const GaussMapGrid& a, const GaussMapGrid& b) {
  if (a.mask.size() != b.mask.size()) throw TagMismatch("grid sizes differ");
  double m = 0.0;
  for (std::size_t k = 0; k < a.mask.size(); ++k)
    if (!a.mask[k] && !b.mask[k])
      for (auto [x, y] : {std::pair{a.g1[k], b.g1[k]}, std::pair{a.g2[k], b.g2[k]}})
        m = std::max(m, std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)}));
  return m;
}

}  // namespace adscmc

#include "adscmc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "adscmc/errors.hpp"

namespace adscmc {

const char* to_string(AmbientKind k) { return k == AmbientKind::H31 ? "h31" : "e31"; }

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Sampled {
  int dim = 4;
  AVec eta{-1.0, -1.0, 1.0, 1.0};
  Domain domain;
  int nu = 0, nv = 0;
  double hu = 0.0, hv = 0.0;
  std::vector<AVec> p;
  std::vector<std::uint8_t> mask;

  const AVec& at(int i, int j) const { return p[static_cast<std::size_t>(i) * nv + j]; }
  bool masked(int i, int j) const {
    return !mask.empty() && mask[static_cast<std::size_t>(i) * nv + j] != 0;
  }
};

Sampled sample(const SurfaceGridH31& s) {
  Sampled out;
  out.domain = s.domain;
  out.nu = s.nu;
  out.nv = s.nv;
  out.hu = s.hu();
  out.hv = s.hv();
  out.mask = s.mask;
  out.p.reserve(s.points.size());
  for (const auto& m : s.points) out.p.push_back(to_vec(m).data());
  return out;
}

Sampled sample(const SurfaceGridE31& s) {
  Sampled out;
  out.dim = 3;
  out.eta = {-1.0, 1.0, 1.0, 0.0};
  out.domain = s.domain;
  out.nu = s.nu;
  out.nv = s.nv;
  out.hu = s.hu();
  out.hv = s.hv();
  out.mask = s.mask;
  out.p.reserve(s.points.size());
  for (const auto& x : s.points) out.p.push_back({x.x1, x.x2, x.x3, 0.0});
  return out;
}

double ip(const Sampled& s, const AVec& a, const AVec& b) {
  double r = 0.0;
  for (int k = 0; k < s.dim; ++k) r += s.eta[k] * a[k] * b[k];
  return r;
}

AVec lin(double x, const AVec& a, double y, const AVec& b) {
  return {x * a[0] + y * b[0], x * a[1] + y * b[1], x * a[2] + y * b[2], x * a[3] + y * b[3]};
}

double det3(const AVec& a, const AVec& b, const AVec& c, int skip) {
  int idx[3], n = 0;
  for (int k = 0; k < 4 && n < 3; ++k)
    if (k != skip) idx[n++] = k;
  auto e = [&](const AVec& r, int col) { return r[idx[col]]; };
  return e(a, 0) * (e(b, 1) * e(c, 2) - e(b, 2) * e(c, 1)) -
         e(a, 1) * (e(b, 0) * e(c, 2) - e(b, 2) * e(c, 0)) +
         e(a, 2) * (e(b, 0) * e(c, 1) - e(b, 1) * e(c, 0));
}

double det4(const AVec& a, const AVec& b, const AVec& c, const AVec& d) {
  double r = 0.0;
  for (int k = 0; k < 4; ++k) r += ((k % 2) ? -1.0 : 1.0) * d[k] * det3(a, b, c, k);
  return -r;
}

struct Derivs {
  AVec pu, pv, puu, pvv, puv;
};

Derivs derivs(const Sampled& s, int i, int j) {
  const AVec& c = s.at(i, j);
  const AVec& e = s.at(i + 1, j);
  const AVec& w = s.at(i - 1, j);
  const AVec& n = s.at(i, j + 1);
  const AVec& so = s.at(i, j - 1);
  const AVec& ne = s.at(i + 1, j + 1);
  const AVec& nw = s.at(i - 1, j + 1);
  const AVec& se = s.at(i + 1, j - 1);
  const AVec& sw = s.at(i - 1, j - 1);
  Derivs d;
  for (int k = 0; k < 4; ++k) {
    d.pu[k] = (e[k] - w[k]) / (2.0 * s.hu);
    d.pv[k] = (n[k] - so[k]) / (2.0 * s.hv);
    d.puu[k] = (e[k] - 2.0 * c[k] + w[k]) / (s.hu * s.hu);
    d.pvv[k] = (n[k] - 2.0 * c[k] + so[k]) / (s.hv * s.hv);
    d.puv[k] = (ne[k] - se[k] - nw[k] + sw[k]) / (4.0 * s.hu * s.hv);
  }
  return d;
}

struct SecondForm {
  double xx = kNaN, xy = kNaN, yy = kNaN;
  bool ok = false;
};

// II from -<d phi, dN>; phi_x = phi_u - phi_v, phi_y = phi_u + phi_v.
SecondForm second_form(const Sampled& s, const FundamentalData& fd, int i, int j) {
  SecondForm out;
  if (i < 2 || j < 2 || i > s.nu - 3 || j > s.nv - 3) return out;
  if (!fd.at(i, j).has_data()) return out;
  const std::array<std::pair<int, int>, 4> nbrs{{{i + 1, j}, {i - 1, j}, {i, j + 1}, {i, j - 1}}};
  for (auto [a, b] : nbrs)
    if (!fd.at(a, b).has_data()) return out;
  Derivs d = derivs(s, i, j);
  AVec Nu, Nv;
  for (int k = 0; k < 4; ++k) {
    Nu[k] = (fd.at(i + 1, j).N[k] - fd.at(i - 1, j).N[k]) / (2.0 * s.hu);
    Nv[k] = (fd.at(i, j + 1).N[k] - fd.at(i, j - 1).N[k]) / (2.0 * s.hv);
  }
  AVec px = lin(1.0, d.pu, -1.0, d.pv), py = lin(1.0, d.pu, 1.0, d.pv);
  AVec Nx = lin(1.0, Nu, -1.0, Nv), Ny = lin(1.0, Nu, 1.0, Nv);
  out.xx = -ip(s, px, Nx);
  out.yy = -ip(s, py, Ny);
  out.xy = -0.5 * (ip(s, px, Ny) + ip(s, py, Nx));
  out.ok = true;
  return out;
}

double sff_residual(const FundamentalPoint& p, const SecondForm& f) {
  double e = std::exp(p.omega);
  double rxx = std::abs(f.xx - (p.Q + p.R - p.H * e));
  double rxy = std::abs(f.xy - (p.Q - p.R));
  double ryy = std::abs(f.yy - (p.Q + p.R + p.H * e));
  return std::max({rxx, rxy, ryy});
}

FundamentalData compute(const Sampled& s, const AmbientSpec& amb, const Tolerances& tol,
                        bool strict) {
  if (s.nu < 5 || s.nv < 5) throw DomainError("fundamental data needs at least a 5x5 grid");
  if (amb.dim() != s.dim) throw TagMismatch("ambient kind does not match the surface grid");
  FundamentalData fd;
  fd.ambient = amb;
  fd.domain = s.domain;
  fd.nu = s.nu;
  fd.nv = s.nv;
  fd.points.resize(static_cast<std::size_t>(s.nu) * s.nv);

  for (int i = 1; i < s.nu - 1; ++i) {
    for (int j = 1; j < s.nv - 1; ++j) {
      FundamentalPoint& pt = fd.at(i, j);
      bool touches_mask = false;
      for (int a = i - 1; a <= i + 1; ++a)
        for (int b = j - 1; b <= j + 1; ++b) touches_mask = touches_mask || s.masked(a, b);
      Derivs d = derivs(s, i, j);
      double e = 2.0 * ip(s, d.pu, d.pv);
      if (touches_mask || !(e > tol.degen)) {
        if (strict)
          throw DegenerateMetric("degenerate metric at (u, v) = (" +
                                 std::to_string(s.domain.u_at(i, s.nu)) + ", " +
                                 std::to_string(s.domain.v_at(j, s.nv)) + ")");
        pt.level = PointLevel::Degenerate;
        continue;
      }
      AVec n{0.0, 0.0, 0.0, 0.0};
      AVec px = lin(1.0, d.pu, -1.0, d.pv), py = lin(1.0, d.pu, 1.0, d.pv);
      if (s.dim == 4) {
        const AVec& p = s.at(i, j);
        for (int k = 0; k < 4; ++k) n[k] = ((k % 2) ? -1.0 : 1.0) * det3(p, d.pu, d.pv, k);
      } else {
        n = {d.pu[1] * d.pv[2] - d.pu[2] * d.pv[1], d.pu[2] * d.pv[0] - d.pu[0] * d.pv[2],
             d.pu[0] * d.pv[1] - d.pu[1] * d.pv[0], 0.0};
      }
      AVec N;
      for (int k = 0; k < 4; ++k) N[k] = s.eta[k] * n[k];
      double nn = ip(s, N, N);
      if (!(nn > 0.0) || !std::isfinite(nn)) {
        if (strict)
          throw NormalSolveError("tangent system is rank deficient at grid point (" +
                                 std::to_string(i) + ", " + std::to_string(j) + ")");
        pt.level = PointLevel::Degenerate;
        continue;
      }
      double scale = 1.0 / std::sqrt(nn);
      double orient = s.dim == 4 ? det4(s.at(i, j), px, py, N) : det3(px, py, N, 3);
      if (orient < 0.0) scale = -scale;
      if (amb.flip) scale = -scale;
      for (int k = 0; k < 4; ++k) N[k] *= scale;

      pt.level = PointLevel::Interior;
      pt.N = N;
      pt.omega = std::log(e);
      pt.H = 2.0 * ip(s, d.puv, N) / e;
      pt.Q = ip(s, d.puu, N);
      pt.R = ip(s, d.pvv, N);
      pt.K = amb.Kbar + pt.H * pt.H - 4.0 * pt.Q * pt.R / (e * e);
      pt.conf_u = ip(s, d.pu, d.pu);
      pt.conf_v = ip(s, d.pv, d.pv);
      pt.K_shape = pt.gauss_eq = pt.sff = kNaN;
      pt.II_xx = pt.II_xy = pt.II_yy = kNaN;
    }
  }

  for (int i = 2; i < s.nu - 2; ++i) {
    for (int j = 2; j < s.nv - 2; ++j) {
      SecondForm f = second_form(s, fd, i, j);
      if (!f.ok) continue;
      FundamentalPoint& pt = fd.at(i, j);
      double e = std::exp(pt.omega);
      pt.level = PointLevel::Deep;
      pt.II_xx = f.xx;
      pt.II_xy = f.xy;
      pt.II_yy = f.yy;
      pt.K_shape = amb.Kbar + (f.xx * f.yy - f.xy * f.xy) / (-e * e);
      pt.gauss_eq = pt.K - pt.K_shape;
      pt.sff = sff_residual(pt, f);
    }
  }
  return fd;
}

std::vector<double> sff_grid(const Sampled& s, const FundamentalData& fd) {
  std::vector<double> out(fd.points.size(), kNaN);
  for (int i = 0; i < fd.nu; ++i)
    for (int j = 0; j < fd.nv; ++j) {
      SecondForm f = second_form(s, fd, i, j);
      if (f.ok) out[static_cast<std::size_t>(i) * fd.nv + j] = sff_residual(fd.at(i, j), f);
    }
  return out;
}

}  // namespace

FundamentalData fundamental_data(const SurfaceGridH31& s, const AmbientSpec& amb,
                                 const Tolerances& tol, bool strict) {
  return compute(sample(s), amb, tol, strict);
}

FundamentalData fundamental_data(const SurfaceGridE31& s, const AmbientSpec& amb,
                                 const Tolerances& tol, bool strict) {
  return compute(sample(s), amb, tol, strict);
}

std::vector<double> second_form_residual(const FundamentalData& fd, const SurfaceGridH31& s) {
  if (fd.nu != s.nu || fd.nv != s.nv) throw TagMismatch("grid sizes differ");
  return sff_grid(sample(s), fd);
}

std::vector<double> second_form_residual(const FundamentalData& fd, const SurfaceGridE31& s) {
  if (fd.nu != s.nu || fd.nv != s.nv) throw TagMismatch("grid sizes differ");
  return sff_grid(sample(s), fd);
}

std::vector<std::uint8_t> umbilic_detect(const FundamentalData& fd, double tol) {
  std::vector<std::uint8_t> out(fd.points.size(), 0);
  for (std::size_t k = 0; k < out.size(); ++k) {
    const auto& p = fd.points[k];
    out[k] = p.has_data() && std::abs(p.Q) <= tol && std::abs(p.R) <= tol;
  }
  return out;
}

std::pair<double, double> lawson_shift(double H, double Kbar, double c) {
  return {H + c, Kbar - 2.0 * c * H - c * c};
}

Mat2 shape_operator(const FundamentalPoint& p) {
  double e = std::exp(p.omega);
  return {-p.II_xx / e, -p.II_xy / e, p.II_xy / e, p.II_yy / e};
}

ShiftedShape lawson_shift_shape(const Mat2& S, double Kbar, double c) {
  return {S + c * Mat2::identity(), Kbar - c * S.trace() - c * c};
}

const ResidualStat& GeometryReport::residual(const std::string& name) const {
  for (const auto& r : residuals)
    if (r.name == name) return r;
  throw UnknownName("no residual named " + name);
}

bool in_statistics(const FundamentalPoint& p, const Tolerances& tol) {
  return p.has_data() && std::exp(p.omega) >= tol.stat_metric_floor;
}

GeometryReport geometry_report(const FundamentalData& fd, const Tolerances& tol) {
  GeometryReport r;
  r.ambient = fd.ambient;
  r.domain = fd.domain;
  r.nu = fd.nu;
  r.nv = fd.nv;
  r.fd = fd;

  struct Acc {
    double max = 0.0, sum = 0.0;
    std::size_t n = 0;
    void add(double x) {
      if (std::isnan(x)) return;
      max = std::max(max, std::abs(x));
      sum += std::abs(x);
      ++n;
    }
  } cu, cv, ge, sf;
  std::map<long long, std::size_t> bins;
  std::size_t with_data = 0, umbilic = 0;
  double min_metric = std::numeric_limits<double>::infinity();
  r.H_min = std::numeric_limits<double>::infinity();
  r.H_max = -std::numeric_limits<double>::infinity();
  for (const auto& p : fd.points) {
    if (!p.has_data()) continue;
    ++with_data;
    min_metric = std::min(min_metric, std::exp(p.omega));
    if (std::abs(p.Q) <= tol.umbilic && std::abs(p.R) <= tol.umbilic) ++umbilic;
    if (!in_statistics(p, tol)) continue;
    ++r.stat_points;
    cu.add(p.conf_u);
    cv.add(p.conf_v);
    if (p.deep()) {
      ge.add(p.gauss_eq);
      sf.add(p.sff);
    }
    ++bins[std::llround(p.H * 1000.0)];
    r.H_min = std::min(r.H_min, p.H);
    r.H_max = std::max(r.H_max, p.H);
  }
  auto stat = [](const char* name, const Acc& a) {
    return ResidualStat{name, a.max, a.n ? a.sum / static_cast<double>(a.n) : 0.0};
  };
  r.residuals = {stat("conf_u", cu), stat("conf_v", cv), stat("gauss_eq", ge), stat("sff", sf)};
  r.min_metric = with_data ? min_metric : 0.0;
  r.umbilic_fraction = with_data ? static_cast<double>(umbilic) / static_cast<double>(with_data) : 0.0;
  if (r.stat_points == 0) {
    r.H_min = r.H_max = 0.0;
    return r;
  }
  long long best = 0;
  std::size_t count = 0;
  for (auto [bin, c] : bins)
    if (c > count) {
      best = bin;
      count = c;
    }
  r.modal_H = static_cast<double>(best) / 1000.0;
  r.H_deviation = std::max(std::abs(r.H_max - r.modal_H), std::abs(r.H_min - r.modal_H));
  return r;
}

GeometryReport geometry_report(const SurfaceGridH31& s, const AmbientSpec& amb,
                               const Tolerances& tol) {
  return geometry_report(fundamental_data(s, amb, tol), tol);
}

GeometryReport geometry_report(const SurfaceGridE31& s, const AmbientSpec& amb,
                               const Tolerances& tol) {
  return geometry_report(fundamental_data(s, amb, tol), tol);
}

}  // namespace adscmc

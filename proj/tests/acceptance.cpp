// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "adscmc/bryant.hpp"
#include "adscmc/errors.hpp"
#include "adscmc/gallery.hpp"
#include "adscmc/gauss.hpp"
#include "adscmc/geometry.hpp"
#include "adscmc/io.hpp"
#include "adscmc/lax.hpp"
#include "adscmc/weierstrass.hpp"

using namespace adscmc;

namespace {

struct Line {
  std::string label;
  double value;
  double tol;
  bool pass() const { return value <= tol; }
};

struct Criterion {
  int id;
  std::string title;
  std::vector<Line> lines;
  std::vector<std::string> notes;

  void add(std::string label, double value, double tol) { lines.push_back({std::move(label), value, tol}); }
  void require(std::string label, bool ok) { add(std::move(label), ok ? 0.0 : 1.0, 0.0); }
  bool pass() const {
    return std::all_of(lines.begin(), lines.end(), [](const Line& l) { return l.pass(); });
  }
};

const std::vector<std::string> h31_names{"enneper-isothermic", "enneper-anti", "b-scroll", "horosphere"};

GmcData gmc(const char* omega, double H, const char* Q, const char* R) {
  return {ScalarField2D::parse(omega), H, ScalarField1D::parse(Q, "u"), ScalarField1D::parse(R, "v")};
}

ScalarField1D field(const std::string& src, const char* var) { return ScalarField1D::parse(src, var); }

double frame_error(const FrameCurve& c, const GalleryEntry& e, FrameLeg leg) {
  auto nodes = c.nodes();
  double m = 0;
  for (std::size_t k = 0; k < nodes.size(); ++k)
    m = std::max(m, max_abs_diff(c.F[k], oracle_frame(e, leg, nodes[k])));
  return m;
}

double max_H_error(const GeometryReport& r, double H) {
  return std::max(std::abs(r.H_min - H), std::abs(r.H_max - H));
}

SurfaceGridH31 integrated_surface(const GalleryEntry& e, const Domain& d, int n, int substeps) {
  FrameCurve F1 = integrate_frame(Leg::Q, e.data.q, e.data.f, d.u0, d.u1, n - 1, {}, {}, 0.0, substeps);
  FrameCurve F2 = integrate_frame(Leg::RMu, e.data.r, e.data.g, d.v0, d.v1, n - 1, {}, {}, 0.0, substeps);
  return assemble_mu(F1, F2);
}

template <class F>
double over_stats(const FundamentalData& fd, F value) {
  double m = 0;
  for (const auto& p : fd.points)
    if (in_statistics(p, Tolerances{})) m = std::max(m, value(p));
  return m;
}

Criterion integrator_vs_oracle() {
  Criterion c{1, "RK4 frames match the closed forms", {}, {}};
  for (const char* name : {"enneper-isothermic", "enneper-anti", "b-scroll"}) {
    GalleryEntry e = gallery(name);
    FrameCurve F1 = integrate_frame(Leg::Q, e.data.q, e.data.f, -1.5, 1.5, 1500);
    FrameCurve F2 = integrate_frame(Leg::RMu, e.data.r, e.data.g, -1.5, 1.5, 1500);
    c.add(std::string(name) + " F1 max entry error", frame_error(F1, e, FrameLeg::F1), 1e-8);
    c.add(std::string(name) + " F2 max entry error", frame_error(F2, e, FrameLeg::F2), 1e-8);
  }
  GalleryEntry e = gallery("enneper-isothermic");
  auto err = [&](int n) {
    return frame_error(integrate_frame(Leg::Q, e.data.q, e.data.f, -1.5, 1.5, n), e, FrameLeg::F1);
  };
  double ratio = err(150) / err(300);
  c.add("distance of the step-halving ratio from [14, 18]", std::max({0.0, 14 - ratio, ratio - 18}), 0.0);
  c.notes.push_back("halving ratio " + std::to_string(ratio));
  return c;
}

Criterion cmc_verification() {
  Criterion c{2, "assembled gallery surfaces have H = 1, flipped H = -1 (h = 3e-2)", {}, {}};
  for (const auto& name : h31_names) {
    GalleryEntry e = gallery(name);
    SurfaceGridH31 s = integrated_surface(e, Domain{}, 101, 15);
    c.add(name + " max |H - 1|", max_H_error(geometry_report(s), 1.0), 5e-5);
    c.add(name + " flipped max |H + 1|", max_H_error(geometry_report(s, AmbientSpec::h31(true)), -1.0), 5e-5);
  }
  return c;
}

Criterion minimal_cousins() {
  Criterion c{3, "minimal cousins are minimal with the closed-form metric", {}, {}};
  for (const auto& name : h31_names) {
    WeierstrassData d = gallery(name).data;
    Domain dom;
    const int n = 101;
    GeometryReport r = geometry_report(integrate_minimal(d, dom, n, n));
    c.add(name + " max |H|", std::max(std::abs(r.H_min), std::abs(r.H_max)), 5e-5);
    double m = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double u = dom.u_at(i, n), v = dom.v_at(j, n);
        auto [pu, pv] = weierstrass_derivatives(d, u, v);
        m = std::max(m, std::abs(minimal_metric_factor(d, u, v) - 2 * scalar_product(pu, pv)));
      }
    c.add(name + " metric factor defect", m, 1e-10);
  }
  return c;
}

Criterion gauss_equation() {
  Criterion c{4, "Gauss equation and shape-operator curvature (201x201)", {}, {}};
  for (const auto& name : h31_names) {
    FundamentalData fd = fundamental_data(oracle_surface(gallery(name), Domain{}, 201, 201));
    c.add(name + " max |H^2 - K - 1 - 4e^{-2w}QR|", over_stats(fd, [](const FundamentalPoint& p) {
            return std::abs(p.H * p.H - p.K - 1 - 4 * std::exp(-2 * p.omega) * p.Q * p.R);
          }), 1e-5);
    c.add(name + " max |K - (det(II I^-1) - 1)|", over_stats(fd, [](const FundamentalPoint& p) {
            return std::abs(p.gauss_eq);
          }), 1e-5);
  }
  return c;
}

Criterion lax_route() {
  Criterion c{5, "Liouville data through the Lax route", {}, {}};
  GmcData data = gmc("2*ln(1 + u*v)", 1, "1", "1");
  Domain d{-0.75, 0.75, -0.75, 0.75};
  c.add("gmc residual", gmc_residual(data, d, 51, 51).max_abs(), 1e-6);
  for (Assembly a : {Assembly::Mu, Assembly::Nu}) {
    std::string tag = to_string(a);
    LaxFrames fr = integrate_lax(data, a, d, 51, 51);
    c.add(tag + " path-independence defect", fr.path_defect, 1e-6);
    SurfaceGridH31 s = assemble_lax(fr, data);
    c.add(tag + " max |H - 1|", max_H_error(geometry_report(s), 1.0), 5e-5);
    c.add(tag + " flipped max |H + 1|", max_H_error(geometry_report(s, AmbientSpec::h31(true)), -1.0), 5e-5);
  }
  bool rejected = false;
  try {
    integrate_lax(gmc("0", 1, "1", "1"), Assembly::Mu, d, 51, 51);
  } catch (const CompatibilityError&) {
    rejected = true;
  }
  c.require("incompatible data rejected", rejected);
  return c;
}

Criterion frame_identities() {
  Criterion c{6, "frame identities and holomorphicity classes", {}, {}};
  struct Case {
    double H;
    const char *Q, *R;
    Pole sign;
    Holomorphy want;
  };
  Domain d{-0.5, 0.5, -0.5, 0.5};
  for (Case k : {Case{1, "0", "1", Pole::Plus, Holomorphy::Antiholomorphic},
                 Case{1, "1", "0", Pole::Plus, Holomorphy::Holomorphic},
                 Case{1, "0", "0", Pole::Plus, Holomorphy::Constant},
                 Case{-1, "0", "1", Pole::Minus, Holomorphy::Antiholomorphic},
                 Case{-1, "1", "0", Pole::Minus, Holomorphy::Holomorphic},
                 Case{-1, "0", "0", Pole::Minus, Holomorphy::Constant}}) {
    GmcData data = gmc("0", k.H, k.Q, k.R);
    LaxFrames fr = integrate_lax(data, Assembly::Mu, d, 201, 201);
    HolomorphyCheck h = holomorphicity_check(fr, data, k.sign);
    std::string tag = "H=" + std::string(k.H > 0 ? "1" : "-1") + " Q=" + k.Q + " R=" + k.R;
    c.add(tag + " identity residual", h.max_residual, 1e-5);
    c.require(tag + " classified " + to_string(k.want), h.overall == k.want);
  }
  return c;
}

Criterion gauss_conformality() {
  Criterion c{7, "hyperbolic Gauss map conformality (201x201)", {}, {}};
  for (const auto& name : h31_names) {
    SurfaceGridH31 s = oracle_surface(gallery(name), Domain{}, 201, 201);
    FundamentalData fd = fundamental_data(s);
    c.add(name + " max |coefficient + K e^w|", gauss_conformality_check(s, fd, Pole::Plus).max_residual, 1e-4);
    if (name == "horosphere") c.add("horosphere plus-map spread", hyperbolic_gauss(s, fd, Pole::Plus).spread(), 1e-6);
  }
  return c;
}

Criterion generalized_gauss_map() {
  Criterion c{8, "generalized Gauss map equals the hyperbolic charts (201x201)", {}, {}};
  for (const auto& name : h31_names) {
    Domain d = name == "b-scroll" ? Domain{-0.5, 0.5, 0.1, 1.1} : Domain{-0.5, 0.5, -0.5, 0.5};
    SurfaceGridH31 s = oracle_surface(gallery(name), d, 201, 201);
    FundamentalData fd = fundamental_data(s);
    auto [plus, minus] = generalized_gauss(s, fd);
    c.add(name + " plus chart difference", max_chart_difference(plus, hyperbolic_gauss(s, fd, Pole::Plus)), 1e-6);
    c.add(name + " minus chart difference", max_chart_difference(minus, hyperbolic_gauss(s, fd, Pole::Minus)),
          1e-6);
  }
  return c;
}

Criterion lawson_round_trip() {
  Criterion c{9, "Weierstrass data recovered from frames; Lawson corner cases", {}, {}};
  struct Case {
    const char *q, *f, *r, *g;
    Leg leg;
  };
  for (Case k : {Case{"u", "1", "v", "1", Leg::RMu}, Case{"-u", "1", "v", "1", Leg::RMu},
                 Case{"u", "1", "0", "1", Leg::RMu}, Case{"sin(u)", "1 + u^2", "cosh(v)", "exp(v)", Leg::RMu},
                 Case{"u", "2", "v^2 + 1", "1", Leg::RNu}}) {
    auto q = field(k.q, "u"), f = field(k.f, "u"), r = field(k.r, "v"), g = field(k.g, "v");
    FrameCurve F1 = integrate_frame(Leg::Q, q, f, -1, 1, 2000);
    FrameCurve F2 = integrate_frame(k.leg, r, g, -1, 1, 2000);
    WeierstrassData w = extract_weierstrass_data(F1, F2);
    double m = 0;
    for (double t : uniform_nodes(-1, 1, 2001))
      m = std::max({m, std::abs(w.q(t) - q(t)), std::abs(w.f(t) - f(t)), std::abs(w.r(t) - r(t)),
                    std::abs(w.g(t) - g(t))});
    c.add(std::string("(") + k.q + ", " + k.f + ", " + k.r + ", " + k.g + ", " + to_string(k.leg) + ") recovery", m,
          1e-7);
  }
  auto corner = [&](double H, double Kbar, double c_, double H2, double K2) {
    auto [h, k] = lawson_shift(H, Kbar, c_);
    c.require("lawson_shift(" + std::to_string(H) + ", " + std::to_string(Kbar) + ", " + std::to_string(c_) + ")",
              h == H2 && k == K2);
  };
  corner(0, 0, 1, 1, -1);
  corner(0, 1, 1, 1, 0);
  return c;
}

Criterion formats() {
  Criterion c{10, "deterministic export, lossless JSON, projections inside S^2_1", {}, {}};
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "adscmc_acceptance";
  fs::create_directories(dir);

  SurfaceGridH31 s = oracle_surface(gallery("enneper-anti"), Domain{}, 101, 101);
  GeometryReport rep = geometry_report(s);
  auto write_all = [&](const std::string& tag) {
    std::vector<std::string> texts;
    for (const char* ext : {".obj", ".json", ".csv"}) {
      std::string path = (dir / (tag + ext)).string();
      export_surface(s, format_for_path(path), path, Pole::Plus, &rep);
      texts.push_back(read_text(path));
    }
    return texts;
  };
  c.require("OBJ, JSON and CSV byte identical across runs", write_all("a") == write_all("b"));

  bool lossless = true;
  for (const auto& name : h31_names) {
    SurfaceGridH31 g = oracle_surface(gallery(name), Domain{}, 41, 41);
    std::string path = (dir / (name + ".json")).string();
    export_surface(g, Format::Json, path);
    auto back = std::get<SurfaceGridH31>(import_surface(path));
    lossless = lossless && back.points == g.points && back.mask == g.mask && back.nu == g.nu &&
               back.domain.u0 == g.domain.u0 && back.domain.v1 == g.domain.v1;
  }
  c.require("JSON round trip reproduces every point bit for bit", lossless);

  std::size_t outside = 0, checked = 0;
  for (const auto& name : h31_names) {
    SurfaceGridH31 g = oracle_surface(gallery(name), Domain{}, 101, 101);
    for (const Mat2& p : g.points) {
      if (!(to_vec(p).x0() > 0)) continue;
      ++checked;
      try {
        if (!inside_s21(project_h31(p, Pole::Plus))) ++outside;
      } catch (const PoleError&) {
        ++outside;
      }
    }
  }
  c.add("points of the x0 > 0 half projecting outside S^2_1", static_cast<double>(outside), 0.0);
  c.notes.push_back(std::to_string(checked) + " points projected");
  return c;
}

}  // namespace

int main() {
  std::vector<std::function<Criterion()>> suite{integrator_vs_oracle, cmc_verification, minimal_cousins,
                                                gauss_equation,       lax_route,        frame_identities,
                                                gauss_conformality,   generalized_gauss_map, lawson_round_trip,
                                                formats};
  int failed = 0;
  for (std::size_t k = 0; k < suite.size(); ++k) {
    Criterion c{static_cast<int>(k + 1), "", {}, {}};
    try {
      c = suite[k]();
    } catch (const std::exception& e) {
      c.require(std::string("threw: ") + e.what(), false);
    }
    bool ok = c.pass();
    failed += !ok;
    std::printf("criterion %2d: %s  %s\n", c.id, ok ? "PASS" : "FAIL", c.title.c_str());
    for (const auto& l : c.lines)
      std::printf("    [%s] %-52s %.3e (tol %.1e)\n", l.pass() ? "ok" : "!!", l.label.c_str(), l.value, l.tol);
    for (const auto& n : c.notes) std::printf("    note: %s\n", n.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, suite.size());
  return failed == 0 ? 0 : 1;
}

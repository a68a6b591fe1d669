#include "run.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <variant>

#include <nlohmann/json.hpp>

#include "adscmc/bryant.hpp"
#include "adscmc/errors.hpp"
#include "adscmc/gallery.hpp"
#include "adscmc/gauss.hpp"
#include "adscmc/geometry.hpp"
#include "adscmc/io.hpp"
#include "adscmc/lax.hpp"

namespace adscmc::cli {

using nlohmann::json;

const std::map<std::string, double Tolerances::*>& tolerance_fields() {
  static const std::map<std::string, double Tolerances::*> fields{
      {"det", &Tolerances::det},
      {"det_surface", &Tolerances::det_surface},
      {"det_step", &Tolerances::det_step},
      {"invertible", &Tolerances::invertible},
      {"trace", &Tolerances::trace},
      {"degen", &Tolerances::degen},
      {"compat", &Tolerances::compat},
      {"path", &Tolerances::path},
      {"hol", &Tolerances::hol},
      {"umbilic", &Tolerances::umbilic},
      {"mean_curvature", &Tolerances::mean_curvature},
      {"gauss_eq", &Tolerances::gauss_eq},
      {"identity", &Tolerances::identity},
      {"conformal_gauss", &Tolerances::conformal_gauss},
      {"chart_pole", &Tolerances::chart_pole},
      {"chart_agreement", &Tolerances::chart_agreement},
      {"hyperquadric", &Tolerances::hyperquadric},
      {"sphere", &Tolerances::sphere},
      {"quadrature", &Tolerances::quadrature},
      {"stat_metric_floor", &Tolerances::stat_metric_floor},
  };
  return fields;
}

void set_tolerance(Tolerances& tol, const std::string& name, double value) {
  auto it = tolerance_fields().find(name);
  if (it == tolerance_fields().end()) throw UnknownName("unknown tolerance '" + name + "'");
  tol.*(it->second) = value;
}

namespace {

struct Check {
  std::string name;
  double value;
  double tol;
  bool pass() const { return value <= tol; }  // NaN fails
};

struct Outcome {
  std::vector<Check> checks;
  json diagnostics = json::object();
  json extra = json::object();
  std::optional<AnySurface> surface;
  std::optional<GeometryReport> report;
  json gauss;  // gauss command output
};

int substeps_for(double h) { return std::max(1, static_cast<int>(std::ceil(h / 2e-3))); }

double max_abs_H(const GeometryReport& r) { return std::max(std::abs(r.H_min), std::abs(r.H_max)); }

double max_H_error(const GeometryReport& r, double expected) {
  return std::max(std::abs(r.H_min - expected), std::abs(r.H_max - expected));
}

void add_residual_diagnostics(Outcome& o, const GeometryReport& r) {
  for (const auto& s : r.residuals) o.diagnostics[s.name + "_max"] = s.max;
  o.diagnostics["min_metric"] = r.min_metric;
  o.diagnostics["modal_H"] = r.modal_H;
  o.diagnostics["umbilic_fraction"] = r.umbilic_fraction;
}

double metric_factor_defect(const WeierstrassData& d, const Domain& dom, int nu, int nv) {
  double m = 0.0;
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nv; ++j) {
      double u = dom.u_at(i, nu), v = dom.v_at(j, nv);
      auto [pu, pv] = weierstrass_derivatives(d, u, v);
      m = std::max(m, std::abs(minimal_metric_factor(d, u, v) - 2.0 * scalar_product(pu, pv)));
    }
  return m;
}

void minimal_outcome(Outcome& o, const WeierstrassData& data, const RunConfig& cfg) {
  SurfaceGridE31 s = integrate_minimal(data, cfg.domain, cfg.nu, cfg.nv, cfg.tol);
  GeometryReport r = geometry_report(s, AmbientSpec::e31(cfg.flip), cfg.tol);
  o.checks.push_back({"mean_curvature", max_abs_H(r), cfg.tol.mean_curvature});
  o.checks.push_back({"metric_factor", metric_factor_defect(data, cfg.domain, cfg.nu, cfg.nv), 1e-10});
  add_residual_diagnostics(o, r);
  o.surface = std::move(s);
  o.report = std::move(r);
}

void h31_checks(Outcome& o, const SurfaceGridH31& s, const GeometryReport& r, double expected_H,
                const RunConfig& cfg) {
  o.checks.push_back({"mean_curvature", max_H_error(r, expected_H), cfg.tol.mean_curvature});
  o.checks.push_back({"det_drift", s.max_det_drift(), cfg.tol.det_surface});
  add_residual_diagnostics(o, r);
}

// Points of the x0 > 0 half whose plus projection misses Int S^2_1(1).
std::size_t exterior_points(const SurfaceGridH31& s, const Tolerances& tol) {
  std::size_t n = 0;
  for (std::size_t k = 0; k < s.points.size(); ++k) {
    if (!s.mask.empty() && s.mask[k]) continue;
    if (!(to_vec(s.points[k]).x0() > 0.0)) continue;  // outside the half H^3_1(-1)_+
    try {
      if (!inside_s21(project_h31(s.points[k], Pole::Plus, tol))) ++n;
    } catch (const PoleError&) {
      ++n;
    }
  }
  return n;
}

json gauss_json(const GaussMapGrid& g) {
  json j;
  j["sign"] = to_string(g.sign);
  j["chart"] = g.chart;
  j["g1"] = g.g1;
  j["g2"] = g.g2;
  json mask = json::array();
  for (auto m : g.mask) mask.push_back(static_cast<int>(m));
  j["mask"] = std::move(mask);
  return j;
}

void gauss_outcome(Outcome& o, const SurfaceGridH31& s, const RunConfig& cfg) {
  FundamentalData fd = fundamental_data(s, AmbientSpec::h31(cfg.flip), cfg.tol);
  auto [gp, gm] = generalized_gauss(s, fd, cfg.tol);
  GaussMapGrid hp = hyperbolic_gauss(s, fd, Pole::Plus, cfg.tol);
  GaussMapGrid hm = hyperbolic_gauss(s, fd, Pole::Minus, cfg.tol);
  o.checks.push_back({"generalized_plus", max_chart_difference(gp, hp), cfg.tol.chart_agreement});
  o.checks.push_back({"generalized_minus", max_chart_difference(gm, hm), cfg.tol.chart_agreement});
  ConformalityCheck c = gauss_conformality_check(s, fd, cfg.sign, cfg.tol);
  o.diagnostics["gauss_conformality_max"] = c.max_residual;
  o.diagnostics["gauss_spread_plus"] = hp.spread();
  o.gauss = {{"schema", 1},
             {"domain", {{"u0", s.domain.u0}, {"u1", s.domain.u1}, {"v0", s.domain.v0}, {"v1", s.domain.v1}}},
             {"nu", s.nu},
             {"nv", s.nv},
             {"hyperbolic_plus", gauss_json(hp)},
             {"hyperbolic_minus", gauss_json(hm)},
             {"generalized_plus", gauss_json(gp)},
             {"generalized_minus", gauss_json(gm)}};
}

GmcData lax_data(const RunConfig& cfg) {
  if (cfg.omega.empty() || cfg.Q.empty() || cfg.R.empty())
    throw std::invalid_argument("lax data needs --omega, --Q and --R");
  double H;
  try {
    std::size_t used = 0;
    H = std::stod(cfg.H, &used);
    if (used != cfg.H.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("--H must be a number, got '" + cfg.H + "'");
  }
  return {ScalarField2D::parse(cfg.omega), H, ScalarField1D::parse(cfg.Q, "u"),
          ScalarField1D::parse(cfg.R, "v")};
}

Outcome run_minimal(const RunConfig& cfg) {
  Outcome o;
  minimal_outcome(o, weierstrass_data(cfg.q, cfg.f, cfg.r, cfg.g), cfg);
  return o;
}

Outcome run_cmc1(const RunConfig& cfg) {
  Outcome o;
  if (cfg.action == Assembly::None) throw std::invalid_argument("--action must be mu or nu");
  WeierstrassData d = weierstrass_data(cfg.q, cfg.f, cfg.r, cfg.g);
  const Domain& dom = cfg.domain;
  FrameCurve F1 = integrate_frame(Leg::Q, d.q, d.f, dom.u0, dom.u1, cfg.nu - 1, {}, cfg.tol, 0.0,
                                  substeps_for((dom.u1 - dom.u0) / (cfg.nu - 1)));
  Leg leg2 = cfg.action == Assembly::Mu ? Leg::RMu : Leg::RNu;
  FrameCurve F2 = integrate_frame(leg2, d.r, d.g, dom.v0, dom.v1, cfg.nv - 1, {}, cfg.tol, 0.0,
                                  substeps_for((dom.v1 - dom.v0) / (cfg.nv - 1)));
  SurfaceGridH31 s = cfg.action == Assembly::Mu ? assemble_mu(F1, F2, cfg.tol)
                                                : assemble_nu(F1, F2, cfg.tol);
  GeometryReport r = geometry_report(s, AmbientSpec::h31(cfg.flip), cfg.tol);
  double expected = r.modal_H >= 0.0 ? 1.0 : -1.0;
  h31_checks(o, s, r, expected, cfg);
  o.extra["expected_H"] = expected;
  o.diagnostics["frame_det_drift"] = std::max(F1.max_det_drift(), F2.max_det_drift());
  o.surface = std::move(s);
  o.report = std::move(r);
  return o;
}

Outcome run_lax(const RunConfig& cfg) {
  Outcome o;
  GmcData data = lax_data(cfg);
  if (cfg.action == Assembly::None) throw std::invalid_argument("--action must be mu or nu");
  LaxFrames fr = integrate_lax(data, cfg.action, cfg.domain, cfg.nu, cfg.nv, {}, cfg.tol);
  SurfaceGridH31 s = assemble_lax(fr, data, cfg.tol);
  GeometryReport r = geometry_report(s, AmbientSpec::h31(cfg.flip), cfg.tol);
  double expected = cfg.flip ? -data.H : data.H;
  h31_checks(o, s, r, expected, cfg);
  o.checks.push_back({"path_defect", fr.path_defect, cfg.tol.path});
  o.diagnostics["gmc_residual_max"] = gmc_residual(data, cfg.domain, cfg.nu, cfg.nv).max_abs();
  double metric = 0.0;
  for (int i = 0; i < r.fd.nu; ++i)
    for (int j = 0; j < r.fd.nv; ++j) {
      const auto& p = r.fd.at(i, j);
      if (!in_statistics(p, cfg.tol)) continue;
      metric = std::max(metric, std::abs(std::exp(p.omega) - s.metric[static_cast<std::size_t>(i) * s.nv + j]));
    }
  o.diagnostics["metric_vs_data_max"] = metric;
  o.extra["warnings"] = fr.warnings;
  o.surface = std::move(s);
  o.report = std::move(r);
  return o;
}

Outcome run_verify(const RunConfig& cfg) {
  if (cfg.input.empty()) throw std::invalid_argument("verify needs --in");
  Outcome o;
  AnySurface in = import_surface(cfg.input);
  if (auto* h = std::get_if<SurfaceGridH31>(&in)) {
    GeometryReport r = geometry_report(*h, AmbientSpec::h31(cfg.flip), cfg.tol);
    o.checks.push_back({"mean_curvature", r.H_deviation, cfg.tol.mean_curvature});
    o.checks.push_back({"det_drift", h->max_det_drift(), cfg.tol.det_surface});
    add_residual_diagnostics(o, r);
    o.report = std::move(r);
  } else {
    const auto& e = std::get<SurfaceGridE31>(in);
    GeometryReport r = geometry_report(e, AmbientSpec::e31(cfg.flip), cfg.tol);
    o.checks.push_back({"mean_curvature", r.H_deviation, cfg.tol.mean_curvature});
    add_residual_diagnostics(o, r);
    o.report = std::move(r);
  }
  o.surface = std::move(in);
  return o;
}

Outcome run_gauss(const RunConfig& cfg) {
  Outcome o;
  if (!cfg.name.empty()) {
    GalleryEntry e = gallery(cfg.name);
    if (e.minimal) throw TagMismatch("gauss needs an H31 surface; '" + cfg.name + "' is minimal");
    gauss_outcome(o, oracle_surface(e, cfg.domain, cfg.nu, cfg.nv, cfg.tol), cfg);
    return o;
  }
  GmcData data = lax_data(cfg);
  LaxFrames fr = integrate_lax(data, Assembly::Mu, cfg.domain, cfg.nu, cfg.nv, {}, cfg.tol);
  SurfaceGridH31 s = assemble_lax(fr, data, cfg.tol);
  gauss_outcome(o, s, cfg);
  FundamentalData fd = fundamental_data(s, AmbientSpec::h31(cfg.flip), cfg.tol);
  GaussMapGrid fg = frame_gauss_coordinates(fr, cfg.sign, cfg.tol);
  o.diagnostics["frame_vs_surface_chart"] =
      max_chart_difference(fg, hyperbolic_gauss(s, fd, cfg.sign, cfg.tol));
  HolomorphyCheck hc = holomorphicity_check(fr, data, cfg.sign, cfg.tol);
  o.diagnostics["identity_residual_max"] = hc.max_residual;
  o.extra["classification"] = to_string(hc.overall);
  o.gauss["classification"] = to_string(hc.overall);
  o.gauss["frame"] = gauss_json(fg);
  return o;
}

Outcome run_project(const RunConfig& cfg) {
  if (cfg.input.empty()) throw std::invalid_argument("project needs --in");
  Outcome o;
  AnySurface in = import_surface(cfg.input);
  const auto* h = std::get_if<SurfaceGridH31>(&in);
  if (!h) throw TagMismatch("project needs an h31 surface");
  if (cfg.pole == Pole::Plus)
    o.checks.push_back({"exterior_points", static_cast<double>(exterior_points(*h, cfg.tol)), 0.0});
  o.surface = std::move(in);
  return o;
}

Outcome run_gallery(const RunConfig& cfg) {
  GalleryEntry e = gallery(cfg.name);
  Outcome o;
  if (e.minimal) {
    minimal_outcome(o, e.data, cfg);
    return o;
  }
  SurfaceGridH31 s = oracle_surface(e, cfg.domain, cfg.nu, cfg.nv, cfg.tol);
  GeometryReport r = geometry_report(s, AmbientSpec::h31(cfg.flip), cfg.tol);
  double expected = cfg.flip ? -e.expected.H : e.expected.H;
  h31_checks(o, s, r, expected, cfg);
  o.checks.push_back({"umbilic_mismatch",
                      std::abs(r.umbilic_fraction - (e.expected.umbilic ? 1.0 : 0.0)), 0.0});
  o.checks.push_back({"exterior_points", static_cast<double>(exterior_points(s, cfg.tol)), 0.0});
  Outcome g;
  gauss_outcome(g, s, cfg);
  for (auto& c : g.checks) o.checks.push_back(c);
  o.diagnostics.update(g.diagnostics);
  o.surface = std::move(s);
  o.report = std::move(r);
  return o;
}

void write_outputs(const Outcome& o, const RunConfig& cfg) {
  for (const auto& path : cfg.outputs) {
    Format f = format_for_path(path);
    if (cfg.command == "gauss") {
      if (f != Format::Json) throw FormatError("gauss writes JSON only: '" + path + "'");
      write_text(path, dump_json(o.gauss));
      continue;
    }
    if (!o.surface) throw FormatError("no surface to write");
    if (f == Format::Csv && !o.report) throw FormatError("no report for CSV output");
    export_surface(*o.surface, f, path, cfg.pole, o.report ? &*o.report : nullptr, cfg.tol);
  }
}

}  // namespace

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Outcome o;
  try {
    if (cfg.nu < 5 || cfg.nv < 5) throw std::invalid_argument("--nu and --nv must be at least 5");
    cfg.domain.validate();
    if (cfg.command == "minimal") o = run_minimal(cfg);
    else if (cfg.command == "cmc1") o = run_cmc1(cfg);
    else if (cfg.command == "lax") o = run_lax(cfg);
    else if (cfg.command == "verify") o = run_verify(cfg);
    else if (cfg.command == "gauss") o = run_gauss(cfg);
    else if (cfg.command == "project") o = run_project(cfg);
    else if (cfg.command == "gallery") o = run_gallery(cfg);
    else throw std::invalid_argument("unknown command '" + cfg.command + "'");
    write_outputs(o, cfg);
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return Usage;
  } catch (const UnknownName& e) {
    err << "usage error: " << e.what() << "\n";
    return Usage;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return Usage;
  } catch (const UnknownIdentifier& e) {
    err << "usage error: " << e.what() << "\n";
    return Usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return ComputeError;
  }

  json summary;
  summary["command"] = cfg.command;
  json checks = json::object();
  const Check* worst = nullptr;
  double worst_ratio = 0.0;
  for (const auto& c : o.checks) {
    checks[c.name] = {{"value", c.value}, {"tol", c.tol}, {"pass", c.pass()}};
    if (c.pass()) continue;
    double ratio = c.tol > 0.0 ? c.value / c.tol : HUGE_VAL;
    if (!worst || !(ratio <= worst_ratio)) {
      worst = &c;
      worst_ratio = ratio;
    }
  }
  summary["checks"] = std::move(checks);
  summary["diagnostics"] = o.diagnostics;
  if (!o.extra.empty()) summary["info"] = o.extra;
  if (o.report) summary["report"] = report_json(*o.report);
  summary["outputs"] = cfg.outputs;
  summary["status"] = worst ? "fail" : "ok";
  if (worst) summary["worst"] = worst->name;
  std::string text = dump_json(summary);
  out << text;
  if (!cfg.report_path.empty()) {
    try {
      write_text(cfg.report_path, text);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return ComputeError;
    }
  }
  if (worst) {
    err << "check failed: " << worst->name << " = " << worst->value << " exceeds " << worst->tol
        << "\n";
    return CheckFailed;
  }
  return Ok;
}

}  // namespace adscmc::cli

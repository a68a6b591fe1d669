#include "adscmc/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <type_traits>

#include "adscmc/errors.hpp"

namespace adscmc {

Vec3 project_h31(const Mat2& p, Pole pole, const Tolerances& tol) {
  if (!(std::abs(p.det() - 1.0) <= tol.hyperquadric))
    throw HyperquadricError("point is off H^3_1: det = " + std::to_string(p.det()));
  Vec4 x = to_vec(p);
  double den = pole == Pole::Plus ? 1.0 + x.x0() : 1.0 - x.x0();
  if (!(std::abs(den) > tol.chart_pole))
    throw PoleError(std::string("projection pole (") + to_string(pole) + ")");
  return {x.x1() / den, x.x2() / den, x.x3() / den};
}

bool inside_s21(const Vec3& y) { return -y.x1 * y.x1 + y.x2 * y.x2 + y.x3 * y.x3 < 1.0; }

Format parse_format(std::string_view s) {
  if (s == "obj") return Format::Obj;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw FormatError("unknown format '" + std::string(s) + "' (expected obj, json or csv)");
}

Format format_for_path(const std::string& path) {
  auto dot = path.rfind('.');
  if (dot == std::string::npos) throw FormatError("no file extension in '" + path + "'");
  return parse_format(std::string_view(path).substr(dot + 1));
}

namespace {

std::string num(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void dump(const nlohmann::json& j, std::string& out, int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += inner + nlohmann::json(it.key()).dump() + ": ";
        dump(it.value(), out, indent + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // arrays of scalars stay on one line
      bool flat = true;
      for (const auto& e : j) flat = flat && !e.is_structured();
      out += flat ? "[" : "[\n";
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += flat ? ", " : ",\n";
        first = false;
        if (!flat) out += inner;
        dump(e, out, indent + 1);
      }
      out += flat ? "]" : "\n" + pad + "]";
      return;
    }
    case nlohmann::json::value_t::number_float:
      out += num(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

nlohmann::json domain_json(const Domain& d) {
  return {{"u0", d.u0}, {"u1", d.u1}, {"v0", d.v0}, {"v1", d.v1}};
}

nlohmann::json mask_json(const std::vector<std::uint8_t>& mask) {
  auto a = nlohmann::json::array();
  for (auto m : mask) a.push_back(static_cast<int>(m));
  return a;
}

std::string faces(int nu, int nv, const std::vector<std::uint8_t>& bad) {
  std::string out;
  char buf[96];
  for (int i = 0; i + 1 < nu; ++i)
    for (int j = 0; j + 1 < nv; ++j) {
      std::size_t a = static_cast<std::size_t>(i) * nv + j, b = a + nv, c = b + 1, d = a + 1;
      if (!bad[a] && !bad[b] && !bad[c]) {
        std::snprintf(buf, sizeof buf, "f %zu %zu %zu\n", a + 1, b + 1, c + 1);
        out += buf;
      }
      if (!bad[a] && !bad[c] && !bad[d]) {
        std::snprintf(buf, sizeof buf, "f %zu %zu %zu\n", a + 1, c + 1, d + 1);
        out += buf;
      }
    }
  return out;
}

std::string vertex(const Vec3& p) { return "v " + num(p.x1) + " " + num(p.x2) + " " + num(p.x3) + "\n"; }

}  // namespace

std::string dump_json(const nlohmann::json& j) {
  std::string out;
  dump(j, out, 0);
  out += "\n";
  return out;
}

std::string obj_text(const SurfaceGridH31& s, Pole pole, const Tolerances& tol) {
  std::string out;
  std::vector<std::uint8_t> bad(s.points.size(), 0);
  for (std::size_t k = 0; k < s.points.size(); ++k) {
    bad[k] = !s.mask.empty() && s.mask[k];
    Vec3 y;
    if (!bad[k]) {
      try {
        y = project_h31(s.points[k], pole, tol);
      } catch (const PoleError&) {
        bad[k] = 1;
      }
    }
    out += vertex(bad[k] ? Vec3{} : y);
  }
  return out + faces(s.nu, s.nv, bad);
}

std::string obj_text(const SurfaceGridE31& s) {
  std::string out;
  std::vector<std::uint8_t> bad(s.points.size(), 0);
  for (std::size_t k = 0; k < s.points.size(); ++k) {
    bad[k] = !s.mask.empty() && s.mask[k];
    out += vertex(bad[k] ? Vec3{} : s.points[k]);
  }
  return out + faces(s.nu, s.nv, bad);
}

nlohmann::json surface_json(const SurfaceGridH31& s) {
  auto v = nlohmann::json::array();
  for (const auto& m : s.points) v.push_back({m.a, m.b, m.c, m.d});
  nlohmann::json j;
  j["schema"] = 1;
  j["meta"] = {{"domain", domain_json(s.domain)},
               {"nu", s.nu},
               {"nv", s.nv},
               {"ambient", "h31"},
               {"assembly", to_string(s.assembly)},
               {"coordinates", "matrix"}};
  j["vertices"] = std::move(v);
  j["mask"] = mask_json(s.mask);
  return j;
}

nlohmann::json surface_json(const SurfaceGridE31& s) {
  auto v = nlohmann::json::array();
  for (const auto& p : s.points) v.push_back({p.x1, p.x2, p.x3});
  nlohmann::json j;
  j["schema"] = 1;
  j["meta"] = {{"domain", domain_json(s.domain)},
               {"nu", s.nu},
               {"nv", s.nv},
               {"ambient", "e31"},
               {"assembly", "none"},
               {"coordinates", "x1x2x3"}};
  j["vertices"] = std::move(v);
  j["mask"] = mask_json(s.mask);
  return j;
}

nlohmann::json report_json(const GeometryReport& r) {
  nlohmann::json res = nlohmann::json::object();
  for (const auto& s : r.residuals) res[s.name] = {{"max", s.max}, {"mean", s.mean}};
  return {{"ambient", to_string(r.ambient.kind)},
          {"Kbar", r.ambient.Kbar},
          {"flip", r.ambient.flip},
          {"nu", r.nu},
          {"nv", r.nv},
          {"stat_points", r.stat_points},
          {"residuals", res},
          {"min_metric", r.min_metric},
          {"modal_H", r.modal_H},
          {"H_deviation", r.H_deviation},
          {"H_min", r.H_min},
          {"H_max", r.H_max},
          {"umbilic_fraction", r.umbilic_fraction}};
}

std::string csv_text(const FundamentalData& fd) {
  std::string out = "u,v,omega,H,Q,R,K,conf_u,conf_v,gauss_eq,sff\n";
  auto cell = [](double x) {
    if (std::isnan(x)) return std::string("nan");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
  };
  for (int i = 0; i < fd.nu; ++i)
    for (int j = 0; j < fd.nv; ++j) {
      const auto& p = fd.at(i, j);
      if (!p.has_data()) continue;
      double row[] = {fd.domain.u_at(i, fd.nu), fd.domain.v_at(j, fd.nv), p.omega, p.H, p.Q, p.R,
                      p.K, p.conf_u, p.conf_v, p.gauss_eq, p.sff};
      bool first = true;
      for (double x : row) {
        if (!first) out += ",";
        first = false;
        out += cell(x);
      }
      out += "\n";
    }
  return out;
}

namespace {

double real(const nlohmann::json& x) {
  if (x.is_null()) return std::nan("");
  if (!x.is_number()) throw FormatError("expected a number in surface JSON");
  return x.get<double>();
}

}  // namespace

AnySurface surface_from_json(const nlohmann::json& j) {
  try {
    if (j.at("schema").get<int>() != 1) throw FormatError("unsupported schema version");
    const auto& m = j.at("meta");
    Domain d{real(m.at("domain").at("u0")), real(m.at("domain").at("u1")),
             real(m.at("domain").at("v0")), real(m.at("domain").at("v1"))};
    d.validate();
    int nu = m.at("nu").get<int>(), nv = m.at("nv").get<int>();
    if (nu < 2 || nv < 2) throw FormatError("nu and nv must be at least 2");
    const auto& v = j.at("vertices");
    std::size_t n = static_cast<std::size_t>(nu) * nv;
    if (v.size() != n) throw FormatError("vertex count does not match nu * nv");
    std::vector<std::uint8_t> mask(n, 0);
    if (j.contains("mask")) {
      if (j["mask"].size() != n) throw FormatError("mask length does not match nu * nv");
      for (std::size_t k = 0; k < n; ++k) mask[k] = j["mask"][k].get<int>() != 0;
    }
    std::string amb = m.at("ambient").get<std::string>();
    if (amb == "h31") {
      SurfaceGridH31 s;
      s.domain = d;
      s.nu = nu;
      s.nv = nv;
      std::string as = m.value("assembly", "none");
      s.assembly = as == "mu" ? Assembly::Mu : as == "nu" ? Assembly::Nu : Assembly::None;
      for (const auto& p : v) {
        if (p.size() != 4) throw FormatError("h31 vertices need 4 entries");
        s.points.push_back({real(p[0]), real(p[1]), real(p[2]), real(p[3])});
      }
      s.mask = std::move(mask);
      return s;
    }
    if (amb == "e31") {
      SurfaceGridE31 s;
      s.domain = d;
      s.nu = nu;
      s.nv = nv;
      for (const auto& p : v) {
        if (p.size() != 3) throw FormatError("e31 vertices need 3 entries");
        s.points.push_back({real(p[0]), real(p[1]), real(p[2])});
      }
      s.mask = std::move(mask);
      return s;
    }
    throw FormatError("unknown ambient '" + amb + "'");
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed surface JSON: ") + e.what());
  } catch (const DomainError& e) {
    throw FormatError(std::string("malformed surface JSON: ") + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw IoError("write to '" + path + "' failed");
}

std::string read_text(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void export_surface(const AnySurface& s, Format format, const std::string& path, Pole pole,
                    const GeometryReport* report, const Tolerances& tol) {
  std::string text;
  switch (format) {
    case Format::Obj:
      text = std::visit(
          [&](const auto& g) {
            if constexpr (std::is_same_v<std::decay_t<decltype(g)>, SurfaceGridH31>)
              return obj_text(g, pole, tol);
            else
              return obj_text(g);
          },
          s);
      break;
    case Format::Json: {
      nlohmann::json j = std::visit([](const auto& g) { return surface_json(g); }, s);
      if (report) j["report"] = report_json(*report);
      text = dump_json(j);
      break;
    }
    case Format::Csv:
      if (!report) throw FormatError("CSV export needs a geometry report");
      text = csv_text(report->fd);
      break;
  }
  write_text(path, text);
}

AnySurface import_surface(const std::string& path) {
  std::string text = read_text(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("'" + path + "' is not valid JSON: " + e.what());
  }
  return surface_from_json(j);
}

}  // namespace adscmc

#include "adscmc/gallery.hpp"

#include <cmath>
#include <limits>

#include "adscmc/errors.hpp"

namespace adscmc {

namespace {

Mat2 enneper_leg(double t) {
  double c = std::cosh(t), s = std::sinh(t);
  return {c, s - t * c, s, c - t * s};
}

Mat2 anti_leg(double t) {
  double c = std::cos(t), s = std::sin(t);
  return {c, -s + t * c, s, c + t * s};
}

Mat2 horo_leg(double t) { return {1.0, 0.0, t, 1.0}; }

GalleryEntry make(std::string name, const char* q, const char* r) {
  GalleryEntry e;
  e.name = std::move(name);
  e.q_src = q;
  e.f_src = "1";
  e.r_src = r;
  e.g_src = "1";
  e.data = weierstrass_data(e.q_src, e.f_src, e.r_src, e.g_src);
  return e;
}

void with_frames(GalleryEntry& e, Mat2 (*F1)(double), Mat2 (*F2)(double)) {
  e.F1 = F1;
  e.F2 = F2;
  e.surface = [F1, F2](double u, double v) { return F1(u) * F2(v).transpose(); };
}

}  // namespace

const std::vector<std::string>& gallery_names() {
  static const std::vector<std::string> names{"enneper-isothermic", "enneper-anti", "b-scroll",
                                              "horosphere",         "minimal-enneper",
                                              "minimal-b-scroll"};
  return names;
}

GalleryEntry gallery(std::string_view name) {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  GalleryEntry e;
  if (name == "enneper-isothermic") {
    e = make("enneper-isothermic", "u", "v");
    with_frames(e, enneper_leg, enneper_leg);
    e.expected = {1.0, false, -1.0, -1.0, "isothermic timelike Enneper cousin"};
  } else if (name == "enneper-anti") {
    e = make("enneper-anti", "-u", "v");
    with_frames(e, anti_leg, enneper_leg);
    e.expected = {1.0, false, 1.0, -1.0, "anti-isothermic timelike Enneper cousin"};
  } else if (name == "b-scroll") {
    e = make("b-scroll", "u", "0");
    with_frames(e, enneper_leg, horo_leg);
    e.expected = {1.0, false, -1.0, 0.0, "ruled; QR = 0 without umbilics"};
  } else if (name == "horosphere") {
    e = make("horosphere", "0", "0");
    with_frames(e, horo_leg, horo_leg);
    e.expected = {1.0, true, 0.0, 0.0, "totally umbilic, K = 0"};
  } else if (name == "minimal-enneper") {
    e = make("minimal-enneper", "u", "v");
    e.minimal = true;
    e.expected = {0.0, false, nan, nan, "minimal cousin of enneper-isothermic"};
  } else if (name == "minimal-b-scroll") {
    e = make("minimal-b-scroll", "u", "0");
    e.minimal = true;
    e.expected = {0.0, false, nan, nan, "minimal cousin of b-scroll"};
  } else {
    std::string list;
    for (const auto& n : gallery_names()) list += (list.empty() ? "" : ", ") + n;
    throw UnknownName("unknown gallery entry '" + std::string(name) + "'; valid names: " + list);
  }
  return e;
}

Mat2 oracle_frame(const GalleryEntry& e, FrameLeg leg, double t) {
  const auto& f = leg == FrameLeg::F1 ? e.F1 : e.F2;
  if (!f)
    throw NoClosedForm("gallery entry '" + e.name + "' has no closed-form " +
                       (leg == FrameLeg::F1 ? "F1" : "F2"));
  return f(t);
}

std::pair<FrameCurve, FrameCurve> oracle_curves(const GalleryEntry& e, const Domain& d, int nu,
                                                int nv) {
  d.validate();
  if (nu < 2 || nv < 2) throw DomainError("oracle_curves needs nu, nv >= 2");
  std::vector<Mat2> a, b;
  for (double u : uniform_nodes(d.u0, d.u1, nu - 1)) a.push_back(oracle_frame(e, FrameLeg::F1, u));
  for (double v : uniform_nodes(d.v0, d.v1, nv - 1)) b.push_back(oracle_frame(e, FrameLeg::F2, v));
  return {FrameCurve::from_samples(Leg::Q, d.u0, d.u1, std::move(a)),
          FrameCurve::from_samples(Leg::RMu, d.v0, d.v1, std::move(b))};
}

SurfaceGridH31 oracle_surface(const GalleryEntry& e, const Domain& d, int nu, int nv,
                              const Tolerances& tol) {
  auto [F1, F2] = oracle_curves(e, d, nu, nv);
  return assemble_mu(F1, F2, tol);
}

}  // namespace adscmc

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "adscmc/bryant.hpp"
#include "adscmc/errors.hpp"
#include "adscmc/geometry.hpp"
#include "support.hpp"

using namespace adscmc;

namespace {

Mat2 ex1(double t) {
  return {std::cosh(t), std::sinh(t) - t * std::cosh(t), std::sinh(t), std::cosh(t) - t * std::sinh(t)};
}
Mat2 ex2(double t) {
  return {std::cos(t), -std::sin(t) + t * std::cos(t), std::sin(t), std::cos(t) + t * std::sin(t)};
}
Mat2 lower(double t) { return {1, 0, t, 1}; }

ScalarField1D field(const char* src, const char* var) { return ScalarField1D::parse(src, var); }

double max_error(const FrameCurve& c, Mat2 (*oracle)(double)) {
  auto nodes = c.nodes();
  double m = 0;
  for (std::size_t k = 0; k < nodes.size(); ++k) m = std::max(m, max_abs_diff(c.F[k], oracle(nodes[k])));
  return m;
}

}  // namespace

TEST_CASE("null coefficient examples") {
  CHECK(null_coefficient(Leg::Q, 2, 1) == Mat2{2, -4, 1, -2});
  CHECK(null_coefficient(Leg::RNu, 1, 1) == Mat2{1, 1, -1, -1});
  CHECK(null_coefficient(Leg::RMu, 0.5, 2) == Mat2{1, -0.5, 2, -1});

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-10, 10);
  for (int k = 0; k < 500; ++k) {
    double s = d(rng), w = d(rng);
    for (Leg leg : {Leg::Q, Leg::RMu, Leg::RNu}) {
      Mat2 c = null_coefficient(leg, s, w);
      CHECK(c.trace() == 0.0);
      double scale = std::max(std::abs(c.a * c.d), std::abs(c.b * c.c));
      CHECK(std::abs(c.det()) <= 4 * std::numeric_limits<double>::epsilon() * scale);
    }
  }
}

TEST_CASE("frame integration against closed forms") {
  FrameCurve one = integrate_frame(Leg::Q, field("u", "u"), field("1", "u"), 0, 1, 1000);
  CHECK(max_abs_diff(one.F.back(), ex1(1.0)) <= 1e-8);
  CHECK(std::abs(one.F.back().a - 1.5430806) <= 1e-7);
  CHECK(std::abs(one.F.back().b + 0.3678794) <= 1e-7);
  CHECK(std::abs(one.F.back().c - 1.1752012) <= 1e-7);
  CHECK(std::abs(one.F.back().d - 0.3678794) <= 1e-7);

  FrameCurve zero = integrate_frame(Leg::Q, field("0", "u"), field("1", "u"), -2, 2, 40);
  CHECK(max_error(zero, lower) <= 1e-14);

  FrameCurve anti = integrate_frame(Leg::Q, field("-u", "u"), field("1", "u"), -1.5, 1.5, 1500);
  CHECK(max_error(anti, ex2) <= 1e-8);
}

TEST_CASE("anchor defaults to zero and is clamped") {
  FrameCurve c = integrate_frame(Leg::Q, field("u", "u"), field("1", "u"), -1, 1, 200);
  CHECK(c.F[100] == Mat2::identity());
  FrameCurve d = integrate_frame(Leg::Q, field("u", "u"), field("1", "u"), 0.5, 1, 200);
  CHECK(d.F[0] == Mat2::identity());
}

TEST_CASE("left translation of the initial frame") {
  std::mt19937_64 rng(11);
  Mat2 g = testing::random_unimodular(rng);
  FrameCurve c = integrate_frame(Leg::Q, field("u", "u"), field("1", "u"), -1, 1, 400, GroupElement(g));
  auto nodes = c.nodes();
  double m = 0;
  for (std::size_t k = 0; k < nodes.size(); ++k) m = std::max(m, max_abs_diff(c.F[k], g * ex1(nodes[k])));
  CHECK(m <= 1e-9);
}

TEST_CASE("RK4 order") {
  auto err = [](int n) {
    FrameCurve c = integrate_frame(Leg::Q, field("u", "u"), field("1", "u"), -1.5, 1.5, n);
    return max_error(c, ex1);
  };
  double ratio = err(150) / err(300);
  CHECK(ratio >= 14);
  CHECK(ratio <= 18);
}

TEST_CASE("unimodularity drift") {
  FrameCurve c = integrate_frame(Leg::Q, field("u", "u"), field("1", "u"), -2, 2, 4000);
  CHECK(c.max_det_drift() <= 1e-10);
  FrameCurve n = integrate_frame(Leg::RNu, field("sin(v)", "v"), field("1 + v^2", "v"), -2, 2, 4000);
  CHECK(n.max_det_drift() <= 1e-10);
}

TEST_CASE("coarse steps report a step failure") {
  CHECK_THROWS_AS(integrate_frame(Leg::Q, field("u^3", "u"), field("exp(u)", "u"), -3, 3, 4), StepFailure);
}

TEST_CASE("nu leg integrates the inverse frame") {
  FrameCurve n = integrate_frame(Leg::RNu, field("0", "v"), field("1", "v"), -1, 1, 50);
  auto nodes = n.nodes();
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    CHECK(max_abs_diff(n.G[k], Mat2{1, nodes[k], 0, 1}) <= 1e-14);
    CHECK(max_abs_diff(n.F[k], Mat2{1, -nodes[k], 0, 1}) <= 1e-14);
  }
}

TEST_CASE("mu assembly of the B-scroll") {
  FrameCurve F1 = integrate_frame(Leg::Q, field("u", "u"), field("1", "u"), -1.5, 1.5, 1500);
  FrameCurve F2 = integrate_frame(Leg::RMu, field("0", "v"), field("1", "v"), -1.5, 1.5, 1500);
  SurfaceGridH31 s = assemble_mu(F1.decimate(15), F2.decimate(15));
  REQUIRE(s.nu == 101);
  REQUIRE(s.nv == 101);
  CHECK(s.assembly == Assembly::Mu);
  double m = 0;
  for (int i = 0; i < s.nu; ++i)
    for (int j = 0; j < s.nv; ++j) {
      double u = s.domain.u_at(i, s.nu), v = s.domain.v_at(j, s.nv);
      Mat2 phi{std::cosh(u), -(u - v) * std::cosh(u) + std::sinh(u), std::sinh(u),
               -(u - v) * std::sinh(u) + std::cosh(u)};
      m = std::max(m, max_abs_diff(s.at(i, j), phi));
    }
  CHECK(m <= 1e-8);
  CHECK(s.max_det_drift() <= 1e-8);

  // with -sinh u in the (1,2) slot the determinant would be cosh^2 u + sinh^2 u
  double u = 0.7, v = 0.2;
  Mat2 wrong{std::cosh(u), -(u - v) * std::cosh(u) - std::sinh(u), std::sinh(u),
             -(u - v) * std::sinh(u) + std::cosh(u)};
  CHECK(std::abs(wrong.det() - 1) > 0.5);
}

TEST_CASE("mu assembly of the horosphere") {
  FrameCurve F1 = integrate_frame(Leg::Q, field("0", "u"), field("1", "u"), -1, 1, 20);
  FrameCurve F2 = integrate_frame(Leg::RMu, field("0", "v"), field("1", "v"), -1, 1, 20);
  SurfaceGridH31 s = assemble_mu(F1, F2);
  for (int i = 0; i < s.nu; ++i)
    for (int j = 0; j < s.nv; ++j) {
      double u = s.domain.u_at(i, s.nu), v = s.domain.v_at(j, s.nv);
      CHECK(max_abs_diff(s.at(i, j), Mat2{1, v, u, 1 + u * v}) <= 1e-14);
      CHECK(s.mask[static_cast<std::size_t>(i) * s.nv + j] == 0);
    }
  CHECK(frame_metric(F1, F2, Assembly::Mu, 5, 7) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("assembly tags are enforced") {
  FrameCurve F1 = integrate_frame(Leg::Q, field("0", "u"), field("1", "u"), -1, 1, 20);
  FrameCurve mu = integrate_frame(Leg::RMu, field("0", "v"), field("1", "v"), -1, 1, 20);
  FrameCurve nu = integrate_frame(Leg::RNu, field("0", "v"), field("1", "v"), -1, 1, 20);
  CHECK_THROWS_AS(assemble_mu(F1, nu), TagMismatch);
  CHECK_THROWS_AS(assemble_nu(F1, mu), TagMismatch);
}

TEST_CASE("nu assembly with a constant second frame is degenerate") {
  FrameCurve F1 = integrate_frame(Leg::Q, field("u", "u"), field("1", "u"), -1, 1, 20);
  FrameCurve F2 = FrameCurve::from_samples(Leg::RNu, -1, 1, std::vector<Mat2>(21, Mat2::identity()));
  SurfaceGridH31 s = assemble_nu(F1, F2);
  for (int i = 0; i < s.nu; ++i)
    for (int j = 0; j < s.nv; ++j) {
      CHECK(max_abs_diff(s.at(i, j), F1.F[i]) <= 1e-15);
      CHECK(s.mask[static_cast<std::size_t>(i) * s.nv + j] == 1);
    }
}

TEST_CASE("nu assembly with a lower triangular second frame is degenerate") {
  // F2 = [[1, 0], [v, 1]]: psi = [[1, 0], [u - v, 1]]
  FrameCurve F1 = integrate_frame(Leg::Q, field("0", "u"), field("1", "u"), -1, 1, 20);
  std::vector<Mat2> samples;
  for (double v : uniform_nodes(-1, 1, 20)) samples.push_back(lower(v));
  FrameCurve F2 = FrameCurve::from_samples(Leg::RNu, -1, 1, samples);
  SurfaceGridH31 s = assemble_nu(F1, F2);
  for (int i = 0; i < s.nu; ++i)
    for (int j = 0; j < s.nv; ++j) {
      double u = s.domain.u_at(i, s.nu), v = s.domain.v_at(j, s.nv);
      CHECK(max_abs_diff(s.at(i, j), Mat2{1, 0, u - v, 1}) <= 1e-14);
      CHECK(s.mask[static_cast<std::size_t>(i) * s.nv + j] == 1);
    }
  CHECK(std::abs(frame_metric(F1, F2, Assembly::Nu, 10, 10)) <= 1e-12);
}

TEST_CASE("nu assembly of integrated zero data") {
  FrameCurve F1 = integrate_frame(Leg::Q, field("0", "u"), field("1", "u"), -1, 1, 20);
  FrameCurve F2 = integrate_frame(Leg::RNu, field("0", "v"), field("1", "v"), -1, 1, 20);
  SurfaceGridH31 s = assemble_nu(F1, F2);
  CHECK(s.assembly == Assembly::Nu);
  CHECK(max_abs_diff(s.at(20, 0), Mat2{1, -1, 1, 0}) <= 1e-14);
  CHECK(frame_metric(F1, F2, Assembly::Nu, 3, 4) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("frame metric of the Enneper data") {
  FrameCurve F1 = integrate_frame(Leg::Q, field("u", "u"), field("1", "u"), 0, 2, 200);
  FrameCurve F2 = integrate_frame(Leg::RMu, field("v", "v"), field("1", "v"), 0, 2, 200);
  CHECK(frame_metric(F1, F2, Assembly::Mu, 100, 100) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(frame_metric(F1, F2, Assembly::Mu, 50, 150) == doctest::Approx(std::pow(1 + 0.5 * 1.5, 2)).epsilon(1e-12));
}

TEST_CASE("assembled surfaces are conformal and match the frame metric") {
  struct Case {
    const char *q, *r;
    Leg leg;
  };
  for (Case c : {Case{"u", "v", Leg::RMu}, Case{"-u", "v", Leg::RMu}, Case{"u", "0", Leg::RMu},
                 Case{"0", "0", Leg::RMu}, Case{"u", "v", Leg::RNu}}) {
    CAPTURE(c.q);
    CAPTURE(c.r);
    FrameCurve F1 = integrate_frame(Leg::Q, field(c.q, "u"), field("1", "u"), 0.9, 1.0, 100);
    FrameCurve F2 = integrate_frame(c.leg, field(c.r, "v"), field("1", "v"), 0.2, 0.3, 100);
    SurfaceGridH31 s = c.leg == Leg::RMu ? assemble_mu(F1, F2) : assemble_nu(F1, F2);
    FundamentalData fd = fundamental_data(s);
    Assembly a = c.leg == Leg::RMu ? Assembly::Mu : Assembly::Nu;
    double conf = 0, metric = 0;
    for (int i = 1; i < s.nu - 1; ++i)
      for (int j = 1; j < s.nv - 1; ++j) {
        const auto& p = fd.at(i, j);
        REQUIRE(p.has_data());
        conf = std::max({conf, std::abs(p.conf_u), std::abs(p.conf_v)});
        metric = std::max(metric, std::abs(std::exp(p.omega) - frame_metric(F1, F2, a, i, j)));
      }
    CHECK(conf <= 1e-6);
    CHECK(metric <= 1e-6);
  }
}

TEST_CASE("assembled points stay on the hyperquadric") {
  FrameCurve F1 = integrate_frame(Leg::Q, field("sin(u)", "u"), field("cosh(u)", "u"), -1, 1, 400);
  FrameCurve F2 = integrate_frame(Leg::RMu, field("v^2", "v"), field("1", "v"), -1, 1, 400);
  SurfaceGridH31 s = assemble_mu(F1.decimate(4), F2.decimate(4));
  CHECK(s.max_det_drift() <= 1e-10);
}

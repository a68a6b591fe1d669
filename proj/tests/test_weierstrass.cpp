#include <doctest.h>

#include <cmath>
#include <random>

#include "adscmc/errors.hpp"
#include "adscmc/geometry.hpp"
#include "adscmc/weierstrass.hpp"

using namespace adscmc;

TEST_CASE("derivative examples") {
  auto d = weierstrass_data("0", "1", "0", "1");
  auto [pu, pv] = weierstrass_derivatives(d, 0.4, -0.3);
  CHECK(pu == Vec3{0.5, -0.5, 0.0});
  CHECK(pv == Vec3{-0.5, -0.5, 0.0});

  auto e = weierstrass_data("1", "2", "0", "1");
  CHECK(weierstrass_derivatives(e, 0, 0).first == Vec3{2.0, 0.0, -2.0});
}

TEST_CASE("null tangents and the metric factor") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> d(-2, 2);
  for (int k = 0; k < 200; ++k) {
    double q = d(rng), f = d(rng), r = d(rng), g = d(rng);
    auto data = weierstrass_data(std::to_string(q), std::to_string(f), std::to_string(r),
                                 std::to_string(g));
    auto [pu, pv] = weierstrass_derivatives(data, 0.1, 0.2);
    CHECK(std::abs(scalar_product(pu, pu)) <= 1e-12);
    CHECK(std::abs(scalar_product(pv, pv)) <= 1e-12);
    CHECK(std::abs(2 * scalar_product(pu, pv) - minimal_metric_factor(data, 0.1, 0.2)) <= 1e-10);
  }
}

TEST_CASE("metric factor values") {
  auto zero = weierstrass_data("0", "1", "0", "1");
  CHECK(minimal_metric_factor(zero, 0.3, 0.7) == 1.0);
  auto [pu, pv] = weierstrass_derivatives(zero, 0.3, 0.7);
  CHECK(2 * scalar_product(pu, pv) == 1.0);
  auto enn = weierstrass_data("u", "1", "v", "1");
  CHECK(minimal_metric_factor(enn, 1, 1) == 4.0);
  CHECK(minimal_metric_factor(enn, 1, -1) == 0.0);
}

TEST_CASE("integrated Enneper cousin matches its primitive") {
  auto enn = weierstrass_data("u", "1", "v", "1");
  Domain dom{-1.5, 1.5, -1.5, 1.5};
  SurfaceGridE31 s = integrate_minimal(enn, dom, 31, 31);
  // base point (0, 0) is the centre node
  CHECK(s.at(15, 15) == Vec3{0, 0, 0});
  for (int i = 0; i < 31; ++i) {
    double u = dom.u_at(i, 31);
    Vec3 A{u / 2 + u * u * u / 6, -u / 2 + u * u * u / 6, -u * u / 2};
    Vec3 p = s.at(i, 15);
    CHECK(std::abs(p.x1 - A.x1) <= 1e-12);
    CHECK(std::abs(p.x2 - A.x2) <= 1e-12);
    CHECK(std::abs(p.x3 - A.x3) <= 1e-12);
  }
  // degenerate curve 1 + uv = 0 crosses the grid at (1, -1)
  CHECK(s.mask[static_cast<std::size_t>(25) * 31 + 5] == 1);
}

TEST_CASE("base point is clamped into the domain") {
  auto enn = weierstrass_data("u", "1", "v", "1");
  SurfaceGridE31 s = integrate_minimal(enn, Domain{0.5, 1.5, 0.2, 1.0}, 11, 9);
  CHECK(s.at(0, 0) == Vec3{0, 0, 0});
}

TEST_CASE("mixed partial of the grid vanishes") {
  auto d = weierstrass_data("sin(u)", "1 + u^2", "cosh(v)", "2");
  double h = 1e-3;
  SurfaceGridE31 s = integrate_minimal(d, Domain{-0.2, 0.2, -0.2, 0.2}, 401, 401);
  double m = 0;
  for (int i = 1; i < 400; i += 7)
    for (int j = 1; j < 400; j += 7) {
      auto f = [&](int a, int b, double Vec3::*c) { return s.at(a, b).*c; };
      for (auto c : {&Vec3::x1, &Vec3::x2, &Vec3::x3}) {
        double uv = (f(i + 1, j + 1, c) - f(i + 1, j - 1, c) - f(i - 1, j + 1, c) + f(i - 1, j - 1, c)) /
                    (4 * h * h);
        m = std::max(m, std::abs(uv));
      }
    }
  CHECK(m <= 1e-8);
}

TEST_CASE("projected Gauss map recovers (q, r)") {
  auto enn = weierstrass_data("u", "1", "v", "1");
  auto [a, b] = projected_gauss_minimal(enn, 0.3, -0.2);
  CHECK(std::abs(a - 0.3) <= 1e-6);
  CHECK(std::abs(b + 0.2) <= 1e-6);
  auto zero = weierstrass_data("0", "1", "0", "1");
  auto [c, d] = projected_gauss_minimal(zero, 0.1, 0.9);
  CHECK(std::abs(c) <= 1e-15);
  CHECK(std::abs(d) <= 1e-15);
  CHECK_THROWS_AS(projected_gauss_minimal(enn, 1.0, -1.0), DegenerateMetric);
}

TEST_CASE("stereographic projection of the de Sitter plane") {
  auto [a, b] = stereographic_s21(Vec3{0, 0, -1}, Pole::Minus);
  CHECK(a == 0.0);
  CHECK(b == 0.0);
  CHECK_THROWS_AS(stereographic_s21(Vec3{0, 0, 1}, Pole::Minus), PoleError);
  auto [c, d] = stereographic_s21(Vec3{0, 1, 0}, Pole::Minus);
  CHECK(c == 1.0);
  CHECK(d == 1.0);
  CHECK_THROWS_AS(stereographic_s21(Vec3{0, 2, 0}, Pole::Minus), HyperquadricError);
}

TEST_CASE("normal projection of the grid recovers (q, r) away from degeneracy") {
  auto enn = weierstrass_data("u", "1", "v", "1");
  Domain dom{-0.6, 0.6, -0.6, 0.6};
  SurfaceGridE31 s = integrate_minimal(enn, dom, 241, 241);
  FundamentalData fd = fundamental_data(s, AmbientSpec::e31());
  double m = 0;
  for (int i = 1; i < 240; ++i)
    for (int j = 1; j < 240; ++j) {
      const auto& p = fd.at(i, j);
      REQUIRE(p.has_data());
      auto [a, b] = stereographic_s21(Vec3{p.N[0], p.N[1], p.N[2]}, Pole::Minus, Tolerances{});
      m = std::max({m, std::abs(a - dom.u_at(i, 241)), std::abs(b - dom.v_at(j, 241))});
    }
  CHECK(m <= 1e-5);
}

TEST_CASE("minimal surfaces have zero mean curvature") {
  for (const char* r : {"v", "0"}) {
    auto d = weierstrass_data("u", "1", r, "1");
    SurfaceGridE31 s = integrate_minimal(d, Domain{-0.5, 0.5, -0.5, 0.5}, 101, 101);
    GeometryReport rep = geometry_report(s, AmbientSpec::e31());
    CHECK(std::max(std::abs(rep.H_min), std::abs(rep.H_max)) <= 5e-5);
  }
}

TEST_CASE("quadrature failures are reported") {
  auto bad = weierstrass_data("1/u", "1", "0", "1");
  CHECK_THROWS(integrate_minimal(bad, Domain{-1, 1, -1, 1}, 11, 11));
}

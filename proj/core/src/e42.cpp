#include "adscmc/e42.hpp"

#include <algorithm>
#include <cmath>

#include "adscmc/errors.hpp"

namespace adscmc {

Vec4::Vec4(double x0, double x1, double x2, double x3) : x_{x0, x1, x2, x3} {
  for (double x : x_)
    if (!std::isfinite(x)) throw DomainError("Vec4 component is not finite");
}

double scalar_product(const Vec3& a, const Vec3& b) {
  return -a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3;
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.x2 * b.x3 - a.x3 * b.x2, a.x3 * b.x1 - a.x1 * b.x3, a.x1 * b.x2 - a.x2 * b.x1};
}

Mat2 Mat2::inverse(double tol) const {
  double dt = det();
  if (!(std::abs(dt) >= tol)) throw NotInvertible("matrix is not invertible");
  return {d / dt, -b / dt, -c / dt, a / dt};
}

double Mat2::max_abs() const {
  return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

Mat2 operator+(const Mat2& x, const Mat2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
Mat2 operator-(const Mat2& x, const Mat2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
Mat2 operator-(const Mat2& x) { return {-x.a, -x.b, -x.c, -x.d}; }
Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}
Mat2 operator*(double s, const Mat2& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }
Mat2 operator*(const Mat2& x, double s) { return s * x; }
Mat2& operator+=(Mat2& x, const Mat2& y) { return x = x + y; }

double max_abs_diff(const Mat2& x, const Mat2& y) { return (x - y).max_abs(); }

Mat2 to_mat(const Vec4& v) {
  return {v.x0() + v.x3(), v.x1() + v.x2(), -v.x1() + v.x2(), v.x0() - v.x3()};
}

Vec4 to_vec(const Mat2& m) {
  return Vec4(0.5 * (m.a + m.d), 0.5 * (m.b - m.c), 0.5 * (m.b + m.c), 0.5 * (m.a - m.d));
}

double scalar_product(const Mat2& u, const Mat2& v) {
  return 0.5 * ((u * v).trace() - u.trace() * v.trace());
}

double scalar_product(const Vec4& u, const Vec4& v) {
  return -u.x0() * v.x0() - u.x1() * v.x1() + u.x2() * v.x2() + u.x3() * v.x3();
}

GroupElement::GroupElement(const Mat2& m, const Tolerances& tol) : m_(m) {
  if (!(std::abs(m.det() - 1.0) <= tol.det))
    throw NotUnimodular("det = " + std::to_string(m.det()) + " is not 1 within tolerance");
}

GroupElement GroupElement::renormalize(const Mat2& m) {
  double dt = m.det();
  if (!(dt > 0.0)) throw NotUnimodular("cannot renormalize a matrix with det <= 0");
  GroupElement g;
  g.m_ = (1.0 / std::sqrt(dt)) * m;
  return g;
}

Mat2 mu_action(const GroupElement& g1, const GroupElement& g2, const Mat2& u) {
  return g1.mat() * u * g2.mat().transpose();
}

Mat2 nu_action(const GroupElement& g1, const GroupElement& g2, const Mat2& u) {
  return nu_action(g1.mat(), g2.mat(), u);
}

Mat2 nu_action(const Mat2& g1, const Mat2& g2, const Mat2& u, const Tolerances& tol) {
  return g1 * u * g2.inverse(tol.invertible);
}

Mat2 ad_action(const GroupElement& g, const Mat2& u, const Tolerances& tol) {
  if (!(std::abs(u.trace()) <= tol.trace)) throw NotTraceless("Ad action needs a traceless matrix");
  const Mat2& m = g.mat();
  return m * u * m.inverse(tol.invertible);
}

}  // namespace adscmc

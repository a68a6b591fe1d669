#ifndef ADSCMC_E42_HPP
#define ADSCMC_E42_HPP

#include <array>

#include "adscmc/tolerances.hpp"

namespace adscmc {

// Point of E^4_2, signature (-,-,+,+).
class Vec4 {
public:
  Vec4() = default;
  Vec4(double x0, double x1, double x2, double x3);

  double x0() const { return x_[0]; }
  double x1() const { return x_[1]; }
  double x2() const { return x_[2]; }
  double x3() const { return x_[3]; }
  double operator[](int i) const { return x_[i]; }
  const std::array<double, 4>& data() const { return x_; }

  friend bool operator==(const Vec4&, const Vec4&) = default;

private:
  std::array<double, 4> x_{0.0, 0.0, 0.0, 0.0};
};

// Point of E^3_1 as (x1, x2, x3), signature (-,+,+).
struct Vec3 {
  double x1 = 0.0, x2 = 0.0, x3 = 0.0;
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

double scalar_product(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);

struct Mat2 {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  double det() const { return a * d - b * c; }
  double trace() const { return a + d; }
  Mat2 transpose() const { return {a, c, b, d}; }
  // Throws NotInvertible when |det| < tol.
  Mat2 inverse(double tol = 1e-12) const;
  double max_abs() const;

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 operator+(const Mat2& x, const Mat2& y);
Mat2 operator-(const Mat2& x, const Mat2& y);
Mat2 operator-(const Mat2& x);
Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 operator*(double s, const Mat2& x);
Mat2 operator*(const Mat2& x, double s);
Mat2& operator+=(Mat2& x, const Mat2& y);
double max_abs_diff(const Mat2& x, const Mat2& y);

// x0*1 + x1*i + x2*j' + x3*k'
Mat2 to_mat(const Vec4& v);
Vec4 to_vec(const Mat2& m);

namespace basis {
inline Mat2 one() { return {1.0, 0.0, 0.0, 1.0}; }
inline Mat2 i() { return {0.0, 1.0, -1.0, 0.0}; }
inline Mat2 jp() { return {0.0, 1.0, 1.0, 0.0}; }
inline Mat2 kp() { return {1.0, 0.0, 0.0, -1.0}; }
}  // namespace basis

// <u,v> = (tr(uv) - tr u tr v) / 2
double scalar_product(const Mat2& u, const Mat2& v);
double scalar_product(const Vec4& u, const Vec4& v);

class GroupElement {
public:
  GroupElement() = default;
  explicit GroupElement(const Mat2& m, const Tolerances& tol = {});

  static GroupElement identity() { return GroupElement(); }
  // m / sqrt(det m); det must be positive.
  static GroupElement renormalize(const Mat2& m);

  const Mat2& mat() const { return m_; }
  operator const Mat2&() const { return m_; }

private:
  Mat2 m_ = Mat2::identity();
};

Mat2 mu_action(const GroupElement& g1, const GroupElement& g2, const Mat2& u);
Mat2 nu_action(const GroupElement& g1, const GroupElement& g2, const Mat2& u);
Mat2 nu_action(const Mat2& g1, const Mat2& g2, const Mat2& u, const Tolerances& tol = {});
Mat2 ad_action(const GroupElement& g, const Mat2& u, const Tolerances& tol = {});

}  // namespace adscmc

#endif

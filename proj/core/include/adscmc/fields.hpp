#ifndef ADSCMC_FIELDS_HPP
#define ADSCMC_FIELDS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adscmc/expr.hpp"

namespace adscmc {

// Uniform samples t0, t0+dt, ..., interpolated by 4-point Lagrange cubics.
struct Samples1D {
  double t0 = 0.0;
  double dt = 1.0;
  std::vector<double> values;
  double t_end() const { return t0 + dt * static_cast<double>(values.size() - 1); }
};

class ScalarField1D {
public:
  ScalarField1D() : ScalarField1D(0.0) {}
  ScalarField1D(double constant);
  // One-variable expression; `var` is the only admitted identifier.
  static ScalarField1D parse(std::string_view src, const std::string& var);
  static ScalarField1D from_expr(Expr e);
  static ScalarField1D sampled(double t0, double dt, std::vector<double> values);

  // Throws DomainError outside a sampled range, EvaluationError on non-finite results.
  double operator()(double t) const;
  // Analytic for expressions, 4th-order differences of the samples otherwise.
  double derivative(double t) const;

  bool is_sampled() const { return samples_.has_value(); }
  const Expr* expr() const { return samples_ ? nullptr : &expr_; }
  const Samples1D* samples() const { return samples_ ? &*samples_ : nullptr; }
  std::string describe() const;

private:
  Expr expr_;
  std::optional<Samples1D> samples_;
  std::vector<double> dsamples_;
};

struct Samples2D {
  double u0 = 0.0, du = 1.0, v0 = 0.0, dv = 1.0;
  int nu = 0, nv = 0;
  std::vector<double> values;  // row-major, index i*nv + j
};

class ScalarField2D {
public:
  ScalarField2D() : ScalarField2D(0.0) {}
  ScalarField2D(double constant);
  // Expression in the variables u, v.
  static ScalarField2D parse(std::string_view src);
  static ScalarField2D from_expr(Expr e);
  static ScalarField2D sampled(Samples2D s);

  double operator()(double u, double v) const;
  double du(double u, double v) const;
  double dv(double u, double v) const;

  bool is_sampled() const { return samples_.has_value(); }
  const Expr* expr() const { return samples_ ? nullptr : &expr_; }
  std::string describe() const;

private:
  Expr expr_;
  std::optional<Samples2D> samples_;
  std::vector<double> su_, sv_;
};

// Lagrange cubic through the 4 nearest nodes (fewer when the table is short).
double interpolate_uniform(const std::vector<double>& y, double t0, double dt, double t);
// Node derivatives by 4th-order differences, one-sided at the ends.
std::vector<double> differentiate_uniform(const std::vector<double>& y, double dt);

}  // namespace adscmc

#endif

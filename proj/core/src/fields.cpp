#include "adscmc/fields.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "adscmc/errors.hpp"

namespace adscmc {

namespace {

int stencil_start(int n, int m, double x) {
  int k = static_cast<int>(std::floor(x)) - (m / 2 - 1);
  return std::clamp(k, 0, n - m);
}

void check_range(double t, double lo, double hi, double dt) {
  double slack = 1e-9 * std::abs(dt);
  if (!(t >= lo - slack && t <= hi + slack))
    throw DomainError("t = " + std::to_string(t) + " outside sampled range [" +
                      std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

// Weights of the Lagrange polynomial through nodes k..k+m-1 at position x
// measured in units of dt from the first node.
void lagrange_weights(int m, double x, double* w) {
  for (int i = 0; i < m; ++i) {
    double p = 1.0;
    for (int j = 0; j < m; ++j)
      if (j != i) p *= (x - j) / static_cast<double>(i - j);
    w[i] = p;
  }
}

double finite_or_throw(double v, const char* what) {
  if (!std::isfinite(v)) throw EvaluationError(std::string("non-finite value from ") + what);
  return v;
}

}  // namespace

double interpolate_uniform(const std::vector<double>& y, double t0, double dt, double t) {
  int n = static_cast<int>(y.size());
  double x = (t - t0) / dt;
  int m = std::min(n, 4);
  int k = stencil_start(n, m, x);
  double w[4];
  lagrange_weights(m, x - k, w);
  double s = 0.0;
  for (int i = 0; i < m; ++i) s += w[i] * y[k + i];
  return s;
}

std::vector<double> differentiate_uniform(const std::vector<double>& y, double dt) {
  int n = static_cast<int>(y.size());
  std::vector<double> d(n, 0.0);
  if (n < 5) {
    for (int i = 0; i < n; ++i) {
      int a = std::max(i - 1, 0), b = std::min(i + 1, n - 1);
      d[i] = (y[b] - y[a]) / (dt * (b - a));
    }
    return d;
  }
  for (int i = 0; i < n; ++i) {
    if (i >= 2 && i <= n - 3) {
      d[i] = (y[i - 2] - 8.0 * y[i - 1] + 8.0 * y[i + 1] - y[i + 2]) / (12.0 * dt);
    } else {
      // five-point one-sided stencil at offset s within nodes k..k+4
      int k = i < 2 ? 0 : n - 5;
      double s = i - k;
      double w[5];
      for (int p = 0; p < 5; ++p) {
        double sum = 0.0;
        for (int q = 0; q < 5; ++q) {
          if (q == p) continue;
          double prod = 1.0 / (p - q);
          for (int r = 0; r < 5; ++r)
            if (r != p && r != q) prod *= (s - r) / static_cast<double>(p - r);
          sum += prod;
        }
        w[p] = sum;
      }
      double acc = 0.0;
      for (int p = 0; p < 5; ++p) acc += w[p] * y[k + p];
      d[i] = acc / dt;
    }
  }
  return d;
}

// ---- 1D ----

ScalarField1D::ScalarField1D(double constant) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", std::abs(constant));
  expr_ = parse_expression(std::string(constant < 0 ? "-" : "") + buf, {"t"}, false);
}

ScalarField1D ScalarField1D::parse(std::string_view src, const std::string& var) {
  return from_expr(parse_expression(src, {var}));
}

ScalarField1D ScalarField1D::from_expr(Expr e) {
  if (e.vars().size() != 1) throw DomainError("one-variable expression expected");
  ScalarField1D f;
  f.expr_ = std::move(e);
  return f;
}

ScalarField1D ScalarField1D::sampled(double t0, double dt, std::vector<double> values) {
  if (values.size() < 2) throw DomainError("sampled field needs at least 2 values");
  if (!(dt > 0.0)) throw DomainError("sampled field needs dt > 0");
  for (double v : values)
    if (!std::isfinite(v)) throw DomainError("sampled field has a non-finite value");
  ScalarField1D f;
  f.dsamples_ = differentiate_uniform(values, dt);
  f.samples_ = Samples1D{t0, dt, std::move(values)};
  return f;
}

double ScalarField1D::operator()(double t) const {
  if (samples_) {
    check_range(t, samples_->t0, samples_->t_end(), samples_->dt);
    return finite_or_throw(interpolate_uniform(samples_->values, samples_->t0, samples_->dt, t),
                           "sampled field");
  }
  double a[1] = {t};
  return expr_.eval(a);
}

double ScalarField1D::derivative(double t) const {
  if (samples_) {
    check_range(t, samples_->t0, samples_->t_end(), samples_->dt);
    return interpolate_uniform(dsamples_, samples_->t0, samples_->dt, t);
  }
  double a[1] = {t};
  return expr_.eval_d(a, 0).second;
}

std::string ScalarField1D::describe() const {
  if (samples_)
    return "sampled(" + std::to_string(samples_->values.size()) + " on [" +
           std::to_string(samples_->t0) + ", " + std::to_string(samples_->t_end()) + "])";
  return expr_.print();
}

// ---- 2D ----

ScalarField2D::ScalarField2D(double constant) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", std::abs(constant));
  expr_ = parse_expression(std::string(constant < 0 ? "-" : "") + buf, {"u", "v"}, false);
}

ScalarField2D ScalarField2D::parse(std::string_view src) {
  return from_expr(parse_expression(src, {"u", "v"}));
}

ScalarField2D ScalarField2D::from_expr(Expr e) {
  if (e.vars().size() != 2) throw DomainError("two-variable expression expected");
  ScalarField2D f;
  f.expr_ = std::move(e);
  return f;
}

ScalarField2D ScalarField2D::sampled(Samples2D s) {
  if (s.nu < 2 || s.nv < 2 || s.values.size() != static_cast<std::size_t>(s.nu) * s.nv)
    throw DomainError("sampled 2D field needs nu, nv >= 2 and nu*nv values");
  if (!(s.du > 0.0) || !(s.dv > 0.0)) throw DomainError("sampled 2D field needs positive spacing");
  ScalarField2D f;
  f.su_.assign(s.values.size(), 0.0);
  f.sv_.assign(s.values.size(), 0.0);
  std::vector<double> line;
  for (int j = 0; j < s.nv; ++j) {
    line.resize(s.nu);
    for (int i = 0; i < s.nu; ++i) line[i] = s.values[i * s.nv + j];
    auto d = differentiate_uniform(line, s.du);
    for (int i = 0; i < s.nu; ++i) f.su_[i * s.nv + j] = d[i];
  }
  for (int i = 0; i < s.nu; ++i) {
    line.assign(s.values.begin() + i * s.nv, s.values.begin() + (i + 1) * s.nv);
    auto d = differentiate_uniform(line, s.dv);
    for (int j = 0; j < s.nv; ++j) f.sv_[i * s.nv + j] = d[j];
  }
  f.samples_ = std::move(s);
  return f;
}

namespace {

double bicubic(const Samples2D& s, const std::vector<double>& vals, double u, double v) {
  check_range(u, s.u0, s.u0 + s.du * (s.nu - 1), s.du);
  check_range(v, s.v0, s.v0 + s.dv * (s.nv - 1), s.dv);
  double x = (u - s.u0) / s.du, y = (v - s.v0) / s.dv;
  int mu = std::min(s.nu, 4), mv = std::min(s.nv, 4);
  int ku = stencil_start(s.nu, mu, x), kv = stencil_start(s.nv, mv, y);
  double wu[4], wv[4];
  lagrange_weights(mu, x - ku, wu);
  lagrange_weights(mv, y - kv, wv);
  double acc = 0.0;
  for (int a = 0; a < mu; ++a)
    for (int b = 0; b < mv; ++b) acc += wu[a] * wv[b] * vals[(ku + a) * s.nv + kv + b];
  return finite_or_throw(acc, "sampled field");
}

}  // namespace

double ScalarField2D::operator()(double u, double v) const {
  if (samples_) return bicubic(*samples_, samples_->values, u, v);
  double a[2] = {u, v};
  return expr_.eval(a);
}

double ScalarField2D::du(double u, double v) const {
  if (samples_) return bicubic(*samples_, su_, u, v);
  double a[2] = {u, v};
  return expr_.eval_d(a, 0).second;
}

double ScalarField2D::dv(double u, double v) const {
  if (samples_) return bicubic(*samples_, sv_, u, v);
  double a[2] = {u, v};
  return expr_.eval_d(a, 1).second;
}

std::string ScalarField2D::describe() const {
  if (samples_)
    return "sampled(" + std::to_string(samples_->nu) + "x" + std::to_string(samples_->nv) + ")";
  return expr_.print();
}

}  // namespace adscmc

#include "adscmc/ode.hpp"

#include <algorithm>

namespace adscmc {

Mat2 rk4_right(const Mat2& F, double t, double h, const CoeffFn& C) {
  Mat2 c0 = C(t), c1 = C(t + 0.5 * h), c2 = C(t + h);
  Mat2 k1 = F * c0;
  Mat2 k2 = (F + (0.5 * h) * k1) * c1;
  Mat2 k3 = (F + (0.5 * h) * k2) * c1;
  Mat2 k4 = (F + h * k3) * c2;
  return F + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

Mat2 rk4_left(const Mat2& G, double t, double h, const CoeffFn& C) {
  Mat2 c0 = C(t), c1 = C(t + 0.5 * h), c2 = C(t + h);
  Mat2 k1 = c0 * G;
  Mat2 k2 = c1 * (G + (0.5 * h) * k1);
  Mat2 k3 = c1 * (G + (0.5 * h) * k2);
  Mat2 k4 = c2 * (G + h * k3);
  return G + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

std::vector<Mat2> march(const std::vector<double>& nodes, double anchor, const Mat2& y0,
                        const StepFn& step) {
  std::vector<Mat2> out(nodes.size());
  int n = static_cast<int>(nodes.size());
  int up = static_cast<int>(std::lower_bound(nodes.begin(), nodes.end(), anchor) - nodes.begin());
  Mat2 y = y0;
  double prev = anchor;
  for (int k = up; k < n; ++k) {
    if (nodes[k] != prev) y = step(y, prev, nodes[k]);
    out[k] = y;
    prev = nodes[k];
  }
  y = y0;
  prev = anchor;
  for (int k = up - 1; k >= 0; --k) {
    if (nodes[k] != prev) y = step(y, prev, nodes[k]);
    out[k] = y;
    prev = nodes[k];
  }
  return out;
}

StepFn rk4_stepper(const CoeffFn& C, bool left, int substeps) {
  int m = std::max(substeps, 1);
  return [C, left, m](const Mat2& y0, double a, double b) {
    double h = (b - a) / m;
    Mat2 y = y0;
    for (int s = 0; s < m; ++s) {
      double t = a + h * s;
      y = left ? rk4_left(y, t, h, C) : rk4_right(y, t, h, C);
    }
    return y;
  };
}

}  // namespace adscmc

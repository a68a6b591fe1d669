#include "adscmc/grid.hpp"

#include <algorithm>
#include <cmath>

#include "adscmc/errors.hpp"

namespace adscmc {

void Domain::validate() const {
  if (!(u0 < u1) || !(v0 < v1) || !std::isfinite(u0) || !std::isfinite(u1) ||
      !std::isfinite(v0) || !std::isfinite(v1))
    throw DomainError("degenerate domain rectangle");
}

std::vector<double> uniform_nodes(double t0, double t1, int n) {
  std::vector<double> t(n + 1);
  for (int k = 0; k <= n; ++k) t[k] = t0 + (t1 - t0) * k / n;
  t[n] = t1;
  return t;
}

const char* to_string(Assembly a) {
  switch (a) {
    case Assembly::Mu: return "mu";
    case Assembly::Nu: return "nu";
    case Assembly::None: return "none";
  }
  return "none";
}

double SurfaceGridH31::max_det_drift(bool skip_masked) const {
  double m = 0.0;
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (skip_masked && !mask.empty() && mask[k]) continue;
    m = std::max(m, std::abs(points[k].det() - 1.0));
  }
  return m;
}

}  // namespace adscmc

#ifndef ADSCMC_GRID_HPP
#define ADSCMC_GRID_HPP

#include <cstdint>
#include <vector>

#include "adscmc/e42.hpp"

namespace adscmc {

struct Domain {
  double u0 = -1.5, u1 = 1.5, v0 = -1.5, v1 = 1.5;

  // Throws DomainError unless u0 < u1 and v0 < v1.
  void validate() const;
  double u_at(int i, int nu) const { return nu > 1 ? u0 + (u1 - u0) * i / (nu - 1) : u0; }
  double v_at(int j, int nv) const { return nv > 1 ? v0 + (v1 - v0) * j / (nv - 1) : v0; }
  friend bool operator==(const Domain&, const Domain&) = default;
};

// Nodes t0 + k (t1 - t0) / n, k = 0..n.
std::vector<double> uniform_nodes(double t0, double t1, int n);

enum class Assembly { Mu, Nu, None };
const char* to_string(Assembly a);

// Surface in H^3_1(-1) as a (u,v) grid of unimodular matrices.
struct SurfaceGridH31 {
  Domain domain;
  int nu = 0, nv = 0;
  std::vector<Mat2> points;       // index i*nv + j
  Assembly assembly = Assembly::None;
  std::vector<std::uint8_t> mask;  // 1 = degenerate
  std::vector<double> metric;      // frame metric coefficient when known, else empty

  const Mat2& at(int i, int j) const { return points[static_cast<std::size_t>(i) * nv + j]; }
  double hu() const { return (domain.u1 - domain.u0) / (nu - 1); }
  double hv() const { return (domain.v1 - domain.v0) / (nv - 1); }
  double max_det_drift(bool skip_masked = true) const;
};

struct SurfaceGridE31 {
  Domain domain;
  int nu = 0, nv = 0;
  std::vector<Vec3> points;
  std::vector<std::uint8_t> mask;

  const Vec3& at(int i, int j) const { return points[static_cast<std::size_t>(i) * nv + j]; }
  double hu() const { return (domain.u1 - domain.u0) / (nu - 1); }
  double hv() const { return (domain.v1 - domain.v0) / (nv - 1); }
};

}  // namespace adscmc

#endif

#ifndef ADSCMC_GEOMETRY_HPP
#define ADSCMC_GEOMETRY_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "adscmc/e42.hpp"
#include "adscmc/grid.hpp"
#include "adscmc/tolerances.hpp"

namespace adscmc {

enum class AmbientKind { H31, E31 };
const char* to_string(AmbientKind k);

struct AmbientSpec {
  AmbientKind kind = AmbientKind::H31;
  double Kbar = -1.0;
  bool flip = false;  // reverse the normal

  static AmbientSpec h31(bool flip = false) { return {AmbientKind::H31, -1.0, flip}; }
  static AmbientSpec e31(bool flip = false) { return {AmbientKind::E31, 0.0, flip}; }
  int dim() const { return kind == AmbientKind::H31 ? 4 : 3; }
};

// Ambient vector; E31 uses the first three slots as (x1, x2, x3).
using AVec = std::array<double, 4>;

enum class PointLevel : std::uint8_t {
  Boundary,    // no derivative data
  Degenerate,  // 2<phi_u, phi_v> at or below tol.degen, or masked input
  Interior,    // first and second derivatives, H, Q, R, K
  Deep,        // also normal derivatives: K_shape, second form residual
};

struct FundamentalPoint {
  PointLevel level = PointLevel::Boundary;
  double omega = 0.0;
  AVec N{0.0, 0.0, 0.0, 0.0};
  double H = 0.0, Q = 0.0, R = 0.0;
  double K = 0.0;        // Kbar + H^2 - 4 e^{-2 omega} Q R
  double K_shape = 0.0;  // Kbar + det(II) / det(I)
  double II_xx = 0.0, II_xy = 0.0, II_yy = 0.0;  // u = x + y, v = -x + y
  double conf_u = 0.0, conf_v = 0.0;  // <phi_u, phi_u>, <phi_v, phi_v>
  double gauss_eq = 0.0;              // K from the Gauss relation minus K_shape
  double sff = 0.0;                   // max |II - (Q du^2 + R dv^2 + H I)|

  bool has_data() const { return level == PointLevel::Interior || level == PointLevel::Deep; }
  bool deep() const { return level == PointLevel::Deep; }
};

struct FundamentalData {
  AmbientSpec ambient;
  Domain domain;
  int nu = 0, nv = 0;
  std::vector<FundamentalPoint> points;

  const FundamentalPoint& at(int i, int j) const {
    return points[static_cast<std::size_t>(i) * nv + j];
  }
  FundamentalPoint& at(int i, int j) { return points[static_cast<std::size_t>(i) * nv + j]; }
};

// Throws DegenerateMetric at the first degenerate point when strict, and
// NormalSolveError where the tangent system is rank deficient.
FundamentalData fundamental_data(const SurfaceGridH31& s, const AmbientSpec& amb = {},
                                 const Tolerances& tol = {}, bool strict = false);
FundamentalData fundamental_data(const SurfaceGridE31& s, const AmbientSpec& amb = AmbientSpec::e31(),
                                 const Tolerances& tol = {}, bool strict = false);

// Recomputes II from -<d phi, dN> with the normals stored in fd.
std::vector<double> second_form_residual(const FundamentalData& fd, const SurfaceGridH31& s);
std::vector<double> second_form_residual(const FundamentalData& fd, const SurfaceGridE31& s);

std::vector<std::uint8_t> umbilic_detect(const FundamentalData& fd, double tol);

std::pair<double, double> lawson_shift(double H, double Kbar, double c);

// S = I^{-1} II in (x, y) coordinates.
Mat2 shape_operator(const FundamentalPoint& p);
struct ShiftedShape {
  Mat2 S;
  double Kbar = 0.0;
};
ShiftedShape lawson_shift_shape(const Mat2& S, double Kbar, double c);

struct ResidualStat {
  std::string name;
  double max = 0.0, mean = 0.0;
};

struct GeometryReport {
  AmbientSpec ambient;
  Domain domain;
  int nu = 0, nv = 0;
  std::size_t stat_points = 0;  // points entering the statistics
  std::vector<ResidualStat> residuals;  // conf_u, conf_v, gauss_eq, sff
  double min_metric = 0.0;              // min e^omega over interior points
  double modal_H = 0.0;
  double H_deviation = 0.0;  // max |H - modal_H|
  double H_min = 0.0, H_max = 0.0;
  double umbilic_fraction = 0.0;
  FundamentalData fd;

  const ResidualStat& residual(const std::string& name) const;
};

// Statistics use interior points with e^omega >= tol.stat_metric_floor.
GeometryReport geometry_report(const FundamentalData& fd, const Tolerances& tol = {});
GeometryReport geometry_report(const SurfaceGridH31& s, const AmbientSpec& amb = {},
                               const Tolerances& tol = {});
GeometryReport geometry_report(const SurfaceGridE31& s, const AmbientSpec& amb = AmbientSpec::e31(),
                               const Tolerances& tol = {});

// Points of fd that enter report statistics.
bool in_statistics(const FundamentalPoint& p, const Tolerances& tol);

}  // namespace adscmc

#endif

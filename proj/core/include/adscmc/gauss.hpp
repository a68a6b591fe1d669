#ifndef ADSCMC_GAUSS_HPP
#define ADSCMC_GAUSS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "adscmc/bryant.hpp"
#include "adscmc/e42.hpp"
#include "adscmc/geometry.hpp"
#include "adscmc/grid.hpp"
#include "adscmc/lax.hpp"
#include "adscmc/tolerances.hpp"
#include "adscmc/weierstrass.hpp"

namespace adscmc {

// Chart of a rank-one representative a b^t: (a1/a2, b1/b2).
struct ChartPoint {
  double g1 = 0.0, g2 = 0.0;
  bool ok = false;
};
ChartPoint null_chart(const Mat2& m, const Tolerances& tol = {});
// a1/a2 and b1/b2 separately; NaN at a pole.
double column_ratio(const Mat2& m, const Tolerances& tol = {});
double row_ratio(const Mat2& m, const Tolerances& tol = {});

struct GaussMapGrid {
  Domain domain;
  int nu = 0, nv = 0;
  Pole sign = Pole::Plus;
  std::string chart;              // "surface", "lax-mu", "lax-nu", "bryant-mu", ...
  std::vector<Mat2> rep;          // null-line representative
  std::vector<double> g1, g2;     // chart coordinates
  std::vector<std::uint8_t> mask; // 1 = no value

  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * nv + j; }
  bool valid(int i, int j) const { return mask[index(i, j)] == 0; }
  // Largest coordinate difference from the first valid point.
  double spread() const;
};

// Representative mat(phi +- N) at points where fd has data.
GaussMapGrid hyperbolic_gauss(const SurfaceGridH31& s, const FundamentalData& fd, Pole sign,
                              const Tolerances& tol = {});

// Straight from frame entries.
//   mu plus (F11/F13, F21/F23), mu minus (F12/F14, F22/F24),
//   nu plus (F11/F13, -F24/F22), nu minus (F12/F14, -F23/F21),
// where F1 = [[F11, F12], [F13, F14]] and likewise for the second frame.
GaussMapGrid frame_gauss_coordinates(const LaxFrames& frames, Pole sign,
                                     const Tolerances& tol = {});
GaussMapGrid frame_gauss_coordinates(const FrameCurve& F1, const FrameCurve& F2, Pole sign,
                                     Assembly action, const Tolerances& tol = {});

enum class Holomorphy { Constant, Holomorphic, Antiholomorphic, Neither };
const char* to_string(Holomorphy h);

struct HolomorphyCheck {
  int nu = 0, nv = 0;
  Pole sign = Pole::Plus;
  // Per point: the two u-expressions, the two v-expressions and the residuals
  // of each against its closed form. NaN on the boundary ring.
  std::vector<double> u1, u2, v1, v2;
  std::vector<double> res_u1, res_u2, res_v1, res_v2;
  std::vector<Holomorphy> cls;
  Holomorphy overall = Holomorphy::Neither;  // common class of all interior points
  double max_residual = 0.0;
};

// Mu-action Lax frames only. (omega, H, Q, R) come from the Lax data or from
// fundamental data of the assembled surface.
HolomorphyCheck holomorphicity_check(const LaxFrames& frames, const GmcData& data, Pole sign,
                                     const Tolerances& tol = {});
HolomorphyCheck holomorphicity_check(const LaxFrames& frames, const FundamentalData& fd, Pole sign,
                                     const Tolerances& tol = {});

struct ConformalityCheck {
  std::vector<double> coefficient;  // du dv coefficient of d sigma^2
  std::vector<double> residual;     // |coefficient + K e^omega|
  double max_residual = 0.0;        // over points in the statistics
  double max_coefficient = 0.0;
};

ConformalityCheck gauss_conformality_check(const SurfaceGridH31& s, const FundamentalData& fd,
                                           Pole sign, const Tolerances& tol = {});

// Charts of the null tangent directions; first = plus pair, second = minus pair.
std::pair<GaussMapGrid, GaussMapGrid> generalized_gauss(const SurfaceGridH31& s,
                                                        const FundamentalData& fd,
                                                        const Tolerances& tol = {});

// max |a - b| / max(1, |a|, |b|) over points valid in both
double max_chart_difference(const GaussMapGrid& a, const GaussMapGrid& b);

}  // namespace adscmc

#endif

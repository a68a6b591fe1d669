#ifndef ADSCMC_LAX_HPP
#define ADSCMC_LAX_HPP

#include <string>
#include <vector>

#include "adscmc/bryant.hpp"
#include "adscmc/e42.hpp"
#include "adscmc/fields.hpp"
#include "adscmc/grid.hpp"
#include "adscmc/tolerances.hpp"
#include "adscmc/weierstrass.hpp"

namespace adscmc {

// omega(u,v), constant H, Q(u), R(v)
struct GmcData {
  ScalarField2D omega;
  double H = 1.0;
  ScalarField1D Q, R;
};

struct GmcResidual {
  int nu = 0, nv = 0;
  std::vector<double> gauss;     // omega_uv + e^omega (H^2-1)/2 - 2 Q R e^-omega
  std::vector<double> codazzi;   // max(|H_u - 2e^-omega Q_v|, |H_v - 2e^-omega R_u|)
  double max_abs() const;
};

// omega_uv as the 4th-order central difference of omega_u in v with step fd_step.
GmcResidual gmc_residual(const GmcData& data, const Domain& domain, int nu, int nv,
                         double fd_step = 1e-3);

struct LaxMatrices {
  Mat2 U1, V1, U2, V2;
};

LaxMatrices lax_matrices(const GmcData& data, Assembly action, double u, double v);

struct LaxFrames {
  Domain domain;
  int nu = 0, nv = 0;
  Assembly action = Assembly::Mu;
  std::vector<Mat2> phi1, phi2;  // index i*nv + j
  double path_defect = 0.0;      // max over the grid, u-first sweep vs v-first sweep
  std::vector<std::string> warnings;

  const Mat2& p1(int i, int j) const { return phi1[static_cast<std::size_t>(i) * nv + j]; }
  const Mat2& p2(int i, int j) const { return phi2[static_cast<std::size_t>(i) * nv + j]; }
  double max_det_drift() const;
};

struct LaxOptions {
  GroupElement init1, init2;
  double anchor_u = 0.0, anchor_v = 0.0;  // clamped into the domain
  double max_step = 2e-3;                 // RK4 substeps per grid cell chosen from this
};

// Canonical sweep: along v = anchor_v in u, then along every column in v.
// Throws CompatibilityError when the GMC residual exceeds tol.compat.
LaxFrames integrate_lax(const GmcData& data, Assembly action, const Domain& domain, int nu, int nv,
                        const LaxOptions& opts = {}, const Tolerances& tol = {});

// Phi1 Phi2^t (mu) or Phi1 Phi2^{-1} (nu). Mask flags e^omega below tol.degen.
SurfaceGridH31 assemble_lax(const LaxFrames& frames, const GmcData& data,
                            const Tolerances& tol = {});

// q = a/c, f = c from F1^{-1} F1' = [[a, b], [c, -a]], and likewise for F2.
// Throws DivisionError where the divisor vanishes.
WeierstrassData extract_weierstrass_data(const FrameCurve& F1, const FrameCurve& F2);
// max |a^2 + b c| over both legs
double extraction_nullity_defect(const FrameCurve& F1, const FrameCurve& F2);

}  // namespace adscmc

#endif

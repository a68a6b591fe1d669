#ifndef ADSCMC_BRYANT_HPP
#define ADSCMC_BRYANT_HPP

#include <vector>

#include "adscmc/e42.hpp"
#include "adscmc/fields.hpp"
#include "adscmc/grid.hpp"
#include "adscmc/tolerances.hpp"

namespace adscmc {

// Q: F1 along u. RMu: F2 along v for the mu assembly. RNu: F2 along v for nu.
enum class Leg { Q, RMu, RNu };
const char* to_string(Leg leg);

// Q, RMu: [[s, -s^2], [1, -s]] w.   RNu: [[s, 1], [-s^2, -s]] w.
Mat2 null_coefficient(Leg leg, double s, double w);

// Sampled frame along one leg at nodes t0 + k (t1 - t0) / n, k = 0..n.
struct FrameCurve {
  Leg leg = Leg::Q;
  double t0 = 0.0, t1 = 1.0;
  int n = 0;
  std::vector<Mat2> F;      // the frame
  std::vector<Mat2> G;      // RNu only: F^{-1}
  std::vector<Mat2> coeff;  // F^{-1} F' (Q, RMu) or G' G^{-1} (RNu), per unit parameter

  std::vector<double> nodes() const { return uniform_nodes(t0, t1, n); }
  double step() const { return (t1 - t0) / n; }
  double max_det_drift() const;
  // Every stride-th node; n must be divisible by stride.
  FrameCurve decimate(int stride) const;
  // Coefficients are recovered by 4th-order differences of the samples.
  static FrameCurve from_samples(Leg leg, double t0, double t1, std::vector<Mat2> F);
};

// RK4 on dF = F C for Q/RMu, on dG = C G (G = F^{-1}) for RNu. F equals `init`
// at `anchor` (clamped into [t0, t1]). Throws StepFailure when det drifts
// beyond tol.det_step.
FrameCurve integrate_frame(Leg leg, const ScalarField1D& s, const ScalarField1D& w, double t0,
                           double t1, int n, const GroupElement& init = {},
                           const Tolerances& tol = {}, double anchor = 0.0, int substeps = 1);

// F1(u_i) F2(v_j)^t
SurfaceGridH31 assemble_mu(const FrameCurve& F1, const FrameCurve& F2, const Tolerances& tol = {});
// F1(u_i) F2(v_j)^{-1}
SurfaceGridH31 assemble_nu(const FrameCurve& F1, const FrameCurve& F2, const Tolerances& tol = {});

// -det of the summed Maurer-Cartan coefficients: the e^omega of ds^2 = e^omega du dv.
double frame_metric(const FrameCurve& F1, const FrameCurve& F2, Assembly assembly, int i, int j);

}  // namespace adscmc

#endif

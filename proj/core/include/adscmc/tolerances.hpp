#ifndef ADSCMC_TOLERANCES_HPP
#define ADSCMC_TOLERANCES_HPP

namespace adscmc {

// Every verification call takes one of these. Defaults are the pinned values.
struct Tolerances {
  double det = 1e-9;            // GroupElement unimodularity
  double det_surface = 1e-8;    // assembled grid points
  double det_step = 1e-6;       // integrator step failure
  double invertible = 1e-12;
  double trace = 1e-12;
  double degen = 1e-8;          // metric coefficient degeneracy
  double compat = 1e-5;         // GMC residual admitted by integrate_lax
  double path = 1e-6;           // Lax path-independence defect
  double hol = 1e-4;            // holomorphicity classification
  double umbilic = 1e-6;        // |Q|, |R| below this
  double mean_curvature = 5e-5; // |H - H_expected|
  double gauss_eq = 1e-5;
  double identity = 1e-5;       // frame identities
  double conformal_gauss = 1e-4;
  double chart_pole = 1e-10;
  double chart_agreement = 1e-6; // two charts of the same null line
  double hyperquadric = 1e-8;
  double sphere = 1e-9;         // S^2_1 membership
  double quadrature = 1e-12;
  // residual statistics skip points with e^omega below this
  double stat_metric_floor = 0.1;
};

}  // namespace adscmc

#endif

#ifndef ADSCMC_ODE_HPP
#define ADSCMC_ODE_HPP

#include <functional>
#include <vector>

#include "adscmc/e42.hpp"

namespace adscmc {

using CoeffFn = std::function<Mat2(double)>;

// One classical RK4 step of dF/dt = F C(t).
Mat2 rk4_right(const Mat2& F, double t, double h, const CoeffFn& C);
// One classical RK4 step of dG/dt = C(t) G.
Mat2 rk4_left(const Mat2& G, double t, double h, const CoeffFn& C);

using StepFn = std::function<Mat2(const Mat2& y, double a, double b)>;

// Values at the (sorted) nodes of the solution that equals y0 at `anchor`,
// marching outward from the anchor in both directions.
std::vector<Mat2> march(const std::vector<double>& nodes, double anchor, const Mat2& y0,
                        const StepFn& step);

// RK4 from a to b with `substeps` equal steps.
StepFn rk4_stepper(const CoeffFn& C, bool left, int substeps);

}  // namespace adscmc

#endif

#ifndef ADSCMC_WEIERSTRASS_HPP
#define ADSCMC_WEIERSTRASS_HPP

#include <string_view>
#include <utility>

#include "adscmc/e42.hpp"
#include "adscmc/fields.hpp"
#include "adscmc/grid.hpp"
#include "adscmc/tolerances.hpp"

namespace adscmc {

// q, f depend on u; r, g on v.
struct WeierstrassData {
  ScalarField1D q, f, r, g;
};

WeierstrassData weierstrass_data(std::string_view q, std::string_view f, std::string_view r,
                                 std::string_view g);

// psi_u = (1+q^2, -(1-q^2), -2q) f/2,  psi_v = (-(1+r^2), -(1-r^2), -2r) g/2
std::pair<Vec3, Vec3> weierstrass_derivatives(const WeierstrassData& data, double u, double v);

// (1 + q r)^2 f g
double minimal_metric_factor(const WeierstrassData& data, double u, double v);

// psi = A(u) + B(v), zero at the base point (0,0) clamped into the domain.
// A and B come from adaptive Gauss-Kronrod quadrature along each axis.
// Grid mask flags points where the metric factor is within tol.degen of zero.
SurfaceGridE31 integrate_minimal(const WeierstrassData& data, const Domain& domain, int nu,
                                 int nv, const Tolerances& tol = {});

// Unit normal with det[psi_x, psi_y, N] > 0, psi_x = psi_u - psi_v, psi_y = psi_u + psi_v.
Vec3 minimal_normal(const WeierstrassData& data, double u, double v, const Tolerances& tol = {});

enum class Pole { Plus, Minus };
const char* to_string(Pole p);

// Null-chart stereographic projection of S^2_1(1):
// plus -> ((x1+x2)/(1+x3), (-x1+x2)/(1+x3)), minus uses 1 - x3.
std::pair<double, double> stereographic_s21(const Vec3& p, Pole pole, const Tolerances& tol = {});

// Minus-pole projection of the normal; equals (q(u), r(v)).
std::pair<double, double> projected_gauss_minimal(const WeierstrassData& data, double u, double v,
                                                  const Tolerances& tol = {});

}  // namespace adscmc

#endif

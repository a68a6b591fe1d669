#ifndef ADSCMC_GALLERY_HPP
#define ADSCMC_GALLERY_HPP

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adscmc/bryant.hpp"
#include "adscmc/e42.hpp"
#include "adscmc/grid.hpp"
#include "adscmc/weierstrass.hpp"

namespace adscmc {

struct Expected {
  double H = 1.0;
  bool umbilic = false;
  // Hopf pair under the default orientation; NaN when not constant.
  double Q = 0.0, R = 0.0;
  std::string notes;
};

struct GalleryEntry {
  std::string name;
  WeierstrassData data;
  std::string q_src, f_src, r_src, g_src;
  bool minimal = false;                   // E31 minimal cousin, built by quadrature
  std::function<Mat2(double)> F1, F2;     // closed-form legs, empty if none
  std::function<Mat2(double, double)> surface;
  Expected expected;
};

const std::vector<std::string>& gallery_names();

// Throws UnknownName listing the valid names.
GalleryEntry gallery(std::string_view name);

enum class FrameLeg { F1, F2 };

// Throws NoClosedForm for the minimal entries.
Mat2 oracle_frame(const GalleryEntry& e, FrameLeg leg, double t);

// Closed-form legs sampled at nu (nv) nodes, tagged Q and RMu.
std::pair<FrameCurve, FrameCurve> oracle_curves(const GalleryEntry& e, const Domain& d, int nu,
                                                int nv);
// F1(u) F2(v)^t from the closed-form legs.
SurfaceGridH31 oracle_surface(const GalleryEntry& e, const Domain& d, int nu, int nv,
                              const Tolerances& tol = {});

}  // namespace adscmc

#endif

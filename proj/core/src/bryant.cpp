#include "adscmc/bryant.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "adscmc/errors.hpp"
#include "adscmc/ode.hpp"

namespace adscmc {

const char* to_string(Leg leg) {
  switch (leg) {
    case Leg::Q: return "q";
    case Leg::RMu: return "r-mu";
    case Leg::RNu: return "r-nu";
  }
  return "?";
}

Mat2 null_coefficient(Leg leg, double s, double w) {
  if (leg == Leg::RNu) return {s * w, w, -s * s * w, -s * w};
  return {s * w, -s * s * w, w, -s * w};
}

double FrameCurve::max_det_drift() const {
  double m = 0.0;
  for (const auto& f : F) m = std::max(m, std::abs(f.det() - 1.0));
  return m;
}

FrameCurve FrameCurve::decimate(int stride) const {
  if (stride < 1 || n % stride != 0)
    throw DomainError("stride " + std::to_string(stride) + " does not divide " + std::to_string(n));
  FrameCurve out;
  out.leg = leg;
  out.t0 = t0;
  out.t1 = t1;
  out.n = n / stride;
  for (int k = 0; k <= n; k += stride) {
    out.F.push_back(F[k]);
    if (!G.empty()) out.G.push_back(G[k]);
    out.coeff.push_back(coeff[k]);
  }
  return out;
}

FrameCurve FrameCurve::from_samples(Leg leg, double t0, double t1, std::vector<Mat2> F) {
  if (F.size() < 2) throw DomainError("frame curve needs at least 2 samples");
  FrameCurve c;
  c.leg = leg;
  c.t0 = t0;
  c.t1 = t1;
  c.n = static_cast<int>(F.size()) - 1;
  c.F = std::move(F);
  if (leg == Leg::RNu)
    for (const auto& f : c.F) c.G.push_back(f.inverse());
  const auto& Y = leg == Leg::RNu ? c.G : c.F;
  double h = c.step();
  std::vector<double> comp(Y.size());
  std::vector<Mat2> dY(Y.size());
  for (int e = 0; e < 4; ++e) {
    for (std::size_t k = 0; k < Y.size(); ++k) {
      const Mat2& m = Y[k];
      comp[k] = e == 0 ? m.a : e == 1 ? m.b : e == 2 ? m.c : m.d;
    }
    auto d = differentiate_uniform(comp, h);
    for (std::size_t k = 0; k < Y.size(); ++k) {
      double* slot = e == 0 ? &dY[k].a : e == 1 ? &dY[k].b : e == 2 ? &dY[k].c : &dY[k].d;
      *slot = d[k];
    }
  }
  for (std::size_t k = 0; k < Y.size(); ++k)
    c.coeff.push_back(leg == Leg::RNu ? dY[k] * Y[k].inverse() : Y[k].inverse() * dY[k]);
  return c;
}

FrameCurve integrate_frame(Leg leg, const ScalarField1D& s, const ScalarField1D& w, double t0,
                           double t1, int n, const GroupElement& init, const Tolerances& tol,
                           double anchor, int substeps) {
  if (n < 2) throw DomainError("integrate_frame needs n >= 2");
  if (!(t0 < t1)) throw DomainError("integrate_frame needs t0 < t1");
  CoeffFn C = [&](double t) { return null_coefficient(leg, s(t), w(t)); };
  bool left = leg == Leg::RNu;
  FrameCurve c;
  c.leg = leg;
  c.t0 = t0;
  c.t1 = t1;
  c.n = n;
  auto nodes = c.nodes();
  double a = std::clamp(anchor, t0, t1);
  Mat2 y0 = left ? init.mat().inverse() : init.mat();
  auto Y = march(nodes, a, y0, rk4_stepper(C, left, substeps));
  for (int k = 0; k <= n; ++k) {
    double drift = std::abs(Y[k].det() - 1.0);
    if (!(drift <= tol.det_step))
      throw StepFailure("det drift " + std::to_string(drift) + " at t = " +
                        std::to_string(nodes[k]) + "; increase n");
    c.coeff.push_back(C(nodes[k]));
  }
  if (left) {
    c.G = std::move(Y);
    for (const auto& g : c.G) c.F.push_back(g.inverse());
  } else {
    c.F = std::move(Y);
  }
  return c;
}

namespace {

SurfaceGridH31 assemble(const FrameCurve& F1, const FrameCurve& F2, Assembly assembly,
                        const Tolerances& tol) {
  if (F1.leg != Leg::Q) throw TagMismatch("first frame must be the q leg");
  Leg want = assembly == Assembly::Mu ? Leg::RMu : Leg::RNu;
  if (F2.leg != want)
    throw TagMismatch(std::string("second frame must be the ") + to_string(want) + " leg, got " +
                      to_string(F2.leg));
  SurfaceGridH31 s;
  s.domain = {F1.t0, F1.t1, F2.t0, F2.t1};
  s.nu = F1.n + 1;
  s.nv = F2.n + 1;
  s.assembly = assembly;
  std::size_t total = static_cast<std::size_t>(s.nu) * s.nv;
  s.points.resize(total);
  s.metric.resize(total);
  s.mask.assign(total, 0);
  for (int i = 0; i < s.nu; ++i) {
    for (int j = 0; j < s.nv; ++j) {
      std::size_t k = static_cast<std::size_t>(i) * s.nv + j;
      s.points[k] = assembly == Assembly::Mu ? F1.F[i] * F2.F[j].transpose() : F1.F[i] * F2.G[j];
      s.metric[k] = frame_metric(F1, F2, assembly, i, j);
      if (std::abs(s.metric[k]) < tol.degen) s.mask[k] = 1;
    }
  }
  return s;
}

}  // namespace

SurfaceGridH31 assemble_mu(const FrameCurve& F1, const FrameCurve& F2, const Tolerances& tol) {
  return assemble(F1, F2, Assembly::Mu, tol);
}

SurfaceGridH31 assemble_nu(const FrameCurve& F1, const FrameCurve& F2, const Tolerances& tol) {
  return assemble(F1, F2, Assembly::Nu, tol);
}

double frame_metric(const FrameCurve& F1, const FrameCurve& F2, Assembly assembly, int i, int j) {
  const Mat2& c1 = F1.coeff[i];
  const Mat2& c2 = F2.coeff[j];
  Mat2 sum = assembly == Assembly::Mu ? c1 + c2.transpose() : c1 + c2;
  return -sum.det();
}

}  // namespace adscmc

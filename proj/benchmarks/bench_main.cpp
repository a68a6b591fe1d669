#include <benchmark/benchmark.h>

#include "adscmc/bryant.hpp"
#include "adscmc/gallery.hpp"
#include "adscmc/geometry.hpp"
#include "adscmc/lax.hpp"

using namespace adscmc;

static void BM_IntegrateFrame(benchmark::State& state) {
  GalleryEntry e = gallery("enneper-isothermic");
  for (auto _ : state) {
    FrameCurve c = integrate_frame(Leg::Q, e.data.q, e.data.f, -1.5, 1.5, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(c.F.back());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_IntegrateFrame)->Arg(150)->Arg(1500)->Arg(15000);

static void BM_FundamentalData(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  SurfaceGridH31 s = oracle_surface(gallery("enneper-anti"), Domain{}, n, n);
  for (auto _ : state) {
    FundamentalData fd = fundamental_data(s);
    benchmark::DoNotOptimize(fd.points.data());
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_FundamentalData)->Arg(51)->Arg(101)->Arg(201);

static void BM_IntegrateLax(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  GmcData data{ScalarField2D::parse("2*ln(1 + u*v)"), 1.0, ScalarField1D::parse("1", "u"),
               ScalarField1D::parse("1", "v")};
  Domain d{-0.75, 0.75, -0.75, 0.75};
  for (auto _ : state) {
    LaxFrames fr = integrate_lax(data, Assembly::Mu, d, n, n);
    benchmark::DoNotOptimize(fr.phi1.data());
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_IntegrateLax)->Arg(51)->Arg(101)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();

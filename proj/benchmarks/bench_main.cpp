#include "mvzeta/barnes.hpp"
#include "mvzeta/meanvalue.hpp"
#include "mvzeta/verify.hpp"
#include "mvzeta/zetacore.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace mvzeta;

static void BM_HurwitzPoint(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zeta::hurwitz_zeta({0.5, t}, {0.3}));
}
BENCHMARK(BM_HurwitzPoint)->Arg(10)->Arg(100)->Arg(1000)->Arg(5000);

static void BM_HurwitzLine(benchmark::State& state) {
  const double t_max = static_cast<double>(state.range(0));
  const zeta::HurwitzLine line(0.5, 1.0, t_max);
  double t = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(line(t));
    t = t >= t_max ? 1.0 : t + 0.37;
  }
}
BENCHMARK(BM_HurwitzLine)->Arg(100)->Arg(2000);

static void BM_LerchGeneral(benchmark::State& state) {
  const auto p = zeta::LerchParams::with_general(1.0, 1.0 / std::sqrt(2.0));
  for (auto _ : state) benchmark::DoNotOptimize(zeta::lerch_zeta({1.5, 50.0}, p));
}
BENCHMARK(BM_LerchGeneral);

static void BM_BarnesDirect(benchmark::State& state) {
  const auto w = barnes::Weights::make({1.0, std::sqrt(2.0)});
  for (auto _ : state) benchmark::DoNotOptimize(barnes::barnes_direct({3.0, 20.0}, 1.0, w));
}
BENCHMARK(BM_BarnesDirect);

static void BM_LatticeProfile(benchmark::State& state) {
  const auto w = barnes::Weights::make({1.0, std::sqrt(2.0)});
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(barnes::build_lattice_profile(1.0, w, x).size());
}
BENCHMARK(BM_LatticeProfile)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

static void BM_TruncatedLine(benchmark::State& state) {
  const auto w = barnes::Weights::make({1.0, std::sqrt(2.0)});
  const double x = static_cast<double>(state.range(0));
  auto profile = std::make_shared<const barnes::LatticeProfile>(barnes::build_lattice_profile(1.0, w, x));
  const barnes::TruncatedLine line(1.5, profile);
  for (auto _ : state) benchmark::DoNotOptimize(line(0.5 * x));
}
BENCHMARK(BM_TruncatedLine)->Arg(100)->Arg(500)->Unit(benchmark::kMicrosecond);

static void BM_MeanSquareCritical(benchmark::State& state) {
  mv::MeanSquareRequest req;
  req.sigma = 0.5;
  req.T = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mv::mean_square(req).value);
}
BENCHMARK(BM_MeanSquareCritical)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

static void BM_MvRatio(benchmark::State& state) {
  const auto c = verify::random_unit_coefficients(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(verify::mv_ratio(c, 0.5, 0.5));
}
BENCHMARK(BM_MvRatio)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();

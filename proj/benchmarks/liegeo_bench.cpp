// Microbenchmarks for the hot paths of the liegeo engine: the Levi-Civita /
// Ricci pipeline, the Chern-Simons integral in both arithmetic modes, the
// Milnor normal form, and full sweep rows. Run the `liegeo_bench` binary
// directly; the benchmarks are intentionally not registered with ctest.

#include "liegeo/connection.hpp"
#include "liegeo/lie_algebra.hpp"
#include "liegeo/metric.hpp"
#include "liegeo/milnor.hpp"
#include "liegeo/string_class.hpp"
#include "liegeo/sweep.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

using namespace liegeo;

void BM_LeviCivitaRicciDouble(benchmark::State& state) {
  const LieAlgebraFrame frame = LieAlgebraFrame::su2();
  double a1 = 0.3;
  for (auto _ : state) {
    a1 += 1e-9;  // defeat caching of a fixed metric
    const auto g = squashed_metric<double>(a1, 1.7);
    benchmark::DoNotOptimize(ricci_tensor(frame, levi_civita(frame, g)));
  }
}
BENCHMARK(BM_LeviCivitaRicciDouble);

void BM_LeviCivitaRicciExact(benchmark::State& state) {
  const LieAlgebraFrame frame = LieAlgebraFrame::su2();
  long tick = 0;
  for (auto _ : state) {
    ++tick;
    const auto g = squashed_metric<Rational>(Rational(3, 10) + Rational(tick % 7, 1000),
                                             Rational(17, 10));
    benchmark::DoNotOptimize(ricci_tensor(frame, levi_civita(frame, g)));
  }
}
BENCHMARK(BM_LeviCivitaRicciExact);

void BM_CsIntegralDouble(benchmark::State& state) {
  const StringClass cls = StringClass::left_framing();
  double a1 = 2.0;
  for (auto _ : state) {
    a1 += 1e-9;
    benchmark::DoNotOptimize(string_class_integral(cls, a1, 1.0, Chirality::left));
  }
}
BENCHMARK(BM_CsIntegralDouble);

void BM_CsIntegralExact(benchmark::State& state) {
  const StringClass cls = StringClass::left_framing();
  long tick = 0;
  for (auto _ : state) {
    ++tick;
    benchmark::DoNotOptimize(string_class_integral(
        cls, Rational(2) + Rational(tick % 7, 1000), Rational(1), Chirality::left));
  }
}
BENCHMARK(BM_CsIntegralExact);

void BM_MilnorNormalForm(benchmark::State& state) {
  // A rotated family metric: representative of the generic recovery path.
  const LieAlgebraFrame frame = LieAlgebraFrame::su2();
  Matrix<double> gram(3, 3);
  gram(0, 0) = 1.30;
  gram(1, 1) = 0.80;
  gram(2, 2) = 1.10;
  gram(0, 1) = gram(1, 0) = 0.25;
  gram(1, 2) = gram(2, 1) = -0.15;
  gram(0, 2) = gram(2, 0) = 0.05;
  const InnerProductOnAlgebra<double> g(gram);
  for (auto _ : state) {
    benchmark::DoNotOptimize(milnor_normal_form(frame, g));
  }
}
BENCHMARK(BM_MilnorNormalForm);

void BM_SweepRowFloat(benchmark::State& state) {
  SweepSpec spec;
  spec.alpha1 = {1.3, 1.3, 1};
  spec.alpha2 = {0.2, 3.0, static_cast<int>(state.range(0))};
  spec.classes = {StringClass::left_framing(), StringClass::disk_bounding(),
                  StringClass::right_framing()};
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_sweep(spec));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SweepRowFloat)->Arg(101)->Arg(281);

void BM_SweepRowExact(benchmark::State& state) {
  SweepSpec spec;
  spec.alpha1 = {1.3, 1.3, 1};
  spec.alpha2 = {0.2, 3.0, static_cast<int>(state.range(0))};
  spec.classes = {StringClass::left_framing()};
  spec.mode = ArithmeticMode::exact;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_sweep(spec));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SweepRowExact)->Arg(50);

}  // namespace

BENCHMARK_MAIN();

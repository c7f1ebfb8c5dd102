#include "ymh/catalog.hpp"
#include "ymh/connection.hpp"
#include "ymh/forms.hpp"
#include "ymh/gauge.hpp"
#include "ymh/psc.hpp"
#include "ymh/yang_mills.hpp"

#include <benchmark/benchmark.h>

using namespace ymh;

namespace {

void bm_scalar_arith(benchmark::State& state) {
  Scalar a = parse_scalar("(a^2+2*b)/(a-b)");
  Scalar b = parse_scalar("(3*a-b^2)/(a+b)");
  for (auto _ : state) {
    Scalar c = a * b + a / b - b;
    benchmark::DoNotOptimize(c.is_zero());
  }
}
BENCHMARK(bm_scalar_arith);

void bm_symbolic_rref(benchmark::State& state) {
  CatalogEntry e = catalog_load("B3");
  Matrix m = e.metric->pattern;
  for (auto _ : state) {
    auto r = rref(m);
    benchmark::DoNotOptimize(r.rank);
  }
}
BENCHMARK(bm_symbolic_rref);

void bm_invert_symmetric_a1(benchmark::State& state) {
  Matrix m = catalog_load("A1").metric->pattern;
  for (auto _ : state) {
    auto inv = invert_symmetric(m);
    benchmark::DoNotOptimize(inv.det);
  }
}
BENCHMARK(bm_invert_symmetric_a1);

void bm_solve_wang_b3(benchmark::State& state) {
  CatalogEntry e = catalog_load("B3");
  auto hom = designated_homomorphism(e);
  for (auto _ : state) {
    auto sol = solve_wang(e.pair, hom);
    benchmark::DoNotOptimize(sol.dim());
  }
}
BENCHMARK(bm_solve_wang_b3);

void bm_ym_residual_b3(benchmark::State& state) {
  CatalogEntry e = catalog_load("B3");
  auto sol = solve_wang(e.pair, designated_homomorphism(e));
  WangMap W = symbolic_wang_point(sol);
  MetricOnS metric = pattern_metric(e);
  AdInvariantInnerProduct m = unit_inner_product(su2());
  for (auto _ : state) {
    YmReport rep = ym_residual(W, metric, m);
    benchmark::DoNotOptimize(rep.is_yang_mills);
  }
}
BENCHMARK(bm_ym_residual_b3);

void bm_codifferential_2form(benchmark::State& state) {
  CatalogEntry e = catalog_load("B3");
  auto sol = solve_wang(e.pair, designated_homomorphism(e));
  WangMap W = wang_point(sol, {Scalar(1)});
  MetricOnS metric = pattern_metric(e);
  HValuedForm F = curvature(W);
  for (auto _ : state) {
    HValuedForm d = codifferential(F, W, metric);
    benchmark::DoNotOptimize(d.is_zero());
  }
}
BENCHMARK(bm_codifferential_2form);

void bm_psc1_sweep(benchmark::State& state) {
  std::vector<CatalogEntry> entries;
  for (const char* id : {"A1", "A2", "A3", "A4", "A5", "B1", "B2", "B3"})
    entries.push_back(catalog_load(id));
  for (auto _ : state) {
    int holds = 0;
    for (auto& e : entries) holds += psc1(*e.pair).holds;
    benchmark::DoNotOptimize(holds);
  }
}
BENCHMARK(bm_psc1_sweep);

void bm_b3_gauge_potential(benchmark::State& state) {
  std::vector<Scalar> y{Scalar(1), Scalar(0), Scalar(0)};
  for (auto _ : state) {
    auto pot = b3_gauge_potential(y);
    benchmark::DoNotOptimize(pot.is_zero());
  }
}
BENCHMARK(bm_b3_gauge_potential);

}  // namespace

BENCHMARK_MAIN();

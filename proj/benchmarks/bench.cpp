#include <benchmark/benchmark.h>

#include <memory>

#include "wschub/config_build.hpp"
#include "wschub/positivity.hpp"

using namespace wschub;

namespace {

std::shared_ptr<const WeylGroup> group(const std::string& preset) {
  static std::map<std::string, std::shared_ptr<const WeylGroup>> cache;
  auto& slot = cache[preset];
  if (!slot) slot = std::make_shared<WeylGroup>(build_root_datum(preset));
  return slot;
}

void BM_weyl_group(benchmark::State& state) {
  std::string preset = "gl(" + std::to_string(state.range(0)) + ")";
  for (auto _ : state) {
    WeylGroup W(build_root_datum(preset));
    benchmark::DoNotOptimize(W.size());
  }
}
BENCHMARK(BM_weyl_group)->Arg(4)->Arg(5)->Arg(6);

void BM_schubert_classes(benchmark::State& state) {
  auto G = group("cstar_gl(4)");
  IVec lambda{1, 1, 1, 0, 0}, chi{7, -3, -2, -1, 0};
  for (auto _ : state) {
    SchubertCalc<Rational> calc(numeric_config(G, lambda, chi));
    for (int w = 0; w < calc.npts(); ++w) benchmark::DoNotOptimize(calc.schubert_class(w, true));
  }
}
BENCHMARK(BM_schubert_classes);

void BM_structure_constants(benchmark::State& state) {
  auto G = group("cstar_gl(4)");
  IVec lambda{1, 1, 1, 0, 0}, chi{7, -3, -2, -1, 0};
  SchubertCalc<Rational> calc(numeric_config(G, lambda, chi));
  for (int w = 0; w < calc.npts(); ++w) calc.schubert_class(w, true);
  for (auto _ : state)
    for (int u = 0; u < calc.npts(); ++u)
      for (int v = u; v < calc.npts(); ++v)
        benchmark::DoNotOptimize(calc.structure_constants(u, v, true));
}
BENCHMARK(BM_structure_constants);

void BM_symbolic_multiply(benchmark::State& state) {
  auto G = group("gl(5)");
  IVec lambda{1, 0, 0, 0, 0};
  SchubertCalc<RatFunc> calc(symbolic_config(G, lambda));
  int z2 = 2;
  for (auto _ : state)
    benchmark::DoNotOptimize(calc.expand(
        calc.multiply(calc.schubert_class(z2, true), calc.schubert_class(z2, true)), true));
}
BENCHMARK(BM_symbolic_multiply);

void BM_certify_product(benchmark::State& state) {
  auto G = group("cstar_sp4");
  IVec lambda{1, 1, 1};
  SchubertCalc<Rational> weighted(numeric_config(G, lambda, {8, -1, -1}));
  SchubertCalc<Rational> classical(numeric_config(G, lambda, central_cocharacter(*G, lambda)));
  for (auto _ : state)
    for (int u = 0; u < weighted.npts(); ++u)
      for (int v = u; v < weighted.npts(); ++v)
        benchmark::DoNotOptimize(certify_product(weighted, classical, u, v));
}
BENCHMARK(BM_certify_product);

}  // namespace

BENCHMARK_MAIN();

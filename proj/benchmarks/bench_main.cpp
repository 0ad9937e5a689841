// Timings for the expensive exact steps on the largest catalogue entry.
#include <benchmark/benchmark.h>

#include "penner/catalog.hpp"
#include "penner/factor.hpp"
#include "penner/graph.hpp"
#include "penner/recipe.hpp"
#include "penner/spectral.hpp"

using namespace penner;

namespace {

const IntersectionMatrix& big_omega() {
  static const IntersectionMatrix om = catalog_get("S43-max").omega;
  return om;
}

const TwistWord& big_word() {
  static const TwistWord w(spanning_tree_tour(graph_of(big_omega())));
  return w;
}

const IntPoly& big_charpoly() {
  static const IntPoly p = char_poly_exact(twist_product_int(big_omega(), big_word()));
  return p;
}

void BM_TwistProduct(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(twist_product_int(big_omega(), big_word()));
}
BENCHMARK(BM_TwistProduct)->Unit(benchmark::kMillisecond);

void BM_CharPoly(benchmark::State& st) {
  const IntMatrix m = twist_product_int(big_omega(), big_word());
  for (auto _ : st) benchmark::DoNotOptimize(char_poly_exact(m));
}
BENCHMARK(BM_CharPoly)->Unit(benchmark::kMillisecond);

void BM_FactorMonic(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(factor_monic(big_charpoly()));
}
BENCHMARK(BM_FactorMonic)->Unit(benchmark::kMillisecond);

void BM_PfRoot(benchmark::State& st) {
  const PfValue seed = pf_eigenvalue(twist_product(big_omega(), big_word()), 20);
  const int digits = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(pf_root(big_charpoly(), digits, seed.lo, seed.hi));
}
BENCHMARK(BM_PfRoot)->Arg(50)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_RecipeStep(benchmark::State& st) {
  RecipeOptions opts;
  opts.digits = 30;
  opts.window = 1;
  const IntersectionMatrix om = catalog_get(st.range(0) == 0 ? "Mr-7" : "S43-max").omega;
  const TwistWord w(spanning_tree_tour(graph_of(om)));
  for (auto _ : st) benchmark::DoNotOptimize(run_recipe(om, w, opts));
}
BENCHMARK(BM_RecipeStep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

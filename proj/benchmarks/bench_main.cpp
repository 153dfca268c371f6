#include <benchmark/benchmark.h>

#include "prop/magnus.hpp"
#include "prop/obstruction.hpp"
#include "prop/quotient.hpp"
#include "prop/word.hpp"

namespace {

const prop::Presentation& powers_of_two() {
  static const prop::Presentation pres =
      prop::parse_presentation("p = 2 gens: x1, x2, x3 rels: [x1, x2]^4 [x1^2, x3^2]^2 [x2^4, x3^4]");
  return pres;
}

void BM_MagnusExpand(benchmark::State& state) {
  const auto N = static_cast<std::uint32_t>(state.range(0));
  const prop::GroupWord& r = powers_of_two().relators().front();
  for (auto _ : state) benchmark::DoNotOptimize(prop::magnus_expand(r, 2, N, 3));
}
BENCHMARK(BM_MagnusExpand)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_BuildQuotient(benchmark::State& state) {
  const auto N = static_cast<std::uint32_t>(state.range(0));
  const prop::Presentation pres = prop::parse_presentation("p = 2 gens: x1, x2 rels: x1^2 [x2, x1^2]");
  for (auto _ : state) benchmark::DoNotOptimize(prop::build_quotient(pres, N));
}
BENCHMARK(BM_BuildQuotient)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_SearchObstruction(benchmark::State& state) {
  const auto m = static_cast<std::uint32_t>(state.range(0));
  const prop::LeadingForm eta = prop::leading_form(powers_of_two().relators().front(), 2, 8, 3);
  prop::ObstructionOptions options;
  options.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(prop::search_obstruction(eta, m, options));
}
BENCHMARK(BM_SearchObstruction)->Args({1, 1})->Args({2, 1})->Args({2, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "tgp/burning.hpp"
#include "tgp/generators.hpp"
#include "tgp/reachdelete.hpp"
#include "tgp/starexp.hpp"

using namespace tgp;

namespace {

TemporalGraph burning_instance() {
  gen::Rng rng(901);
  return gen::random_blowup(rng, 12, 9, 6, 0.3, 2);
}

TemporalGraph reach_instance() {
  gen::Rng rng(902);
  return gen::random_blowup(rng, 14, 6, 4, 0.5, 2);
}

TemporalStar star_instance() {
  gen::Rng rng(903);
  return gen::random_star(rng, 8, 40, 4);
}

void BM_burning(benchmark::State& st) {
  auto g = burning_instance();
  BurningOptions opt;
  opt.threads = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(solve_tnd_burning(g, 5, std::nullopt, opt));
}

void BM_burning_reference(benchmark::State& st) {
  auto g = burning_instance();
  for (auto _ : st) benchmark::DoNotOptimize(solve_tnd_burning_reference(g, 5));
}

void BM_reachdelete(benchmark::State& st) {
  auto g = reach_instance();
  ReachDeleteOptions opt;
  opt.threads = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(solve_reachdelete(g, 0, 4, opt));
}

void BM_starexp(benchmark::State& st) {
  auto s = star_instance();
  StarExpOptions opt;
  opt.threads = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(solve_starexp(s, 4, opt));
}

void BM_starexp_serial(benchmark::State& st) {
  auto s = star_instance();
  for (auto _ : st) benchmark::DoNotOptimize(solve_starexp_serial(s, 4));
}

}  // namespace

BENCHMARK(BM_burning)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_burning_reference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_reachdelete)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_starexp)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_starexp_serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

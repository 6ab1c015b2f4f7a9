#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "saitoforge/covering.hpp"
#include "saitoforge/duality.hpp"
#include "saitoforge/saito.hpp"

using namespace sf;

namespace {

const std::vector<std::string>& bench_groups() {
  static const std::vector<std::string> names = {"G(3,3,2)", "G(6,1,2)", "G4", "G8", "G14", "G16", "G21",
                                                 "G(3,1,3)", "G(3,3,3)"};
  return names;
}

void apply_groups(benchmark::internal::Benchmark* b) {
  for (std::size_t k = 0; k < bench_groups().size(); ++k) b->Arg(static_cast<int>(k));
}

CycNum sample(std::mt19937& rng, int order) {
  std::vector<mpq_class> c(static_cast<std::size_t>(euler_phi(order)));
  for (auto& q : c) q = mpq_class(static_cast<int>(rng() % 199) - 99, static_cast<int>(rng() % 17) + 1);
  for (auto& q : c) q.canonicalize();
  return CycNum::from_coeffs(order, c);
}

void BM_CycNumMultiply(benchmark::State& state) {
  std::mt19937 rng(1);
  int order = static_cast<int>(state.range(0));
  CycNum a = sample(rng, order), b = sample(rng, order);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycNumMultiply)->Arg(3)->Arg(5)->Arg(12)->Arg(60);

void BM_CycNumInverse(benchmark::State& state) {
  std::mt19937 rng(2);
  CycNum a = sample(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(a.inv());
}
BENCHMARK(BM_CycNumInverse)->Arg(3)->Arg(5)->Arg(12)->Arg(60);

void BM_GroupInvariants(benchmark::State& state) {
  const std::string& name = bench_groups()[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(name);
  for (auto _ : state) benchmark::DoNotOptimize(make_group(name));
}
BENCHMARK(BM_GroupInvariants)->Apply(apply_groups)->Unit(benchmark::kMillisecond);

void BM_NaturalConnection(benchmark::State& state) {
  const std::string& name = bench_groups()[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(name);
  auto g = make_group(name);
  for (auto _ : state) benchmark::DoNotOptimize(natural_connection(g));
}
BENCHMARK(BM_NaturalConnection)->Apply(apply_groups)->Unit(benchmark::kMillisecond);

void BM_NaturalSaitoAndAxioms(benchmark::State& state) {
  const std::string& name = bench_groups()[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(name);
  auto g = make_group(name);
  for (auto _ : state) {
    SaitoData s = natural_saito(g);
    benchmark::DoNotOptimize(check_ss(s).ok());
  }
}
BENCHMARK(BM_NaturalSaitoAndAxioms)->Apply(apply_groups)->Unit(benchmark::kMillisecond);

void BM_FlatCoordinates(benchmark::State& state) {
  const std::string& name = bench_groups()[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(name);
  SaitoData s = natural_saito(make_group(name));
  for (auto _ : state) benchmark::DoNotOptimize(flat_coordinates(s));
}
BENCHMARK(BM_FlatCoordinates)->Apply(apply_groups)->Unit(benchmark::kMillisecond);

void BM_DualityRoundTrip(benchmark::State& state) {
  const std::string& name = bench_groups()[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(name);
  auto g = make_group(name);
  SaitoData s = natural_saito(g);
  for (auto _ : state) {
    AlmostSaitoData a = dual_almost(s, CycNum(), CycNum(1, g->degrees[0]));
    benchmark::DoNotOptimize(dual_saito(a));
  }
}
BENCHMARK(BM_DualityRoundTrip)->Apply(apply_groups)->Unit(benchmark::kMillisecond);

void BM_LineSearch(benchmark::State& state) {
  static const char* names[] = {"G(4,2,2)", "G7", "G11", "G19"};
  const char* name = names[state.range(0)];
  state.SetLabel(name);
  auto g = make_group(name);
  for (auto _ : state) benchmark::DoNotOptimize(find_natural_e_lines(g));
}
BENCHMARK(BM_LineSearch)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_CoveringTable(benchmark::State& state) {
  static const char* names[] = {"G(6,3,2)", "G(6,2,2)", "G7", "G15", "G19"};
  const char* name = names[state.range(0)];
  state.SetLabel(name);
  for (auto _ : state) benchmark::DoNotOptimize(verify_covering_table(name));
}
BENCHMARK(BM_CoveringTable)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

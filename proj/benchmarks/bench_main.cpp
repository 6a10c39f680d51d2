#include <benchmark/benchmark.h>

#include "pgd/action.hpp"
#include "pgd/corpus.hpp"
#include "pgd/degree.hpp"
#include "pgd/lp.hpp"
#include "pgd/roots.hpp"
#include "pgd/segal.hpp"

using namespace pgd;

namespace {

void BM_ConeMembershipE8(benchmark::State& state) {
  auto rs = parse_root_system("E8");
  auto sets = named_free_sets(rs);
  std::vector<std::vector<long long>> columns;
  for (int p : sets[0].members) columns.push_back(rs.roots[rs.positive[p]]);
  const auto& target = rs.roots[rs.positive.back()];
  for (auto _ : state) benchmark::DoNotOptimize(in_cone(columns, target));
}
BENCHMARK(BM_ConeMembershipE8);

void BM_ConeClosure(benchmark::State& state) {
  auto rs = parse_root_system(state.range(0) == 0 ? "C3" : "F4");
  Bits a(rs.num_positive());
  a.set(0);
  a.set(rs.num_positive() - 1);
  for (auto _ : state) benchmark::DoNotOptimize(cone_R(rs, a));
}
BENCHMARK(BM_ConeClosure)->Arg(0)->Arg(1);

void BM_MaxAbelian(benchmark::State& state) {
  static const char* names[] = {"D5", "F4", "E6", "E7"};
  auto rs = parse_root_system(names[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(max_abelian(rs).lower);
  state.SetLabel(names[state.range(0)]);
}
BENCHMARK(BM_MaxAbelian)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_MaxReallyAbelian(benchmark::State& state) {
  static const char* names[] = {"B4", "C4", "D5", "F4"};
  auto rs = parse_root_system(names[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(max_really_abelian(rs).lower);
  state.SetLabel(names[state.range(0)]);
}
BENCHMARK(BM_MaxReallyAbelian)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_HellyPuncturedWeyl(benchmark::State& state) {
  static const char* names[] = {"B2", "A3", "B3"};
  auto t = make_punctured_weyl(names[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(helly_degree(t.action).fiber_sup);
  state.SetLabel(names[state.range(0)]);
}
BENCHMARK(BM_HellyPuncturedWeyl)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_CanonicalAction(benchmark::State& state) {
  auto p = make(state.range(0) == 0 ? "na" : "lsg:S4:6:5");
  for (auto _ : state) benchmark::DoNotOptimize(canonical_action(p.pg).size());
}
BENCHMARK(BM_CanonicalAction)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SpinyCheck(benchmark::State& state) {
  auto p = make("lsg:A4:5:4");
  int n_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_lower_segal_spiny(*p.pg, 3, n_max).pass);
}
BENCHMARK(BM_SpinyCheck)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_GenericSphere(benchmark::State& state) {
  SphereSet s1(1);
  int n_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_segal_generic(s1, SegalVariant{SegalKind::LowerOdd, 2}, n_max).pass);
}
BENCHMARK(BM_GenericSphere)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

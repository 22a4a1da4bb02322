#include <benchmark/benchmark.h>

#include "idealmv/algebra_table.hpp"
#include "idealmv/codes.hpp"
#include "idealmv/ideal.hpp"
#include "idealmv/mv_classify.hpp"
#include "idealmv/suites.hpp"

using namespace idealmv;

namespace {

const char* const kRings[] = {"Z8", "Z2xZ4", "Z4xZ9", "Z8xZ9x5^2", "2^2x2^2x3^2xZ5"};

void BM_EnumerateIdeals(benchmark::State& state) {
  const RingSpec s = parse_ring_spec(kRings[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ideals(s));
  state.SetLabel(s.to_string());
}
BENCHMARK(BM_EnumerateIdeals)->DenseRange(0, 4);

void BM_FromIdealLattice(benchmark::State& state) {
  const RingSpec s = parse_ring_spec(kRings[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(from_ideal_lattice(s));
  state.SetLabel(s.to_string());
}
BENCHMARK(BM_FromIdealLattice)->DenseRange(0, 4);

void BM_CheckMvSuite(benchmark::State& state) {
  const RingSpec s = parse_ring_spec(kRings[state.range(0)]);
  const FiniteAlgebraTable t = from_ideal_lattice(s);
  for (auto _ : state) benchmark::DoNotOptimize(check_suite(t, Suite::mv));
  state.SetLabel(s.to_string() + ", " + std::to_string(t.size()) + " ideals");
}
BENCHMARK(BM_CheckMvSuite)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

void BM_OracleCrossCheck(benchmark::State& state) {
  const RingSpec s = parse_ring_spec(state.range(0) == 0 ? "Z64" : "Z2xZ4xZ8");
  for (auto _ : state) benchmark::DoNotOptimize(oracle_cross_check(s));
  state.SetLabel(s.to_string());
}
BENCHMARK(BM_OracleCrossCheck)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

void BM_MembershipCodeDistance(benchmark::State& state) {
  const RingSpec s = parse_ring_spec(state.range(0) == 0 ? "Z25" : "Z3xZ5xZ7");
  const BlockCode c = membership_code(s);
  for (auto _ : state) benchmark::DoNotOptimize(min_distance(c));
  state.SetLabel(s.to_string());
}
BENCHMARK(BM_MembershipCodeDistance)->DenseRange(0, 1);

void BM_ClassifyAll(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify_all(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_ClassifyAll)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

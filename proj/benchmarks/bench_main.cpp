#include <benchmark/benchmark.h>

#include "ggr/critical.hpp"
#include "ggr/expand.hpp"
#include "ggr/words.hpp"

using namespace ggr;

namespace {

const Rational kTol(1, Integer("1000000000000"));

void SequenceForM(benchmark::State& state) {
  Rational m(state.range(0));
  for (auto _ : state) {
    SequenceSearch s = sequence_for_m(m);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(SequenceForM)->Arg(3)->Arg(17)->Arg(130)->Arg(2051)->Arg(8192);

void CriticalRecord(benchmark::State& state) {
  Rational m(state.range(0));
  for (auto _ : state) {
    CriticalResult r = critical_for_m(m, kTol);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(CriticalRecord)->Arg(3)->Arg(64)->Arg(2051);

void RootSolveQuadratic(benchmark::State& state) {
  AdmissibleSeq d = AdmissibleSeq::finite({1});
  Rational m(3);
  for (auto _ : state) {
    BoundedReal p = p_prime(d, m, kTol);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(RootSolveQuadratic);

void RootSolveBisection(benchmark::State& state) {
  // Parameter sum 12 clears to a degree-20 polynomial: bisection territory.
  AdmissibleSeq d = AdmissibleSeq::finite({3, 3, 3, 3});
  Rational m(11);
  for (auto _ : state) {
    BoundedReal p = p_prime(d, m, kTol);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(RootSolveBisection);

void UniquenessCheck(benchmark::State& state) {
  EpWord w = *AdmissibleSeq::finite({3, 1}).word;
  EpWord delta = w.map(
      [](const Rational& d) { return d == 1 ? Rational(9) : Rational(1); });
  Rational q(22, 10);
  Rational m(9);
  for (auto _ : state) {
    ExpansionReport rep = is_unique_ternary(delta, q, m);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(UniquenessCheck);

void AdmissibilityCheck(benchmark::State& state) {
  std::vector<uint64_t> h(size_t(state.range(0)), 2);
  EpWord w = *AdmissibleSeq::finite(h).word;
  for (auto _ : state) {
    bool adm = is_admissible(w);
    benchmark::DoNotOptimize(adm);
  }
}
BENCHMARK(AdmissibilityCheck)->Arg(2)->Arg(4)->Arg(6);

void ExpansionEnumeration(benchmark::State& state) {
  Alphabet A({Rational(0), Rational(1), Rational(3)});
  Rational x(730, 341), q(21, 10);
  for (auto _ : state) {
    EnumerationResult er = enumerate_expansions(x, q, A, 20, 8);
    benchmark::DoNotOptimize(er);
  }
}
BENCHMARK(ExpansionEnumeration);

}  // namespace

BENCHMARK_MAIN();

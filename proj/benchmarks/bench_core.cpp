#include <benchmark/benchmark.h>

#include "dk/assoc.hpp"
#include "dk/families.hpp"
#include "dk/hopf.hpp"
#include "dk/lyndon.hpp"
#include "dk/quotient.hpp"
#include "dk/series.hpp"

namespace {

dk::Series dense_sample(const dk::AlphabetPtr& alph, int maxdeg, int salt) {
  dk::Series s = dk::Series::one(alph, maxdeg);
  for (int i = 0; i < alph->size(); ++i)
    s = s + dk::Series::gen(alph, maxdeg, i).scaled(dk::Rat(i + salt, 7));
  // Repeated squaring fills every degree up to the truncation order.
  for (int filled = 1; filled < maxdeg; filled *= 2) s = s * s;
  return s;
}

void BM_series_mul(benchmark::State& state) {
  int D = static_cast<int>(state.range(0));
  dk::AlphabetPtr f2 = dk::phi_alphabet();
  dk::Series a = dense_sample(f2, D, 1);
  dk::Series b = dense_sample(f2, D, 3);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_series_mul)->Arg(4)->Arg(6)->Arg(8);

void BM_exp_log(benchmark::State& state) {
  int D = static_cast<int>(state.range(0));
  dk::AlphabetPtr f2 = dk::phi_alphabet();
  dk::Series x = dk::Series::gen(f2, D, "x");
  dk::Series y = dk::Series::gen(f2, D, "y");
  dk::Series p = x + y.scaled(dk::Rat(2, 3)) + bracket(x, y).scaled(dk::Rat(1, 5));
  for (auto _ : state) benchmark::DoNotOptimize(dk::log_series(dk::exp_series(p)));
}
BENCHMARK(BM_exp_log)->Arg(4)->Arg(6);

void BM_bch(benchmark::State& state) {
  int D = static_cast<int>(state.range(0));
  dk::AlphabetPtr f2 = dk::phi_alphabet();
  dk::Series x = dk::Series::gen(f2, D, "x");
  dk::Series y = dk::Series::gen(f2, D, "y");
  for (auto _ : state) benchmark::DoNotOptimize(dk::bch(x, y));
}
BENCHMARK(BM_bch)->Arg(4)->Arg(5);

void BM_table_build(benchmark::State& state) {
  int D = static_cast<int>(state.range(0));
  dk::Presentation pres = dk::Family::t(4).presentation();
  for (auto _ : state)
    benchmark::DoNotOptimize(dk::QuotientTable(pres, D));
}
BENCHMARK(BM_table_build)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_reduce(benchmark::State& state) {
  int D = static_cast<int>(state.range(0));
  static const dk::QuotientTable table(dk::Family::t(3).presentation(), 6);
  dk::AlphabetPtr alph = table.alphabet();
  dk::Series s = dense_sample(alph, D, 2);
  for (auto _ : state) benchmark::DoNotOptimize(table.reduce(s));
}
BENCHMARK(BM_reduce)->Arg(4)->Arg(6);

void BM_check_drinfeld(benchmark::State& state) {
  int D = static_cast<int>(state.range(0));
  static const dk::SolveReport rep = dk::solve_drinfeld(dk::Rat(1), 4);
  dk::Candidate c = rep.candidate;
  c.phi = c.phi.truncated(D);
  for (auto _ : state) benchmark::DoNotOptimize(dk::check_drinfeld(c).pass());
}
BENCHMARK(BM_check_drinfeld)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "mols/design.hpp"
#include "mols/gf.hpp"
#include "mols/latin.hpp"
#include "mols/qc.hpp"
#include "mols/sim.hpp"
#include "mols/stopping.hpp"

namespace {

mols::SparseMatrix design_matrix(int q, std::vector<int> alphas) {
  auto f = mols::make_field(q);
  std::vector<mols::ScalePair> pairs;
  for (int a : alphas) pairs.push_back({a, 1});
  return mols::incidence_matrix(mols::build_mols(f, pairs));
}

void BM_FieldMul(benchmark::State& state) {
  auto f = mols::make_field(static_cast<int>(state.range(0)));
  int q = f->q();
  std::uint64_t sink = 0;
  for (auto _ : state)
    for (int a = 1; a < q; ++a)
      for (int b = 1; b < q; ++b) sink += static_cast<unsigned>(f->mul(a, b));
  benchmark::DoNotOptimize(sink);
  state.SetItemsProcessed(state.iterations() * (q - 1) * (q - 1));
}
BENCHMARK(BM_FieldMul)->Arg(13)->Arg(8)->Arg(9)->Arg(64)->Arg(81);

void BM_FieldInv(benchmark::State& state) {
  auto f = mols::make_field(static_cast<int>(state.range(0)));
  int q = f->q();
  std::uint64_t sink = 0;
  for (auto _ : state)
    for (int a = 1; a < q; ++a) sink += static_cast<unsigned>(f->inv(a));
  benchmark::DoNotOptimize(sink);
  state.SetItemsProcessed(state.iterations() * (q - 1));
}
BENCHMARK(BM_FieldInv)->Arg(13)->Arg(81)->Arg(256);

void BM_BuildIncidence(benchmark::State& state) {
  int q = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(design_matrix(q, {1, 2}));
}
BENCHMARK(BM_BuildIncidence)->Arg(7)->Arg(13);

void BM_StoppingCensus(benchmark::State& state) {
  int q = static_cast<int>(state.range(0));
  int cap = static_cast<int>(state.range(1));
  mols::SparseMatrix h = design_matrix(q, {1, 3});
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    mols::StoppingReport r = mols::enumerate_stopping_sets(h, cap);
    nodes += r.search_nodes;
    benchmark::DoNotOptimize(r);
  }
  state.counters["nodes"] = static_cast<double>(nodes) / state.iterations();
}
BENCHMARK(BM_StoppingCensus)->Args({7, 7})->Args({11, 7})->Args({13, 8})
    ->Unit(benchmark::kMillisecond);

void BM_StructuralSize8(benchmark::State& state) {
  auto f = mols::make_field(13);
  for (auto _ : state)
    for (int a2 = 2; a2 <= 12; ++a2)
      benchmark::DoNotOptimize(mols::structural_search_size8(*f, 1, a2));
}
BENCHMARK(BM_StructuralSize8);

void BM_PeelDecode(benchmark::State& state) {
  int q = static_cast<int>(state.range(0));
  mols::SparseMatrix h = design_matrix(q, {1, 3});
  mols::SimConfig cfg;
  cfg.epsilons = {0.1};
  cfg.trials = 2000;
  cfg.seed = 1;
  long long bits = 0;
  for (auto _ : state) {
    mols::SimResult r = mols::run_simulation(h, cfg);
    bits += r.per_epsilon[0].transmitted_bits;
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(bits);
  state.SetLabel("bits/s in items");
}
BENCHMARK(BM_PeelDecode)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_QcEncode(benchmark::State& state) {
  auto f = mols::make_field(13);
  mols::SparseMatrix h = mols::build_qc_matrix(f, {1, 3});
  mols::Encoder enc(h);
  std::vector<std::uint8_t> msg(static_cast<size_t>(enc.k()));
  mols::SplitMix64 rng(7);
  for (auto& b : msg) b = rng.next() & 1;
  for (auto _ : state) benchmark::DoNotOptimize(enc.encode(msg));
  state.SetItemsProcessed(state.iterations() * enc.n());
}
BENCHMARK(BM_QcEncode);

} // namespace

BENCHMARK_MAIN();

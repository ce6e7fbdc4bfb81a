#include <benchmark/benchmark.h>

#include <random>

#include "tropsem/corpus.hpp"
#include "tropsem/directed_metric.hpp"
#include "tropsem/extension.hpp"
#include "tropsem/isbell.hpp"
#include "tropsem/oracle.hpp"
#include "tropsem/polyhedron.hpp"
#include "tropsem/rays.hpp"
#include "tropsem_test/fixtures.hpp"

using namespace tropsem;

namespace {

Plm layered(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return tropsem::testing::random_plm(rng, n, tropsem::testing::Shape::Layered);
}

void BM_EnumerateRays(benchmark::State& state) {
  const auto m = layered(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_rays(m, Side::Lower));
}
BENCHMARK(BM_EnumerateRays)->DenseRange(3, 11, 2);

void BM_OracleRays(benchmark::State& state) {
  const auto m = layered(static_cast<std::size_t>(state.range(0)), 7);
  const auto d = metric_from_plm(m);
  const auto constraints = cone_constraints(d, Side::Lower);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_rays(constraints, d.size()));
}
BENCHMARK(BM_OracleRays)->DenseRange(3, 9, 2)->Unit(benchmark::kMillisecond);

void BM_Membership(benchmark::State& state) {
  const auto d = metric_from_plm(layered(static_cast<std::size_t>(state.range(0)), 11));
  std::mt19937_64 rng(12);
  const auto x = tropsem::testing::random_member(rng, d).log;
  for (auto _ : state) benchmark::DoNotOptimize(is_member(x, d, Side::Lower));
}
BENCHMARK(BM_Membership)->RangeMultiplier(2)->Range(4, 32);

void BM_MaxClosure(benchmark::State& state) {
  const auto d = metric_from_plm(layered(6, 13));
  std::mt19937_64 rng(14);
  std::vector<ExtVector> xs;
  for (int i = 0; i < state.range(0); ++i) xs.push_back(tropsem::testing::random_member(rng, d).log);
  for (auto _ : state) benchmark::DoNotOptimize(max_closure(xs, d));
}
BENCHMARK(BM_MaxClosure)->DenseRange(2, 4);

void BM_Boltzmann(benchmark::State& state) {
  std::mt19937_64 rng(15);
  std::vector<BoltzmannTerm> terms;
  for (int t = 0; t < state.range(0); ++t) {
    BoltzmannTerm term;
    term.lambda = ExtReal(std::uniform_real_distribution<double>(0.0, 3.0)(rng));
    term.x = tropsem::testing::random_ext_vector(rng, 16, 5.0, 0.1, 0.0);
    terms.push_back(std::move(term));
  }
  for (auto _ : state) benchmark::DoNotOptimize(boltzmann(terms, 0.5));
}
BENCHMARK(BM_Boltzmann)->RangeMultiplier(4)->Range(4, 256);

void BM_IngestCorpus(benchmark::State& state) {
  std::mt19937_64 rng(16);
  const std::vector<std::string> vocab{"the", "cat", "sat", "on", "mat", "ate", "rat", "dog"};
  std::vector<std::string> tokens;
  for (int i = 0; i < state.range(0); ++i) tokens.push_back(vocab[rng() % vocab.size()]);
  for (auto _ : state) benchmark::DoNotOptimize(ingest_corpus(tokens, OrderMode::TwoSided, 2, false));
}
BENCHMARK(BM_IngestCorpus)->RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

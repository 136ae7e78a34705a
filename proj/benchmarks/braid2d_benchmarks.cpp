#include <benchmark/benchmark.h>

#include <random>

#include "braid2d/braid_word.hpp"
#include "braid2d/invariants.hpp"
#include "braid2d/markov_search.hpp"
#include "braid2d/monodromy_tuple.hpp"
#include "braid2d/normal_form.hpp"

namespace {

using namespace braid2d;

std::vector<BraidWord> words(std::size_t degree, std::size_t length, std::size_t count) {
  std::mt19937_64 rng(7);
  std::vector<BraidWord> out;
  for (std::size_t n = 0; n < count; ++n) {
    std::vector<int> letters;
    for (std::size_t t = 0; t < length; ++t) {
      const int g = 1 + static_cast<int>(rng() % (degree - 1));
      letters.push_back(rng() % 2 ? g : -g);
    }
    out.emplace_back(degree, std::move(letters));
  }
  return out;
}

void BM_NormalForm(benchmark::State& state) {
  const auto ws = words(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)), 64);
  std::size_t n = 0;
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(ws[n++ % ws.size()]));
}
BENCHMARK(BM_NormalForm)->Args({3, 16})->Args({5, 16})->Args({5, 64})->Args({8, 64});

void BM_ArtinAct(benchmark::State& state) {
  const std::size_t degree = static_cast<std::size_t>(state.range(0));
  const auto ws = words(degree, static_cast<std::size_t>(state.range(1)), 64);
  const FreeWord x = FreeWord::generator(degree, 1);
  std::size_t n = 0;
  for (auto _ : state) benchmark::DoNotOptimize(artin_act(ws[n++ % ws.size()], x));
}
BENCHMARK(BM_ArtinAct)->Args({3, 16})->Args({5, 16})->Args({5, 32});

void BM_HomsToS4(benchmark::State& state) {
  MonodromyTuple t = b_star();
  for (int s = 0; s < state.range(0); ++s) t = braid_sum(t, b_star());
  for (int s = 0; s < 3; ++s) t = stabilize(t);
  const GroupPresentation g = complement_group(t);
  for (auto _ : state) benchmark::DoNotOptimize(count_homs(g, 4));
}
BENCHMARK(BM_HomsToS4)->Arg(0)->Arg(2);

void BM_SearchStabilized(benchmark::State& state) {
  const MonodromyTuple t = braid_sum(b_star(), b_star());
  MonodromyTuple u = t;
  for (int s = 0; s < state.range(0); ++s) u = stabilize(u);
  SearchBounds bounds;
  bounds.max_depth = static_cast<std::size_t>(state.range(0));
  bounds.max_degree = u.degree();
  for (auto _ : state) benchmark::DoNotOptimize(search_equivalence(t, u, bounds));
}
BENCHMARK(BM_SearchStabilized)->Arg(1)->Arg(2);

void BM_DegreeTwoCensus(benchmark::State& state) {
  SearchBounds bounds;
  bounds.moves = {.hurwitz = true, .conjugation = false, .stabilization = false};
  bounds.max_depth = 64;
  bounds.max_degree = 2;
  bounds.max_conjugator_length = 0;
  const auto tuples = enumerate_tuples(2, static_cast<std::size_t>(state.range(0)), 0);
  for (auto _ : state) benchmark::DoNotOptimize(census(tuples, bounds));
}
BENCHMARK(BM_DegreeTwoCensus)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();

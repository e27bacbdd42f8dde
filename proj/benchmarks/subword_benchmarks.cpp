// Micro benchmarks contrasting the evaluation paths: the definitional
// counting DP, the digit recurrences and the matrix product, plus the
// summatory evaluator and trie construction.

#include <benchmark/benchmark.h>

#include <random>

#include "subwords/s_regular.hpp"
#include "subwords/summatory.hpp"
#include "subwords/trie.hpp"
#include "subwords/words.hpp"

using subwords::Base;
using subwords::Int;
using subwords::Word;

namespace {

Int random_number(std::mt19937_64& rng, int base, int digits) {
  Int n(0);
  std::uniform_int_distribution<int> digit(0, base - 1);
  std::uniform_int_distribution<int> leading(1, base - 1);
  for (int i = 0; i < digits; ++i) {
    n *= base;
    n += (i == 0) ? leading(rng) : digit(rng);
  }
  return n;
}

void BM_CountingDP(benchmark::State& state) {
  const int digits = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const Int n = random_number(rng, 3, digits);
  const Word w = subwords::rep(Base(3), n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(subwords::count_canonical_subwords(w));
  }
}
BENCHMARK(BM_CountingDP)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_Recurrence(benchmark::State& state) {
  const int digits = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  const Int n = random_number(rng, 3, digits);
  for (auto _ : state) {
    benchmark::DoNotOptimize(subwords::s_recurrence(Base(3), n));
  }
}
BENCHMARK(BM_Recurrence)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_MatrixPath(benchmark::State& state) {
  const int digits = static_cast<int>(state.range(0));
  std::mt19937_64 rng(3);
  const Int n = random_number(rng, 3, digits);
  const auto rep = subwords::build_linear_representation(Base(3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(subwords::s_fast(rep, n));
  }
}
BENCHMARK(BM_MatrixPath)->Arg(8)->Arg(16)->Arg(32)->Arg(64)->Arg(256);

void BM_WordBinomial(benchmark::State& state) {
  const int digits = static_cast<int>(state.range(0));
  std::mt19937_64 rng(4);
  const Word u = subwords::rep(Base(3), random_number(rng, 3, digits));
  const Word v = subwords::rep(Base(3), random_number(rng, 3, digits / 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(subwords::word_binomial(u, v));
  }
}
BENCHMARK(BM_WordBinomial)->Arg(16)->Arg(64)->Arg(256);

void BM_Summatory(benchmark::State& state) {
  const int digits = static_cast<int>(state.range(0));
  std::mt19937_64 rng(5);
  const Int n = random_number(rng, 3, digits);
  for (auto _ : state) {
    subwords::SummatoryEvaluator evaluator(Base(3));
    benchmark::DoNotOptimize(evaluator.value(n));
  }
}
BENCHMARK(BM_Summatory)->Arg(8)->Arg(16)->Arg(32);

void BM_TrieBuild(benchmark::State& state) {
  const int digits = static_cast<int>(state.range(0));
  std::mt19937_64 rng(6);
  const Word w = subwords::rep(Base(3), random_number(rng, 3, digits));
  for (auto _ : state) {
    benchmark::DoNotOptimize(subwords::build_trie(w));
  }
}
BENCHMARK(BM_TrieBuild)->Arg(8)->Arg(12)->Arg(16);

}  // namespace

BENCHMARK_MAIN();

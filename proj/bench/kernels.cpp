#include <benchmark/benchmark.h>

#include "cobord/exact/integer_form.hpp"
#include "cobord/exact/matrix.hpp"
#include "cobord/faithfulness/faithfulness.hpp"
#include "cobord/frobenius/algebra.hpp"
#include "cobord/surface/cobordism.hpp"
#include "cobord/tqft/evaluator.hpp"

using namespace cobord;

namespace {

const tqft::Evaluator& big() {
  static const tqft::Evaluator ev(frobenius::qz5_zqs3());
  return ev;
}

// Images of 2 -> 2 cobordisms: 225 x 225 with rational entries.
const exact::Matrix& lhs() {
  static const auto m = big().evaluate(surface::e_block(2, 1, 2)).matrix;
  return m;
}
const exact::Matrix& rhs() {
  static const auto m = big().evaluate(surface::tensor(surface::e_block(1, 2, 1), surface::e_block(1, 0, 1))).matrix;
  return m;
}

void BM_MatMulSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(exact::mat_mul_serial(lhs(), rhs()));
}
BENCHMARK(BM_MatMulSerial)->Unit(benchmark::kMillisecond);

void BM_MatMulParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(exact::mat_mul(lhs(), rhs()));
}
BENCHMARK(BM_MatMulParallel)->Unit(benchmark::kMillisecond);

void BM_MatMulIntegerForm(benchmark::State& state) {
  const auto a = *exact::IntegerForm::from(lhs());
  const auto b = *exact::IntegerForm::from(rhs());
  for (auto _ : state) benchmark::DoNotOptimize(exact::multiply(a, b));
}
BENCHMARK(BM_MatMulIntegerForm)->Unit(benchmark::kMillisecond);

void BM_KronSerial(benchmark::State& state) {
  const auto& h = big().handle();
  for (auto _ : state) benchmark::DoNotOptimize(exact::kron_serial(lhs(), h));
}
BENCHMARK(BM_KronSerial)->Unit(benchmark::kMillisecond);

void BM_KronParallel(benchmark::State& state) {
  const auto& h = big().handle();
  for (auto _ : state) benchmark::DoNotOptimize(exact::kron(lhs(), h));
}
BENCHMARK(BM_KronParallel)->Unit(benchmark::kMillisecond);

void BM_Evaluate2to2(benchmark::State& state) {
  const surface::Cobordism k(2, 2, {{{0}, {1}, 2}, {{1}, {0}, 1}}, {2});
  for (auto _ : state) benchmark::DoNotOptimize(big().evaluate(k));
}
BENCHMARK(BM_Evaluate2to2)->Unit(benchmark::kMillisecond);

void BM_Scan(benchmark::State& state) {
  const surface::EnumerationBounds bounds{.max_circles = 1, .max_genus = 2, .max_closed = 1, .max_closed_genus = 3};
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(faithfulness::faithfulness_scan(big(), bounds, "A", workers));
}
BENCHMARK(BM_Scan)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

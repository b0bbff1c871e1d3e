// Serial reference path against the OpenMP path for the kernels behind the
// certification layers. Argument 0 selects serial, 1 parallel.

#include <benchmark/benchmark.h>

#include "locmult/ideal.hpp"
#include "locmult/lojasiewicz.hpp"
#include "locmult/multiplicity.hpp"
#include "locmult/parser.hpp"
#include "locmult/reduction.hpp"

using namespace locmult;

namespace {

Execution exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::kSerial : Execution::kParallel;
}

const RingPtr& ring_xy() {
  static const RingPtr r = make_ring({"x", "y"});
  return r;
}

const RingPtr& ring_xyz() {
  static const RingPtr r = make_ring({"x", "y", "z"});
  return r;
}

Ideal ideal(const std::string& gens, const RingPtr& ring) {
  return Ideal(ring, parse_polynomial_list(gens, ring));
}

void BM_Contains(benchmark::State& state) {
  const Ideal big = ideal("x^3 + y*z, y^3 - x*z^2, z^4 + x^2*y", ring_xyz());
  const Ideal small = ideal_power(big, 2);
  for (auto _ : state) benchmark::DoNotOptimize(contains(big, small, exec_of(state)));
}
BENCHMARK(BM_Contains)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ReductionEquation(benchmark::State& state) {
  const Ideal i = ideal("x^4, x^3*y, x*y^3, y^4", ring_xy());
  const Ideal j = ideal("x^4 + x*y^3, y^4 + x^3*y", ring_xy());
  for (auto _ : state) benchmark::DoNotOptimize(reduction_exponent(j, i, 4, exec_of(state)));
}
BENCHMARK(BM_ReductionEquation)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_GenericReduction(benchmark::State& state) {
  const Ideal i = ideal("x^2 + y*z, y^3, z^3 - x*y, x*y*z", ring_xyz());
  CertifyOptions options;
  options.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(e_certified(i, options).e);
}
BENCHMARK(BM_GenericReduction)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ClosureSweep(benchmark::State& state) {
  const Ideal i = ideal("x^5, x^2*y^2, y^5", ring_xy());
  CertifyOptions options;
  options.exec = exec_of(state);
  options.closure_shortcuts = false;
  const auto e_i = e_certified(i, options);
  std::vector<Polynomial> probes;
  for (unsigned a = 0; a <= 4; ++a)
    for (unsigned b = 0; a + b <= 5; ++b)
      probes.push_back(parse_polynomial("x^" + std::to_string(a) + "*y^" + std::to_string(b),
                                        ring_xy()));
  for (auto _ : state) {
    const auto in = map_indices<bool>(probes.size(), [&](std::size_t k) {
      return closure_member(probes[k], i, e_i, options).member;
    }, options.exec);
    benchmark::DoNotOptimize(in);
  }
}
BENCHMARK(BM_ClosureSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_LojaBracket(benchmark::State& state) {
  const Ideal i = ideal("x^2 + x*y, x*y - y^2, x^2 + y^2", ring_xy());
  CertifyOptions options;
  options.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(loja_bracket(i, 3, options).upper);
}
BENCHMARK(BM_LojaBracket)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

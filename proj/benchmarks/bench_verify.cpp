#include <benchmark/benchmark.h>

#include <random>

#include "verdier/q7.hpp"

using namespace verdier;

namespace {

Polynomial dense_polynomial(const Ring& ring, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::vector<std::pair<Exponents, Rational>> terms;
  for (int d = 0; d <= ring.truncation(); ++d)
    for (const Exponents& e : ring.irreducible_monomials(d))
      terms.emplace_back(e, Rational(num(rng)));
  return ring.make(terms);
}

void BM_RingMultiply(benchmark::State& state) {
  Space base = formal_base(static_cast<int>(state.range(0)));
  Space bundle = proj_bundle_ool(base, base.ring().var("L"));
  std::mt19937_64 rng(12345);
  Polynomial a = dense_polynomial(bundle.ring(), rng);
  Polynomial b = dense_polynomial(bundle.ring(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_RingMultiply)->Arg(2)->Arg(3)->Arg(4);

void BM_InvertUnit(benchmark::State& state) {
  Space base = formal_base(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(54321);
  Polynomial u = base.ring().one();
  Polynomial noise = dense_polynomial(base.ring(), rng);
  for (int d = 1; d <= base.ring().truncation(); ++d) u += noise.component(d);
  for (auto _ : state) benchmark::DoNotOptimize(u.inverse_of_unit());
}
BENCHMARK(BM_InvertUnit)->Arg(2)->Arg(4);

void BM_VerifyP3(benchmark::State& state) {
  for (auto _ : state) {
    Q7Model model = build_model({BaseSpec::Kind::Pn, 3}, 1);
    benchmark::DoNotOptimize(verify(model, {}));
  }
}
BENCHMARK(BM_VerifyP3);

void BM_VerifyFormal(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Q7Model model = build_model({BaseSpec::Kind::Formal, d}, 1);
    benchmark::DoNotOptimize(verify(model, {}));
  }
}
BENCHMARK(BM_VerifyFormal)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();

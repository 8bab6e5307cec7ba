// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "seuclid/analysis.hpp"
#include "seuclid/forms.hpp"

namespace {

using namespace seuclid;

std::vector<Place> over(const NumberField& k, std::initializer_list<long> ps) {
  std::vector<Place> out;
  for (long p : ps)
    for (const auto& v : places_above(k, p)) out.push_back(v);
  return out;
}

FundamentalDomain sixth() {
  static const NumberField q = make_field({-1, 1});
  return FundamentalDomain(configure_s(q, over(q, {2, 3})), FractionalIdeal::unit(q));
}

void BM_MExactRational(benchmark::State& state) {
  auto d = sixth();
  const auto& q = d.field();
  const Rational xi(1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(m_exact(d, q.from_rational(xi)).value);
}
BENCHMARK(BM_MExactRational)->Arg(5)->Arg(35)->Arg(385);

void BM_MExactGaussian(benchmark::State& state) {
  const NumberField qi = make_field({1, 0, 1});
  FundamentalDomain d(configure_s(qi, over(qi, {5})), FractionalIdeal::unit(qi));
  const FieldElement xi(std::vector<Rational>{Rational(1, 3), Rational(2, 7)});
  for (auto _ : state) benchmark::DoNotOptimize(m_exact(d, xi).value);
}
BENCHMARK(BM_MExactGaussian);

void BM_CoveringSixth(benchmark::State& state) {
  auto d = sixth();
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto res = covering_verify(d, Rational(21, 100), 500000, workers);
    state.counters["boxes"] = static_cast<double>(res.certificate.boxes.size());
  }
}
BENCHMARK(BM_CoveringSixth)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ReplaySixth(benchmark::State& state) {
  auto d = sixth();
  auto cert = covering_verify(d, Rational(21, 100), 500000).certificate;
  for (auto _ : state) benchmark::DoNotOptimize(verify_certificate(d, cert).ok);
}
BENCHMARK(BM_ReplaySixth)->Unit(benchmark::kMillisecond);

void BM_DecideSqrtMinus5(benchmark::State& state) {
  const NumberField k = make_field({5, 0, 1});
  std::vector<FieldElement> gens{k.one()};
  if (state.range(0) == 1) gens = {k.from_rational(2), k.one() + k.theta()};
  FundamentalDomain d(configure_s(k, {}), FractionalIdeal::from_gens(k, gens));
  for (auto _ : state) benchmark::DoNotOptimize(decide_norm_euclidean(d, 200000).verdict);
}
BENCHMARK(BM_DecideSqrtMinus5)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FormMinimum(benchmark::State& state) {
  const BinaryQuadraticForm f = state.range(0) == 0 ? BinaryQuadraticForm{2, 2, 3} : BinaryQuadraticForm{1, 0, -2};
  const RationalPoint p{Rational(3, 7), Rational(2, 5)};
  for (auto _ : state) benchmark::DoNotOptimize(m_form(f, p));
}
BENCHMARK(BM_FormMinimum)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();

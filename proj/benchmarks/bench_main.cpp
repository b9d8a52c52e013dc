#include <benchmark/benchmark.h>

#include <random>

#include "z4u/codes.hpp"

using namespace z4u;

namespace {

const char* const kRow1G2 = "3x^4+2x^3+x^2+(3+2u)x+3";
const char* const kN23G2 =
    "x^22+(1+2u)x^21+x^20+(1+2u)x^19+x^18+(1+2u)x^17+x^16+(1+2u)x^15+x^14+(1+2u)x^13+x^12+(3+2u)x^11"
    "+3x^10+(1+2u)x^9+x^8+(1+2u)x^7+3x^6+(3+2u)x^5+3x^4+(1+2u)x^3+3x^2+(1+2u)x+3";

Z4Code image_of(std::size_t n, const char* g2) {
  return gray_image(code_from_pair(QuotientCtx(n, kOnePlus2u), RPoly{}, parse_rpoly(g2)));
}

void BM_FactorXnMinus1(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(factor_xn_minus_1_z4(n));
}
BENCHMARK(BM_FactorXnMinus1)->Arg(7)->Arg(23)->Arg(63);

void BM_StandardForm(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::vector<Z4Vector> rows(len, Z4Vector(len));
  for (auto& r : rows) {
    for (auto& x : r) x = static_cast<int>(rng() % 4);
  }
  for (auto _ : state) benchmark::DoNotOptimize(standard_form_z4(rows, len));
}
BENCHMARK(BM_StandardForm)->Arg(14)->Arg(46)->Arg(128);

void BM_GrayImage(benchmark::State& state) {
  const RCode code = code_from_pair(QuotientCtx(23, kOnePlus2u), RPoly{}, parse_rpoly(kN23G2));
  for (auto _ : state) benchmark::DoNotOptimize(gray_image(code));
}
BENCHMARK(BM_GrayImage);

void BM_MinLeeDistance(benchmark::State& state) {
  const Z4Code code = state.range(0) == 7 ? image_of(7, kRow1G2) : image_of(23, kN23G2);
  DistanceOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(min_lee_distance(code, opts));
}
BENCHMARK(BM_MinLeeDistance)->Arg(7)->Arg(23);

}  // namespace

BENCHMARK_MAIN();

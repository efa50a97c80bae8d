#include <benchmark/benchmark.h>

#include "freeimm/ansatz.hpp"
#include "freeimm/collar.hpp"
#include "freeimm/poly_det.hpp"
#include "freeimm/registry.hpp"
#include "freeimm/sturm.hpp"
#include "freeimm/verifier.hpp"
#include "freeimm/weierstrass.hpp"

namespace {

using namespace freeimm;

void BM_OsculatingDeterminant(benchmark::State& state, const char* name) {
  const AnsatzSpec spec = builtin_spec(name);
  for (auto _ : state) benchmark::DoNotOptimize(osculating_determinant(derivative_family(spec)));
}
BENCHMARK_CAPTURE(BM_OsculatingDeterminant, t3, "t3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_OsculatingDeterminant, t4, "t4")->Unit(benchmark::kMillisecond);

void BM_SturmT5(benchmark::State& state) {
  const RatPoly p = verify(builtin_spec("t5")).weierstrass.numerator;
  for (auto _ : state) benchmark::DoNotOptimize(certify_sign(p, SignDomain::all_reals()));
}
BENCHMARK(BM_SturmT5)->Unit(benchmark::kMillisecond);

void BM_WeierstrassT5(benchmark::State& state) {
  const TrigPoly d = verify(builtin_spec("t5")).determinant;
  for (auto _ : state) benchmark::DoNotOptimize(to_weierstrass(d));
}
BENCHMARK(BM_WeierstrassT5)->Unit(benchmark::kMicrosecond);

void BM_VerifyKFree6(benchmark::State& state) {
  const AnsatzSpec spec = builtin_spec("kfree6");
  for (auto _ : state) benchmark::DoNotOptimize(verify_kfree(spec));
}
BENCHMARK(BM_VerifyKFree6)->Unit(benchmark::kMillisecond);

void BM_Collar(benchmark::State& state) {
  const CollarProfile p = reference_collar_profile();
  for (auto _ : state) benchmark::DoNotOptimize(verify_collar(p));
}
BENCHMARK(BM_Collar)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();

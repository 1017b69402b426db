#include <benchmark/benchmark.h>

#include "mopoly/families.hpp"
#include "mopoly/interlacing.hpp"
#include "mopoly/lattice.hpp"
#include "mopoly/oracle.hpp"
#include "mopoly/roots.hpp"

// Costs scale with coefficient bit-length, so all benchmarks run at the
// moderate index (4,4) where rationals are already a few hundred bits wide.

using namespace mopoly;

namespace {

FamilySpec hermite() { return Hermite{{Rational(1), Rational(-1)}}; }

FamilySpec meixner_second() {
  return MeixnerSecond{Rational(1, 2), {Rational(1), Rational(3, 2)}};
}

void BM_LatticeBuildCold(benchmark::State& state) {
  FamilyCoefficients fam(hermite());
  MultiIndex n({4, 4});
  for (auto _ : state) {
    Poly p = build_polynomial(fam, n);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_LatticeBuildCold);

void BM_ExplicitSum(benchmark::State& state) {
  FamilySpec spec = meixner_second();
  MultiIndex n({4, 4});
  for (auto _ : state) {
    Poly p = explicit_polynomial(spec, n);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_ExplicitSum);

void BM_MomentSolve(benchmark::State& state) {
  FamilySpec spec = hermite();
  MultiIndex n({4, 4});
  for (auto _ : state) {
    Poly p = solve_from_moments(spec, n);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_MomentSolve);

void BM_IsolateRoots(benchmark::State& state) {
  FamilyCoefficients fam(hermite());
  Poly p = build_polynomial(fam, MultiIndex({4, 4}));
  for (auto _ : state) {
    auto ivs = isolate_roots(p);
    benchmark::DoNotOptimize(ivs);
  }
}
BENCHMARK(BM_IsolateRoots);

void BM_Interlace(benchmark::State& state) {
  FamilyCoefficients fam(hermite());
  LatticeCache cache(fam);
  Poly p = cache.at(MultiIndex({4, 4}));
  Poly q = cache.at(MultiIndex({5, 4}));
  for (auto _ : state) {
    InterlacingReport rep = interlace(p, q);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_Interlace);

void BM_StepLineExtract(benchmark::State& state) {
  FamilyCoefficients fam(hermite());
  std::vector<Poly> seq = step_line_sequence(fam, 8);
  for (auto _ : state) {
    StepLineCoefficients coeffs = extract_step_line_coefficients(seq, 2);
    benchmark::DoNotOptimize(coeffs);
  }
}
BENCHMARK(BM_StepLineExtract);

}  // namespace

BENCHMARK_MAIN();

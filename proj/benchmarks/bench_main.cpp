#include <benchmark/benchmark.h>

#include "cubicones/hassett.hpp"
#include "cubicones/json_io.hpp"
#include "cubicones/polyhedra.hpp"
#include "cubicones/stable_graphs.hpp"
#include "cubicones/symmetry.hpp"

namespace {

using namespace cubicones;

QVector qv(std::initializer_list<long long> xs) {
  QVector v;
  for (long long x : xs) v.emplace_back(x);
  return v;
}

void BM_EnumerateStrata7(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_dim1_strata(7));
}
BENCHMARK(BM_EnumerateStrata7);

void BM_OrbitStrata(benchmark::State& state) {
  const GroupSpec g = GroupSpec::young(7, {{1, 2}, {3, 4, 5, 6, 7}});
  for (auto _ : state) benchmark::DoNotOptimize(orbit_strata(7, g));
}
BENCHMARK(BM_OrbitStrata);

void BM_PushforwardRelation(benchmark::State& state) {
  const GroupSpec g = GroupSpec::young(7, {{1, 2}, {3, 4, 5, 6, 7}});
  const auto basis = orbit_divisors(7, g);
  const DivRelation rel = keel_relation(7, 1, 2, 3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(pushforward_relation(rel, g, basis));
}
BENCHMARK(BM_PushforwardRelation);

void BM_PairingMatrix(benchmark::State& state) {
  const GroupSpec g = GroupSpec::young(7, {{1, 2}, {3, 4, 5, 6, 7}});
  const WeightData w = WeightData::cubic_line_weights();
  const auto basis = orbit_divisors(7, g);
  const auto strata = orbit_strata(7, g);
  for (auto _ : state) benchmark::DoNotOptimize(build_pairing_matrix(basis, strata, w));
}
BENCHMARK(BM_PairingMatrix);

void BM_NefConeDoubleDescription(benchmark::State& state) {
  ConeH c;
  c.dim = 3;
  c.normals = {qv({2, -1, 2}), qv({0, 1, -2}), qv({1, 0, 0}), qv({-1, 1, 0}),
               qv({0, -1, 6}), qv({0, 0, 1}),  qv({0, 1, 2})};
  for (auto _ : state) benchmark::DoNotOptimize(h_to_v(c));
}
BENCHMARK(BM_NefConeDoubleDescription);

void BM_CrossPolytopeDual(benchmark::State& state) {
  // all sign patterns in dimension 5: 32 inequalities, 10 rays on conversion
  ConeH c;
  c.dim = 5;
  for (int mask = 0; mask < 32; ++mask) {
    QVector n(5);
    for (int j = 0; j < 5; ++j) n[j] = Rational((mask >> j & 1) ? 1 : -1);
    QVector shifted(5);
    for (int j = 0; j < 5; ++j) shifted[j] = n[j] + Rational(3);
    c.normals.push_back(shifted);
  }
  for (auto _ : state) benchmark::DoNotOptimize(h_to_v(c));
}
BENCHMARK(BM_CrossPolytopeDual);

void BM_KernelBasis(benchmark::State& state) {
  QMatrix m(6, 24);
  long long seed = 1;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      seed = (seed * 1103515245 + 12345) % 2147483648;
      m.at(r, c) = Rational(seed % 7 - 3);
    }
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m));
}
BENCHMARK(BM_KernelBasis);

}  // namespace

BENCHMARK_MAIN();

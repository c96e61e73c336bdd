#include <benchmark/benchmark.h>

#include "racah/gamma_series.hpp"
#include "racah/gt_pattern.hpp"
#include "racah/semiinvariant.hpp"
#include "racah/sixj.hpp"
#include "racah/threej.hpp"
#include "racah/zsupport.hpp"

using namespace racah;

namespace {

const GroupId g0{0};
const GroupId g1{1};
const GroupId g2{2};

TauLabel first_label(const Weight3& a, const Weight3& b, const Weight3& c) {
  return enumerate_tau(a, b, c).front();
}

SixJProblem adjoint_problem() {
  const Weight3 adj{2, 1, 0};
  const TauLabel t = first_label(adj, adj, adj);
  return {adj, adj, adj, adj, adj, adj, {t, t, t, t}};
}

void BM_gamma_series(benchmark::State& state) {
  const GTPattern p{6, 3, 0, 5, 2, 4};
  const MultiIndex6 mu = gt_to_class(p).representative;
  for (auto _ : state) benchmark::DoNotOptimize(gamma_series(mu, g0));
}
BENCHMARK(BM_gamma_series);

void BM_basis_pairing(benchmark::State& state) {
  // pairing cost on the densest vectors of a mid-size weight
  const auto pats = enumerate_patterns({4, 2, 0});
  const SparsePoly f = agkz_basis(pats.front(), g0);
  const SparsePoly g = agkz_basis(pats.back(), g0);
  for (auto _ : state) benchmark::DoNotOptimize(pairing(f, f) + pairing(f, g));
}
BENCHMARK(BM_basis_pairing);

void BM_semiinvariant_expand(benchmark::State& state) {
  const TauLabel t = first_label({3, 1, 0}, {3, 1, 0}, {3, 1, 0});
  for (auto _ : state)
    benchmark::DoNotOptimize(semiinvariant_poly(t, g0, g1, g2));
}
BENCHMARK(BM_semiinvariant_expand);

void BM_z_points(benchmark::State& state) {
  const TauLabel t = first_label({3, 1, 0}, {3, 1, 0}, {3, 1, 0});
  for (auto _ : state) benchmark::DoNotOptimize(z_points(t));
}
BENCHMARK(BM_z_points);

void BM_projection(benchmark::State& state) {
  const TauLabel t = first_label({2, 1, 0}, {2, 1, 0}, {2, 1, 0});
  const SparsePoly f = semiinvariant_poly(t, g0, g1, g2);
  for (auto _ : state) {
    SparsePoly p = agkz_project(f, g0);
    p = agkz_project(p, g1);
    p = agkz_project(p, g2);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_projection);

void BM_threej(benchmark::State& state) {
  const Weight3 adj{2, 1, 0};
  const TauLabel t = first_label(adj, adj, adj);
  const auto pats = enumerate_patterns(adj);
  const ThreeJQuery q{{adj, adj, adj},
                      {pats.front(), pats.back(), pats[pats.size() / 2]},
                      t};
  for (auto _ : state) benchmark::DoNotOptimize(threej_value(q));
}
BENCHMARK(BM_threej);

// The sixj benchmarks measure the per-call join and contraction work; the
// per-label coefficient maps and tensors are cached after the first pass.

void BM_sixj_lattice_warm(benchmark::State& state) {
  const SixJProblem p = adjoint_problem();
  benchmark::DoNotOptimize(sixj_lattice(p));
  for (auto _ : state) benchmark::DoNotOptimize(sixj_lattice(p));
}
BENCHMARK(BM_sixj_lattice_warm);

void BM_sixj_contract_warm(benchmark::State& state) {
  const SixJProblem p = adjoint_problem();
  benchmark::DoNotOptimize(sixj_contract(p));
  for (auto _ : state) benchmark::DoNotOptimize(sixj_contract(p));
}
BENCHMARK(BM_sixj_contract_warm);

void BM_sixj_by_definition_warm(benchmark::State& state) {
  const SixJProblem p = adjoint_problem();
  benchmark::DoNotOptimize(sixj_by_definition(p));
  for (auto _ : state) benchmark::DoNotOptimize(sixj_by_definition(p));
}
BENCHMARK(BM_sixj_by_definition_warm);

}  // namespace

BENCHMARK_MAIN();

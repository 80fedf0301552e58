// Serial vs OpenMP pricing and row activity on a case-study sized LP.

#include <benchmark/benchmark.h>

#include <random>

#include "prepos/casestudy.hpp"
#include "prepos/formulation.hpp"
#include "prepos/lp/kernels.hpp"

namespace {

using namespace prepos;

const LinearProgram& case_lp() {
  static const LinearProgram lp = [] {
    CaseStudyConfig cfg;
    cfg.stage_branching = {48, 1, 1};
    cfg.occurrence_probability = 0.2;
    cfg.states_file = PREPOS_BENCH_STATES;
    return build_lp(build_case_study(cfg));
  }();
  return lp;
}

std::vector<double> random_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = u(rng);
  return v;
}

template <auto Kernel>
void BM_Pricing(benchmark::State& state) {
  const auto& lp = case_lp();
  const lp::CscMatrix a = lp::to_csc(lp.problem);
  const std::vector<double> duals = random_vector(a.rows, 1);
  const std::vector<char> eligible(a.cols, 1);
  for (auto _ : state) {
    auto r = Kernel(a, lp.problem.cost, duals, eligible, 1e-7);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * a.nnz());
}

template <auto Kernel>
void BM_RowActivity(benchmark::State& state) {
  const auto& lp = case_lp();
  const lp::CsrMatrix a = lp::to_csr(lp.problem);
  const std::vector<double> x = random_vector(a.cols, 2);
  std::vector<double> out(a.rows);
  for (auto _ : state) {
    Kernel(a, x, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.index.size()));
}

BENCHMARK(BM_Pricing<lp::price_dantzig_serial>)->Name("pricing/serial");
BENCHMARK(BM_Pricing<lp::price_dantzig_parallel>)->Name("pricing/parallel");
BENCHMARK(BM_RowActivity<lp::row_activity_serial>)->Name("row_activity/serial");
BENCHMARK(BM_RowActivity<lp::row_activity_parallel>)->Name("row_activity/parallel");

}  // namespace

BENCHMARK_MAIN();

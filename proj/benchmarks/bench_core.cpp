#include <benchmark/benchmark.h>

#include <Eigen/Dense>
#include <cstdint>

#include "lassolab/designs.hpp"
#include "lassolab/estimators.hpp"
#include "lassolab/gauss.hpp"
#include "lassolab/mc.hpp"
#include "lassolab/rng.hpp"

namespace {

using namespace lassolab;

void BM_risk_soft(benchmark::State& state) {
  double lambda = 0.1;
  for (auto _ : state) {
    lambda += 1e-12;
    benchmark::DoNotOptimize(gauss::risk_soft(lambda, 0.7));
  }
}
BENCHMARK(BM_risk_soft);

void BM_mills_erfc_branch(benchmark::State& state) {
  double t = 3.0;
  for (auto _ : state) {
    t += 1e-12;
    benchmark::DoNotOptimize(gauss::mills_ratio(t));
  }
}
BENCHMARK(BM_mills_erfc_branch);

void BM_mills_continued_fraction(benchmark::State& state) {
  double t = 20.0;
  for (auto _ : state) {
    t += 1e-12;
    benchmark::DoNotOptimize(gauss::mills_ratio(t));
  }
}
BENCHMARK(BM_mills_continued_fraction);

void BM_normal_quantile(benchmark::State& state) {
  double p = 0.1234;
  for (auto _ : state) {
    p += 1e-12;
    benchmark::DoNotOptimize(normal_quantile(p));
  }
}
BENCHMARK(BM_normal_quantile);

void BM_lasso_diagonal(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  auto inst = designs::make_alpha_instance(d, d, std::sqrt(double(d)), 4.0);
  Eigen::VectorXd theta = Eigen::VectorXd::Zero(d);
  theta[d / 2] = 1.5;
  Rng gen(7);
  Eigen::VectorXd y = designs::sample_observation(inst.design, theta, 1.0, gen);
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimators::lasso_diagonal(inst.design, y, 0.3));
  }
  state.SetComplexityN(d);
}
BENCHMARK(BM_lasso_diagonal)->Range(64, 4096)->Complexity(benchmark::oN);

void BM_oracle_lasso(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  auto inst = designs::make_alpha_instance(d, d, std::sqrt(double(d)), 4.0);
  Eigen::VectorXd theta = Eigen::VectorXd::Zero(d);
  theta[d / 2] = 1.5;
  Rng gen(7);
  Eigen::VectorXd y = designs::sample_observation(inst.design, theta, 1.0, gen);
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimators::oracle_lasso(inst.design, y, theta));
  }
  state.SetComplexityN(d);
}
BENCHMARK(BM_oracle_lasso)->Range(64, 4096)->Complexity(benchmark::oNLogN);

void BM_run_experiment(benchmark::State& state) {
  auto inst = designs::make_alpha_instance(64, 64, 8.0, 4.0);
  Eigen::VectorXd theta = Eigen::VectorXd::Zero(64);
  theta[32] = 1.5;
  mc::ExperimentConfig config(inst.design, theta);
  config.B = 8.0;
  config.alpha = 4.0;
  config.estimators = {estimators::EstimatorSpec::parse("ols"),
                       estimators::EstimatorSpec::parse("lasso:oracle")};
  config.trials = 50;
  config.master_seed = 42;
  config.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mc::run_experiment(config));
  }
}
BENCHMARK(BM_run_experiment);

}  // namespace

BENCHMARK_MAIN();

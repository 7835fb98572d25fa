#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "lassolab/designs.hpp"
#include "lassolab/estimators.hpp"

// Deterministic Monte Carlo engine for estimator risk measurement.
//
// Reproducibility contract: trial t draws its observation from a generator
// seeded with mix64(master_seed, t); estimator slot e of trial t, when it
// needs private randomness (the lifted estimators), uses a generator seeded
// with mix64(mix64(master_seed, t), 1 + e).  Every estimator in a run sees
// the identical observation within a trial (paired comparison).  Per-trial
// squared errors land in preallocated slots indexed by trial, and summaries
// are aggregated by pairwise summation in a fixed tree order, so the output
// is bit-identical for a fixed master seed regardless of thread count.

namespace lassolab::mc {

// 1000 below n = 1024, 300 at or above (large designs are memory-heavy).
int default_trials(int n);

using AnyDesign = std::variant<designs::DiagonalDesign, designs::DenseDesign>;

struct ExperimentConfig {
  ExperimentConfig(AnyDesign design, Eigen::VectorXd theta_star)
      : design(std::move(design)), theta_star(std::move(theta_star)) {}

  AnyDesign design;
  Eigen::VectorXd theta_star;
  double sigma = 1.0;
  double B = 1.0;    // class bound used by auto thresholds and the lift
  double alpha = 1.0;  // recorded in output rows
  double p = 0.0;
  double R = 1.0;  // radius for auto thresholds when p > 0
  int s = 1;       // sparsity for auto thresholds when p = 0
  std::vector<estimators::EstimatorSpec> estimators;
  int trials = 0;  // 0 = default_trials(n)
  std::uint64_t master_seed = 0;
  int threads = 0;  // 0 = hardware concurrency
};

struct TrialSummary {
  int n = 0;
  int d = 0;
  double B = 1.0;
  double alpha = 1.0;
  double p = 0.0;
  std::string estimator;
  int trials = 0;
  double mean_err = 0.0;
  double std_err = 0.0;  // sample standard deviation / sqrt(trials)
  std::uint64_t master_seed = 0;
};

// One summary per estimator, in config order.
std::vector<TrialSummary> run_experiment(const ExperimentConfig& config);

// The adversarial-scaling sweep: for each n, an instance with d = n,
// B = sqrt(n), scale ratio alpha_star(p), and the worst-case signal.  Each n
// runs under sub-seed mix64(master_seed, n); rows report the user-level
// master seed.
struct SweepConfig {
  double p = 0.0;
  double sigma = 1.0;
  double R = 1.0;
  int s = 1;
  std::vector<estimators::EstimatorSpec> estimators;
  int trials = 0;  // 0 = default_trials(n) per sweep point
  std::uint64_t master_seed = 0;
  int threads = 0;
};

std::vector<TrialSummary> sweep(const SweepConfig& config,
                                const std::vector<int>& n_values);

// CSV with header n,d,B,alpha,p,estimator,trials,mean_err,stderr,master_seed;
// doubles printed with %.17g (round-trip exact).  with_timestamp prepends a
// "# generated ..." comment line (off by default to keep output byte-stable).
std::string to_csv(const std::vector<TrialSummary>& rows,
                   bool with_timestamp = false);
void write_csv(const std::string& path, const std::vector<TrialSummary>& rows,
               bool with_timestamp = false);

// Self-contained SVG: log-log axes (n vs mean_err), one polyline per
// estimator label.  Rows with nonpositive mean_err are skipped.
std::string to_svg(const std::vector<TrialSummary>& rows);
void write_svg(const std::string& path, const std::vector<TrialSummary>& rows);

}  // namespace lassolab::mc

// Acceptance gate: every release-blocking property in one binary, one
// PASS/FAIL line per criterion.  Criteria 1-4 are exact analytic checks with
// wall-clock budgets; 5-8 are Monte Carlo bound checks with statistical
// slack; 9 drives the installed command-line tool end to end (its path is
// argv[1]).  Exit code 0 iff every criterion passes.

#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lassolab/designs.hpp"
#include "lassolab/estimators.hpp"
#include "lassolab/gauss.hpp"
#include "lassolab/mc.hpp"
#include "lassolab/theory.hpp"
#include "lassolab/verification.hpp"
#include "support/test_oracles.hpp"

using namespace lassolab;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool pass,
            const std::string& detail) {
  std::printf("%s  criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", id,
              name.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::string describe_checks(const std::vector<verify::Check>& checks) {
  std::ostringstream out;
  int failed = 0;
  double worst = 1e300;
  for (const auto& c : checks) {
    if (!c.pass) {
      ++failed;
      out << " [" << c.name << " margin " << c.margin << "]";
    }
    worst = std::min(worst, c.margin);
  }
  std::ostringstream head;
  head << checks.size() << " checks, " << failed
       << " failed, min margin " << worst << out.str();
  return head.str();
}

// ---- criterion 1: inequality suite under 30 s ----
void criterion_inequalities() {
  const auto start = std::chrono::steady_clock::now();
  auto checks = verify::inequality_checks(1e-3);
  const auto envelope = verify::envelope_quadrature_checks();
  checks.insert(checks.end(), envelope.begin(), envelope.end());
  const double elapsed = seconds_since(start);
  const bool all_pass =
      std::all_of(checks.begin(), checks.end(),
                  [](const verify::Check& c) { return c.pass; });
  char timing[64];
  std::snprintf(timing, sizeof timing, " in %.1f s (budget 30 s)", elapsed);
  report(1, "risk/Mills inequalities and quadrature envelope",
         all_pass && elapsed < 30.0, describe_checks(checks) + timing);
}

// ---- criterion 2: pinch-point constant ----
void criterion_pinch() {
  const auto check = verify::pinch_point_check();
  char detail[96];
  std::snprintf(detail, sizeof detail, "margin %.3e against 1e-12",
                check.margin);
  report(2, "envelope pinch equals 145223897/400000000", check.pass, detail);
}

// ---- criterion 3: constant chain with exact last link ----
void criterion_constants() {
  const auto checks = verify::constant_chain_checks();
  const bool all_pass =
      checks.size() == 4 &&
      std::all_of(checks.begin(), checks.end(),
                  [](const verify::Check& c) { return c.pass; });
  report(3, "lower-bound constant chain down to 9/20000 (exact)", all_pass,
         describe_checks(checks));
}

// ---- criterion 4: oracle equivalences under 60 s ----
void criterion_oracles() {
  const auto start = std::chrono::steady_clock::now();
  auto checks = verify::oracle_grid_checks(100);
  const auto tsup = verify::t_sup_equivalence_checks();
  checks.insert(checks.end(), tsup.begin(), tsup.end());

  // closed-form diagonal lasso against an accelerated proximal solver
  Rng rng(777);
  double worst_gap = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const int d = 2 + static_cast<int>(rng.next_u64() % 47);
    const auto inst =
        test_oracles::random_diagonal_instance(rng, 64, d, 8.0, 1.0);
    const double lambda = 0.05 + 1.95 * rng.next_uniform();
    const auto closed = estimators::lasso_diagonal(inst.design, inst.y, lambda);
    const auto iterative =
        test_oracles::fista_lasso_diagonal(inst.design, inst.y, lambda);
    worst_gap =
        std::max(worst_gap, (closed - iterative).cwiseAbs().maxCoeff());
  }
  verify::Check prox;
  prox.name = "lasso-closed-vs-proximal";
  prox.pass = worst_gap <= 1e-8;
  prox.margin = 1e-8 - worst_gap;
  checks.push_back(prox);

  const double elapsed = seconds_since(start);
  const bool all_pass =
      std::all_of(checks.begin(), checks.end(),
                  [](const verify::Check& c) { return c.pass; });
  char timing[64];
  std::snprintf(timing, sizeof timing, " in %.1f s (budget 60 s)", elapsed);
  report(4, "exact minimizers agree with grid/brute-force/proximal oracles",
         all_pass && elapsed < 60.0, describe_checks(checks) + timing);
}

// ---- criterion 5: thresholded-ols risk bound on random dense designs ----
void criterion_stols_bound() {
  Rng rng(20260814);
  const int n = 256, d = 64;
  const double b = 8.0, sigma = 1.0;
  bool pass = true;
  std::ostringstream detail;
  double worst_rate_frac = 0.0, worst_rho_excess = -1e300;
  for (int i = 0; i < 20; ++i) {
    const int s = (i % 3 == 0) ? 1 : (i % 3 == 1 ? 2 : 4);
    const auto dense = test_oracles::random_inclass_dense(rng, n, d, b);
    Eigen::VectorXd theta = Eigen::VectorXd::Zero(d);
    std::set<int> support;
    while (static_cast<int>(support.size()) < s) {
      support.insert(static_cast<int>(rng.next_u64() % d));
    }
    for (int idx : support) theta[idx] = rng.next_normal();

    const auto params = theory::ProblemParams::hard(n, d, sigma, b, s);
    mc::ExperimentConfig cfg(dense, theta);
    cfg.sigma = sigma;
    cfg.B = b;
    cfg.s = s;
    cfg.estimators = {estimators::EstimatorSpec::parse("stols:auto")};
    cfg.trials = 2000;
    cfg.master_seed = mix64(9001, static_cast<std::uint64_t>(i));
    const auto row = mc::run_experiment(cfg)[0];

    const double rate_bound = theory::stols_risk_bound(params).value;
    const double eta = estimators::stols_eta(params);
    const double rho_bound =
        theory::rho_n(theta, eta, sigma, b, n) + 3.0 * row.std_err;
    worst_rate_frac = std::max(worst_rate_frac, row.mean_err / rate_bound);
    worst_rho_excess =
        std::max(worst_rho_excess, row.mean_err - rho_bound);
    if (row.mean_err > rate_bound || row.mean_err > rho_bound) {
      pass = false;
      detail << " [design " << i << " s=" << s << " mean " << row.mean_err
             << " rate-bound " << rate_bound << " rho-bound " << rho_bound
             << "]";
    }
  }
  std::ostringstream head;
  head << "20 designs in class(8), worst mean/rate-bound "
       << worst_rate_frac << ", worst mean - rho-bound " << worst_rho_excess
       << detail.str();
  report(5, "thresholded-ols risk within both guarantees on dense designs",
         pass, head.str());
}

// ---- criterion 6: oracle-lasso error above the certified floor ----
void criterion_lasso_floor() {
  bool pass = true;
  std::ostringstream detail;
  for (double p : {0.0, 1.0}) {
    const auto params =
        p == 0.0 ? theory::ProblemParams::hard(256, 256, 1.0, 16.0, 1)
                 : theory::ProblemParams::weak(1.0, 256, 256, 1.0, 16.0, 1.0);
    const double alpha = theory::alpha_star(p, params);
    const auto inst = designs::make_alpha_instance(256, 256, 16.0, alpha);
    const Eigen::VectorXd theta =
        theory::worst_theta(p, params, alpha, inst.k);
    mc::ExperimentConfig cfg(inst.design, theta);
    cfg.B = 16.0;
    cfg.alpha = alpha;
    cfg.p = p;
    cfg.s = 1;
    cfg.R = 1.0;
    cfg.estimators = {estimators::EstimatorSpec::parse("lasso:oracle"),
                      estimators::EstimatorSpec::parse("stols:auto")};
    cfg.trials = 400;
    cfg.master_seed = 1789;
    const auto rows = mc::run_experiment(cfg);
    const auto& oracle = rows[0];
    const double floor = theory::lasso_lower_bound(p, params, alpha).value;
    detail << " [p=" << p << " oracle mean " << oracle.mean_err << " floor "
           << floor << " stderr " << oracle.std_err << "]";
    if (oracle.mean_err < floor - 3.0 * oracle.std_err) pass = false;
  }
  report(6, "oracle-lasso error stays above the 0.00045 floor (400 paired trials)",
         pass, detail.str());
}

// ---- criterion 7: separation trend along the adversarial sweep ----
void criterion_separation() {
  bool pass = true;
  std::ostringstream detail;
  const std::vector<int> sizes{64, 256, 1024, 4096};
  for (double p : {0.0, 1.0}) {
    mc::SweepConfig cfg;
    cfg.p = p;
    cfg.estimators = {estimators::EstimatorSpec::parse("stols:auto"),
                      estimators::EstimatorSpec::parse("lasso:oracle")};
    cfg.trials = 300;
    cfg.master_seed = 31337;
    const auto rows = mc::sweep(cfg, sizes);
    detail << " [p=" << p << " ratios";
    double prev_ratio = 1e300;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      const auto& stols_row = rows[2 * i];
      const auto& oracle_row = rows[2 * i + 1];
      const double ratio = stols_row.mean_err / oracle_row.mean_err;
      detail << " " << ratio;
      if (!(ratio < prev_ratio)) pass = false;
      prev_ratio = ratio;
      const int n = sizes[i];
      const double b = std::sqrt(static_cast<double>(n));
      const auto params =
          p == 0.0 ? theory::ProblemParams::hard(n, n, 1.0, b, 1)
                   : theory::ProblemParams::weak(1.0, n, n, 1.0, b, 1.0);
      if (stols_row.mean_err > theory::stols_risk_bound(params).value) {
        pass = false;
        detail << "(bound violated at n=" << n << ")";
      }
    }
    detail << "]";
  }
  report(7, "thresholded-ols/oracle-lasso ratio strictly decreasing in n",
         pass, detail.str());
}

// ---- criterion 8: lifted estimator matches the sequence-model risk ----
void criterion_lift() {
  const int n = 256, d = 32;
  const double b = 8.0, sigma = 1.0;
  Eigen::VectorXd scales(d);
  for (int i = 0; i < d; ++i) {
    scales[i] = 4.0 / b + (1.0 / b - 4.0 / b) * i / (d - 1.0);
  }
  designs::DiagonalDesign design(n, scales);
  Eigen::VectorXd theta = Eigen::VectorXd::Zero(d);
  theta[3] = 0.8;
  theta[17] = -0.5;

  // W = (sigma^2 B / n) I - sigma^2 (X^T X)^{-1} must be PSD
  double min_w = 1e300;
  for (int i = 0; i < d; ++i) {
    min_w = std::min(min_w, sigma * sigma * (b - 1.0 / scales[i]) / n);
  }

  const auto params = theory::ProblemParams::hard(n, d, sigma, b, 2);
  const double eta = estimators::stols_eta(params);
  const double nu = std::sqrt(sigma * sigma * b / n);
  double sequence_risk = 0.0;
  for (int i = 0; i < d; ++i) {
    sequence_risk += gauss::risk_soft_scaled(nu, eta, theta[i]);
  }

  mc::ExperimentConfig cfg(design, theta);
  cfg.sigma = sigma;
  cfg.B = b;
  cfg.s = 2;
  cfg.estimators = {estimators::EstimatorSpec::parse("lifted:soft:64")};
  cfg.trials = 1500;
  cfg.master_seed = 2718;
  const auto row = mc::run_experiment(cfg)[0];
  const double bound = sequence_risk + 3.0 * row.std_err;

  std::ostringstream detail;
  detail << "min diag(W) " << min_w << ", lifted mean " << row.mean_err
         << " vs sequence risk + 3se " << bound;
  report(8, "lifted soft threshold within the sequence-model risk",
         min_w >= 0.0 && row.mean_err <= bound, detail.str());
}

// ---- criterion 9: CLI determinism ----
int run_cli(const std::string& cli, const std::string& args) {
  const std::string cmd = "\"" + cli + "\" " + args + " > /dev/null 2>&1";
  return std::system(cmd.c_str());
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

void criterion_determinism(const char* cli_path) {
  if (cli_path == nullptr) {
    report(9, "simulate determinism", false,
           "pass the command-line binary as argv[1]");
    return;
  }
  const auto dir =
      std::filesystem::temp_directory_path() / "lassolab_acceptance";
  std::filesystem::create_directories(dir);
  const std::string cli(cli_path);
  const std::string base = " simulate --p 0 --n 48,96 --trials 60 --seed 5 ";
  const auto a = dir / "a.csv";
  const auto b = dir / "b.csv";
  const auto c = dir / "c.csv";
  bool pass = true;
  std::ostringstream detail;
  if (run_cli(cli, base + "--threads 2 --out " + a.string()) != 0 ||
      run_cli(cli, base + "--threads 2 --out " + b.string()) != 0 ||
      run_cli(cli, base + "--threads 5 --out " + c.string()) != 0) {
    pass = false;
    detail << "command failed";
  } else {
    const std::string ta = slurp(a), tb = slurp(b), tc = slurp(c);
    if (ta.empty() || ta != tb) {
      pass = false;
      detail << " repeat run not byte-identical";
    }
    if (ta != tc) {
      pass = false;
      detail << " thread count changed the output";
    }
    if (pass) {
      detail << "byte-identical across reruns and thread counts ("
             << ta.size() << " bytes)";
    }
  }
  std::filesystem::remove_all(dir);
  report(9, "simulate reruns are byte-identical, threads do not matter", pass,
         detail.str());
}

}  // namespace

int main(int argc, char** argv) {
  criterion_inequalities();
  criterion_pinch();
  criterion_constants();
  criterion_oracles();
  criterion_stols_bound();
  criterion_lasso_floor();
  criterion_separation();
  criterion_lift();
  criterion_determinism(argc > 1 ? argv[1] : nullptr);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

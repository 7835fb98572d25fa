#include <cstdio>
#include <memory>
#include <vector>

#include "commands.hpp"
#include "lassolab/designs.hpp"
#include "lassolab/gauss.hpp"
#include "lassolab/theory.hpp"

void register_risk(CLI::App& app, int& /*exit_code*/) {
  struct Opts {
    double lambda = 0.0;
    double mu = 0.0;
    double nu = 1.0;
    double tau = 0.0;
    double sigma = 1.0;
    int n = 0;  // 0 = dimension of --scales
    std::vector<double> scales;
    std::vector<double> theta;
  };
  auto opts = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand(
      "risk",
      "evaluate the soft-thresholding risk, its two-sided envelope, and "
      "(given a diagonal design) the penalized-regression risk floor");
  sub->add_option("--lambda", opts->lambda, "threshold level (>= 0)")
      ->capture_default_str();
  sub->add_option("--mu", opts->mu, "signal mean")->capture_default_str();
  sub->add_option("--nu", opts->nu, "noise scale for the envelope (> 0)")
      ->capture_default_str();
  sub->add_option("--tau", opts->tau,
                  "normalized penalty for the risk floor (> 0, needs --scales)")
      ->capture_default_str();
  sub->add_option("--sigma", opts->sigma, "noise standard deviation for the floor")
      ->capture_default_str();
  sub->add_option("--n", opts->n, "sample size for the floor (0 = #scales)")
      ->capture_default_str();
  sub->add_option("--scales", opts->scales,
                  "comma list of diagonal design scales (enables the floor)")
      ->delimiter(',');
  sub->add_option("--theta", opts->theta,
                  "comma list of signal coordinates for the floor (default 0)")
      ->delimiter(',');
  finish_subcommand(sub, [opts] {
    namespace gauss = lassolab::gauss;
    std::printf("risk_soft(%g, %g) = %.17g\n", opts->lambda, opts->mu,
                gauss::risk_soft(opts->lambda, opts->mu));
    std::printf("risk_at_zero(%g) = %.17g\n", opts->lambda,
                gauss::risk_at_zero(opts->lambda));
    const auto env =
        gauss::johnstone_envelope(opts->nu, opts->lambda, opts->mu);
    std::printf("envelope_lower(nu=%g) = %.17g\n", opts->nu, env.lower);
    std::printf("envelope_upper(nu=%g) = %.17g\n", opts->nu, env.upper);
    if (!opts->scales.empty()) {
      if (!(opts->tau > 0.0)) {
        throw std::invalid_argument("risk floor needs --tau > 0");
      }
      const int d = static_cast<int>(opts->scales.size());
      const int n = opts->n > 0 ? opts->n : d;
      Eigen::VectorXd scales =
          Eigen::Map<const Eigen::VectorXd>(opts->scales.data(), d);
      Eigen::VectorXd theta = Eigen::VectorXd::Zero(d);
      if (!opts->theta.empty()) {
        if (static_cast<int>(opts->theta.size()) != d) {
          throw std::invalid_argument("--theta must match --scales in length");
        }
        theta = Eigen::Map<const Eigen::VectorXd>(opts->theta.data(), d);
      }
      const lassolab::designs::DiagonalDesign design(n, scales);
      std::printf("lasso_risk_lower(tau=%g) = %.17g\n", opts->tau,
                  lassolab::theory::lasso_risk_lower_diag(design, theta,
                                                          opts->sigma,
                                                          opts->tau));
    }
  });
}

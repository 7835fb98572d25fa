#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>

#include "lassolab/designs.hpp"
#include "lassolab/params.hpp"
#include "lassolab/rng.hpp"

// Estimators for y = X theta + noise:
//
//   OLS            argmin ||X t - y||^2
//   Lasso          argmin (1/n)||X t - y||^2 + 2 lambda ||t||_1; on diagonal
//                  designs this decouples into S_{lambda/s_i}(z_i) with
//                  z = OLS(y)
//   oracle Lasso   the Lasso at the error-minimizing lambda for a known
//                  theta; exact via piecewise-quadratic minimization
//   STOLS          S_eta applied coordinate-wise to OLS
//   lifted         Monte Carlo average of a sequence-model estimator applied
//                  to OLS plus calibrated extra noise, which makes the input
//                  an exact N(theta, (sigma^2 B/n) I) observation

namespace lassolab::estimators {

struct OracleResult {
  double lambda_star = 0.0;  // 0 encodes the open lambda -> 0+ limit
  double error = 0.0;        // squared l2 error at the infimum
};

Eigen::VectorXd ols(const designs::DiagonalDesign& design, const Eigen::VectorXd& y);
Eigen::VectorXd ols(const designs::DenseDesign& design, const Eigen::VectorXd& y);

// Requires lambda > 0.
Eigen::VectorXd lasso_diagonal(const designs::DiagonalDesign& design,
                               const Eigen::VectorXd& y, double lambda);

// Exact inf over lambda in (0, inf) of ||lasso_diagonal(lambda) - theta||^2.
// The per-coordinate error is piecewise quadratic in lambda with breakpoint
// s_i |z_i|; the sweep over sorted breakpoints evaluates every interval
// minimizer, every endpoint, the lambda -> 0+ (OLS) limit, and the constant
// tail ||theta||^2, in O(d log d).
OracleResult oracle_lasso(const designs::DiagonalDesign& design,
                          const Eigen::VectorXd& y,
                          const Eigen::VectorXd& theta_star);

// Requires eta >= 0.
Eigen::VectorXd stols(const designs::DiagonalDesign& design,
                      const Eigen::VectorXd& y, double eta);
Eigen::VectorXd stols(const designs::DenseDesign& design,
                      const Eigen::VectorXd& y, double eta);

// Risk-calibrated thresholds (natural logs):
//   p > 0: eta = sqrt(2 R^2 tau^2 log(e d tau^p))
//   p = 0: eta = sqrt(2 (sigma^2 B / n) log(e d / s))
// Throws std::domain_error when the log factor is negative (formula
// undefined).
double stols_eta(const theory::ProblemParams& params);

// Same rules with B replaced by the design's certified class bound.
double stols_eta_adaptive(const theory::ProblemParams& params,
                          const designs::DiagonalDesign& design);
double stols_eta_adaptive(const theory::ProblemParams& params,
                          const designs::DenseDesign& design);

using SequenceEstimator = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

// theta_tilde = (1/draws) sum_j inner(OLS(y) + xi_j), xi ~ N(0, W) with
// W = (sigma^2 B / n) I - sigma^2 (X^T X)^{-1}.  Requires the design to be in
// class(B) so W >= 0 (eigenvalue tolerance -1e-10, negatives clipped to 0);
// throws otherwise.  Deterministic given the rng.
Eigen::VectorXd lift_sequence_estimator(const SequenceEstimator& inner,
                                        const designs::DiagonalDesign& design,
                                        const Eigen::VectorXd& y, double sigma,
                                        double B, int draws, Rng& rng);
Eigen::VectorXd lift_sequence_estimator(const SequenceEstimator& inner,
                                        const designs::DenseDesign& design,
                                        const Eigen::VectorXd& y, double sigma,
                                        double B, int draws, Rng& rng);

// Parsed estimator selector.  Textual forms: "ols", "lasso:<lambda>",
// "lasso:oracle", "stols:<eta>", "stols:auto", "stols:auto-adaptive",
// "lifted:soft:<draws>".
struct EstimatorSpec {
  enum class Kind {
    kOls,
    kLassoFixed,
    kLassoOracle,
    kStolsFixed,
    kStolsAuto,
    kStolsAutoAdaptive,
    kLiftedSoft,
  };

  Kind kind = Kind::kOls;
  double param = 0.0;  // lambda (kLassoFixed) or eta (kStolsFixed)
  int draws = 64;      // kLiftedSoft

  static EstimatorSpec parse(const std::string& text);
  std::string label() const;
};

}  // namespace lassolab::estimators

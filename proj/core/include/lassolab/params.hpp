#pragma once

#include <limits>
#include <string>

// Problem parameterization shared by the estimator threshold rules and the
// analytic bounds.
//
//   p = 0:       hard sparsity, at most s nonzero coordinates;
//   p in (0,1]:  weak sparsity, ||theta||_p <= R (p-quasinorm radius).
//
// The derived quantities tau_sq = sigma^2 B / (R^2 n) (inverse signal-to-noise
// ratio) and noise_sq = sigma^2 B / n (worst coordinate noise variance under a
// class-B design) drive every rate formula.

namespace lassolab::theory {

struct ProblemParams {
  double p = 0.0;
  int n = 0;
  int d = 0;
  double sigma = 1.0;
  double B = 1.0;
  double R = 1.0;  // radius, meaningful for p > 0
  int s = 1;       // sparsity, meaningful for p = 0

  static ProblemParams weak(double p, int n, int d, double sigma, double B, double R);
  static ProblemParams hard(int n, int d, double sigma, double B, int s);

  double tau_sq() const { return sigma * sigma * B / (R * R * n); }
  double noise_sq() const { return sigma * sigma * B / n; }
};

// One evaluated analytic bound.  `value` is the constant-free core; the
// bracket [lower_const, upper_const] gives the explicit multiplicative
// constants when the source provides them (NaN otherwise).  For pure
// pass/fail checks, regime_ok carries the verdict.
struct BoundReport {
  double value = 0.0;
  bool regime_ok = true;
  std::string citation;
  std::string detail;
  double lower_const = std::numeric_limits<double>::quiet_NaN();
  double upper_const = std::numeric_limits<double>::quiet_NaN();
};

}  // namespace lassolab::theory

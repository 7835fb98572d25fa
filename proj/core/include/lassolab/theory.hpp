#pragma once

#include <Eigen/Core>
#include <utility>
#include <vector>

#include "lassolab/designs.hpp"
#include "lassolab/params.hpp"

// Analytic rate and bound evaluators for sparse sequence regression under a
// class-B design ((1/n) X^T X >= (1/B) I):
//
//   * minimax_rate        -- the rate core R^2 (tau^2 log(e d tau^p))^{1-p/2}
//                            (weak sparsity) or (sigma^2 B/n) s log(e d/s)
//                            (hard sparsity), with explicit constant brackets.
//   * stols_risk_bound    -- 6x the rate core: guaranteed risk of soft
//                            thresholding applied to OLS at the auto threshold.
//   * t_sup               -- sup of sum_i min(theta_i^2, zeta^2) over the
//                            sparsity class, in closed form; _bruteforce is an
//                            independent small-d maximizer used to certify it.
//   * rho_n               -- uniform-over-designs risk bound for thresholded
//                            OLS at threshold eta.
//   * lasso_risk_lower_*  -- pointwise and minimax lower bounds for the Lasso
//                            on diagonal designs, including the adversarial
//                            scale profile (alpha on half the coordinates).
//   * alpha_star          -- the scale ratio maximizing the Lasso lower bound.
//   * worst_theta         -- the signal the lower-bound argument places on the
//                            badly-scaled coordinate block.
//
// Everything here is a pure function of its arguments.

namespace lassolab::theory {

// Constant in front of the Lasso minimax lower bound.
inline constexpr double kLassoLowerConstant = 9.0 / 20000.0;

// Rate core with constant bracket [7/2000, 1203] (p > 0) or [3/500, 2]
// (p = 0).  For p > 0, regime_ok reports tau^2 in [d^{-2/p}, 1/log(ed)].
// Throws std::domain_error if the p > 0 core base tau^2 log(e d tau^p) is
// not positive (rate undefined).
BoundReport minimax_rate(const ProblemParams& params);

// 6x the corresponding rate core; same regime flag.
BoundReport stols_risk_bound(const ProblemParams& params);

// Exact sup of sum_i min(theta_i^2, zeta^2) over { ||theta||_0 <= s } (p = 0,
// R_or_s is the integer sparsity) or { ||theta||_p^p <= R^p } (p in (0,1],
// R_or_s is the radius).  Closed form:
//   p = 0:                 zeta^2 s
//   R <= zeta:             R^2
//   R >= zeta d^{1/p}:     zeta^2 d
//   otherwise:             eps R^2 (floor(u) + frac(u)^{2/p}),
//                          eps = zeta^2/R^2, u = eps^{-p/2}.
double t_sup(double zeta, double p, double R_or_s, int d);

// Independent maximizer over the equal-mass families
//   { m coordinates at R m^{-1/p} : m = 1..d }  and
//   { m coordinates at zeta plus one at (R^p - m zeta^p)^{1/p} }.
// Intended for d <= 12 cross-checks of t_sup.
double t_sup_bruteforce(double zeta, double p, double R_or_s, int d);

// Uniform-over-class-B-designs risk bound for soft-thresholded OLS:
//   d nu^2 e^{-(eta/nu)^2/2} + sum_i min(theta_i^2, nu^2)
//                            + sum_i min(theta_i^2, eta^2),
// with nu^2 = sigma^2 B / n.
double rho_n(const Eigen::VectorXd& theta, double eta, double sigma, double B,
             int n);

// Pointwise Lasso risk lower bound on a diagonal design at penalty
// lambda = tau sqrt(sigma^2/n):
//   (1/16) [ sum_i (sigma^2/(n s_i)) e^{-tau^2/(2 s_i)} / ((tau/sqrt(s_i))^3 + 1)
//          + sum_i min(theta_i^2, (sigma^2/(n s_i))(1 + tau^2/s_i)) ].
double lasso_risk_lower_diag(const designs::DiagonalDesign& design,
                             const Eigen::VectorXd& theta, double sigma,
                             double tau);

// Minimax lower bound for the Lasso over the alpha-scaled design family:
//   (9/20000) min{ sigma^2 B d/(n alpha),
//                  R^2 (sigma^2 B alpha/(R^2 n))^{1-p/2}, R^2 }   (p > 0)
//   (9/20000) min{ sigma^2 B d/(n alpha), sigma^2 B s alpha/n }   (p = 0)
// Requires alpha >= 1 and d >= 2.
BoundReport lasso_lower_bound(double p, const ProblemParams& params,
                              double alpha);

// Scale ratio maximizing lasso_lower_bound: (tau^2 d^{2/p})^{p/(4-p)} for
// p > 0, sqrt(d/s) for p = 0; clipped below at 1.
double alpha_star(double p, const ProblemParams& params);

// Signal used by the lower-bound argument, supported on coordinates
// k+1 .. k+len just past the midpoint (k must equal floor(d/2)):
//   p = 0:  2 sqrt(sigma^2 B alpha / n) on min(s, k) coordinates;
//   p > 0:  with delta = 2 tau sqrt(alpha): if 4 tau^2 alpha <= 1, level
//           R delta on min(k, floor(delta^{-p})) coordinates, else R e_{k+1}.
// The returned vector satisfies its norm constraint (asserted to 1e-12).
Eigen::VectorXd worst_theta(double p, const ProblemParams& params, double alpha,
                            int k);

// Verifies the explicit constant chain behind kLassoLowerConstant:
//   q = P(|N(0,1)| >= 3/2) = 2 Phi(-3/2) >= (10/27) e^{-9/8} >= 3/25,
//   q^2/32 >= 9/20000, and (3/25)^2/32 == 9/20000 exactly (integer check).
// One report per link; regime_ok carries pass/fail.
std::vector<BoundReport> constants_check();

// The sample-size-dependent hard instance: alpha = n R^2 / (sigma^2 B)
// (requires >= 1), paired with theta = R e_{k+1}.
std::pair<designs::AlphaInstance, Eigen::VectorXd> data_dependent_instance(
    const ProblemParams& params);

// Regime in which the separation argument applies: n <= (sigma^2 B/R^2) d^2.
bool suboptimality_regime_ok(const ProblemParams& params);

}  // namespace lassolab::theory

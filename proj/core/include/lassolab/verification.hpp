#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Analytic check suites behind the `verify` command and the acceptance tests.
// Every check is deterministic; `margin` is the smallest slack observed over
// the scanned grid (negative means the stated inequality/identity failed).

namespace lassolab::verify {

struct Check {
  std::string name;       // short slug, stable across releases
  std::string statement;  // the inequality or identity being checked
  bool pass = false;
  double margin = 0.0;
  std::string detail;  // where the extreme slack was attained, grid sizes, ...
};

// Pointwise bounds for t in (0, 10] stepped by grid_step:
//   risk_at_zero(t) in [0.25 e^{-t^2/2}/(t^3+1), 1 + t^2],
//   mills_ratio(t) >= t(t^2+5)/(t^4+6t^2+3),
//   mills_ratio(t) >= 5/4 - t + (5/8)t^2 - (1/3)t^3,
// plus the single-point g(0.9)(1+0.9^3) >= 145223897/400000000.
std::vector<Check> inequality_checks(double grid_step = 1e-3);

// Quadrature value of the risk integral inside the two-sided envelope
// [upper/2, upper] on a 10x10x21 (nu, tau, mu) grid, absolute slack 1e-8.
std::vector<Check> envelope_quadrature_checks();

// min{P(t)/24, 2(t+t^4)/(3+6t^2+t^4)} at t = 9/10 equals 145223897/400000000
// within 1e-12.  fault=true perturbs the expected constant so the check must
// fail (harness self-test).
Check pinch_point_check(bool fault = false);

// The explicit constant chain behind the Lasso lower-bound constant 9/20000.
std::vector<Check> constant_chain_checks();

// Closed-form t_sup against the brute-force family maximizer on a
// (p, d <= 12, R, zeta) grid, tolerance 1e-12.
std::vector<Check> t_sup_equivalence_checks();

// Exact oracle-lambda minimizer against a 1e4-point grid search with local
// zoom refinement, 1e-9 relative agreement on random instances (d <= 16).
std::vector<Check> oracle_grid_checks(int instances = 100,
                                      std::uint64_t seed = 2026);

// Everything above, in order.
std::vector<Check> all_checks(double grid_step = 1e-3,
                              bool self_test_fault = false);

}  // namespace lassolab::verify

#pragma once

#include <functional>

// Independent evaluators of the soft-thresholding risk integral by adaptive
// quadrature on the defining expectation.  These never call the closed forms
// in gauss.hpp; they exist to cross-check them (unit tests and the `verify`
// command) and are too slow for Monte Carlo loops.

namespace lassolab::oracles {

// Adaptive Simpson integration of f on [a, b] to absolute tolerance tol.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol);

// E[(mu - S_tau(x))^2] with x ~ N(mu, nu^2), integrated piecewise between the
// kinks of S_tau; absolute error around 1e-12 at desk scale.
double risk_soft_scaled_quadrature(double nu, double tau, double mu);

// The nu = 1 case r(tau, mu).
double risk_soft_quadrature(double tau, double mu);

}  // namespace lassolab::oracles

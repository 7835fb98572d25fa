#pragma once

// Scalar Gaussian special functions and the exact risk theory of the scalar
// soft-thresholding estimator:
//
//   r(lambda, mu) = E[(mu - S_lambda(x))^2],  x ~ N(mu, 1),
//
// together with the Mills-ratio decomposition of r(t, 0), two-sided risk
// envelopes, and the polynomial lower envelopes used to certify a uniform
// positive floor for r(t, 0) * (1 + t^3) * e^{t^2/2}.

namespace lassolab::gauss {

struct RiskEnvelope {
  double lower = 0.0;  // always upper / 2
  double upper = 0.0;
};

// Standard normal density and distribution function.  The cdf is evaluated
// through erfc so both tails keep full precision (absolute error <= 1e-14).
double normal_pdf(double x);
double normal_cdf(double x);

// Mills ratio M(t) = Phi(-t) / phi(t) for t >= 0, relative error <= 1e-12.
// Direct ratio for t <= 8; backward-evaluated continued fraction
// M(t) = 1/(t + 1/(t + 2/(t + 3/(...)))) above, where the direct ratio
// starts losing relative precision.  Throws std::invalid_argument for t < 0.
double mills_ratio(double t);

// S_eta(v) = sign(v) * max(|v| - eta, 0) for eta >= 0.
double soft_threshold(double eta, double v);

// r(lambda, mu) in closed form via truncated Gaussian moments:
//   r = (1+l^2)[Phi(mu-l) + Phi(-mu-l)] + mu^2 [Phi(l-mu) - Phi(-l-mu)]
//       - (l+mu) phi(l-mu) + (mu-l) phi(l+mu).
// Absolute error <= 1e-10 at desk scale.  Requires lambda >= 0.
double risk_soft(double lambda, double mu);

// E[(mu - S_tau(x))^2] for x ~ N(mu, nu^2); equals nu^2 r(tau/nu, mu/nu).
// Throws for nu <= 0.
double risk_soft_scaled(double nu, double tau, double mu);

// g(t) = M(t)(1 + t^2) - t and the identity r(t, 0) = sqrt(2/pi) e^{-t^2/2} g(t)
// (equivalently 2 phi(t) g(t)); both strictly positive for t >= 0.
double g_mills(double t);
double risk_at_zero(double t);

// Two-sided envelope for the noise-scaled risk:
//   upper = min{ nu^2 r(tau/nu, 0) + mu^2,  nu^2 + tau^2 },  lower = upper / 2,
// and risk_soft_scaled(nu, tau, mu) always lies inside.  Throws for nu <= 0.
RiskEnvelope johnstone_envelope(double nu, double tau, double mu);

// Lower bounds for the Mills ratio, valid for all t >= 0:
//   mills_lower_rational(t) = t(t^2+5) / (t^4+6t^2+3)
//   mills_lower_cubic(t)    = 5/4 - t + (5/8)t^2 - (1/3)t^3
double mills_lower_rational(double t);
double mills_lower_cubic(double t);

// Lower envelopes for h(t) = g(t)(1 + t^3).  g_envelope_poly (= P(t)/24 with P
// of degree 8) bounds inf_{s <= t} h(s) on [0,1]; g_envelope_rational
// (= 2(t+t^4)/(3+6t^2+t^4)) bounds inf_{s >= t} h(s).  Their pointwise min at
// any t in [0,1] therefore bounds inf_{s > 0} h(s); at t = 9/10 the min equals
// 145223897/400000000, which certifies r(t,0) >= (1/4) e^{-t^2/2} / (t^3 + 1).
double g_envelope_poly(double t);
double g_envelope_rational(double t);
double g_envelope_min(double t);

// The certified floor (1/4) e^{-t^2/2} / (t^3 + 1) for r(t, 0).
double risk_at_zero_floor(double t);

}  // namespace lassolab::gauss

#include "lassolab/gauss.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lassolab::gauss {

namespace {
constexpr double kInvSqrt2Pi = 0.39894228040143267793994605993438186847;
constexpr double kInvSqrt2 = 0.70710678118654752440084436210484903928;
}  // namespace

double normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double normal_cdf(double x) { return 0.5 * std::erfc(-x * kInvSqrt2); }

double mills_ratio(double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("mills_ratio: requires t >= 0");
  if (t <= 8.0) return normal_cdf(-t) / normal_pdf(t);
  // 64 backward levels give full double precision for every t >= 8.
  double f = 0.0;
  for (int k = 64; k >= 1; --k) f = k / (t + f);
  return 1.0 / (t + f);
}

double soft_threshold(double eta, double v) {
  if (!(eta >= 0.0)) throw std::invalid_argument("soft_threshold: requires eta >= 0");
  const double m = std::abs(v) - eta;
  return m > 0.0 ? std::copysign(m, v) : 0.0;
}

double risk_soft(double lambda, double mu) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("risk_soft: requires lambda >= 0");
  const double a = lambda - mu;  // lower kink of S_lambda in noise units
  const double b = lambda + mu;  // upper kink, reflected
  return (1.0 + lambda * lambda) * (normal_cdf(-a) + normal_cdf(-b)) +
         mu * mu * (normal_cdf(a) - normal_cdf(-b)) - b * normal_pdf(a) +
         (mu - lambda) * normal_pdf(b);
}

double risk_soft_scaled(double nu, double tau, double mu) {
  if (!(nu > 0.0)) throw std::invalid_argument("risk_soft_scaled: requires nu > 0");
  return nu * nu * risk_soft(tau / nu, mu / nu);
}

double g_mills(double t) { return mills_ratio(t) * (1.0 + t * t) - t; }

double risk_at_zero(double t) { return 2.0 * normal_pdf(t) * g_mills(t); }

RiskEnvelope johnstone_envelope(double nu, double tau, double mu) {
  if (!(nu > 0.0)) throw std::invalid_argument("johnstone_envelope: requires nu > 0");
  const double upper =
      std::min(nu * nu * risk_at_zero(tau / nu) + mu * mu, nu * nu + tau * tau);
  return {0.5 * upper, upper};
}

double mills_lower_rational(double t) {
  const double t2 = t * t;
  return t * (t2 + 5.0) / (t2 * (t2 + 6.0) + 3.0);
}

double mills_lower_cubic(double t) {
  return 1.25 + t * (-1.0 + t * (0.625 - t / 3.0));
}

double g_envelope_poly(double t) {
  // P(t) = -8t^8 + 15t^7 - 32t^6 + 37t^5 - 33t^4 - 2t^3 + 45t^2 - 48t + 30
  const double p =
      30.0 +
      t * (-48.0 +
           t * (45.0 +
                t * (-2.0 + t * (-33.0 + t * (37.0 + t * (-32.0 + t * (15.0 - 8.0 * t)))))));
  return p / 24.0;
}

double g_envelope_rational(double t) {
  const double t2 = t * t;
  return 2.0 * (t + t2 * t2) / (3.0 + 6.0 * t2 + t2 * t2);
}

double g_envelope_min(double t) {
  return std::min(g_envelope_poly(t), g_envelope_rational(t));
}

double risk_at_zero_floor(double t) {
  return 0.25 * std::exp(-0.5 * t * t) / (t * t * t + 1.0);
}

}  // namespace lassolab::gauss

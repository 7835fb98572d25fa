#include "lassolab/theory.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "lassolab/gauss.hpp"

namespace lassolab::theory {

namespace {

void check_common(double p, int n, int d, double sigma, double B) {
  if (p < 0.0 || p > 1.0 || !std::isfinite(p)) {
    throw std::invalid_argument("ProblemParams: requires p in [0, 1]");
  }
  if (d < 1) throw std::invalid_argument("ProblemParams: requires d >= 1");
  if (n < d) throw std::invalid_argument("ProblemParams: requires n >= d");
  if (!(sigma > 0.0)) throw std::invalid_argument("ProblemParams: requires sigma > 0");
  if (!(B > 0.0)) throw std::invalid_argument("ProblemParams: requires B > 0");
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

ProblemParams ProblemParams::weak(double p, int n, int d, double sigma,
                                  double B, double R) {
  check_common(p, n, d, sigma, B);
  if (!(p > 0.0)) throw std::invalid_argument("ProblemParams::weak: requires p > 0");
  if (!(R > 0.0)) throw std::invalid_argument("ProblemParams::weak: requires R > 0");
  ProblemParams out;
  out.p = p;
  out.n = n;
  out.d = d;
  out.sigma = sigma;
  out.B = B;
  out.R = R;
  return out;
}

ProblemParams ProblemParams::hard(int n, int d, double sigma, double B, int s) {
  check_common(0.0, n, d, sigma, B);
  if (s < 1 || s > d) throw std::invalid_argument("ProblemParams::hard: requires s in [1, d]");
  ProblemParams out;
  out.p = 0.0;
  out.n = n;
  out.d = d;
  out.sigma = sigma;
  out.B = B;
  out.s = s;
  return out;
}

BoundReport minimax_rate(const ProblemParams& params) {
  BoundReport report;
  if (params.p == 0.0) {
    if (params.s < 1 || params.s > params.d) {
      throw std::invalid_argument("minimax_rate: requires s in [1, d]");
    }
    const double logf =
        1.0 + std::log(static_cast<double>(params.d) / params.s);
    report.value = params.noise_sq() * params.s * logf;
    report.lower_const = 3.0 / 500.0;
    report.upper_const = 2.0;
    report.citation = "hard-sparsity rate core (sigma^2 B/n) s log(e d/s)";
    report.detail = "noise_sq=" + fmt(params.noise_sq()) +
                    " log_factor=" + fmt(logf);
    return report;
  }
  if (params.p < 0.0 || params.p > 1.0) {
    throw std::invalid_argument("minimax_rate: requires p in [0, 1]");
  }
  const double tau2 = params.tau_sq();
  const double logf = 1.0 + std::log(static_cast<double>(params.d)) +
                      0.5 * params.p * std::log(tau2);
  const double base = tau2 * logf;
  if (!(base > 0.0)) {
    throw std::domain_error(
        "minimax_rate: tau^2 log(e d tau^p) is not positive, rate undefined");
  }
  report.value = params.R * params.R *
                 std::pow(base, 1.0 - 0.5 * params.p);
  report.lower_const = 7.0 / 2000.0;
  report.upper_const = 1203.0;
  const double lo = std::pow(static_cast<double>(params.d), -2.0 / params.p);
  const double hi = 1.0 / (1.0 + std::log(static_cast<double>(params.d)));
  report.regime_ok = tau2 >= lo && tau2 <= hi;
  report.citation =
      "weak-sparsity rate core R^2 (tau^2 log(e d tau^p))^{1-p/2}";
  report.detail = "tau_sq=" + fmt(tau2) + " log_factor=" + fmt(logf) +
                  " regime=[" + fmt(lo) + "," + fmt(hi) + "]";
  return report;
}

BoundReport stols_risk_bound(const ProblemParams& params) {
  BoundReport report = minimax_rate(params);
  report.value *= 6.0;
  report.lower_const = std::numeric_limits<double>::quiet_NaN();
  report.upper_const = std::numeric_limits<double>::quiet_NaN();
  report.citation = "soft-thresholded OLS risk bound: 6x the rate core";
  return report;
}

double t_sup(double zeta, double p, double R_or_s, int d) {
  if (!(zeta >= 0.0)) throw std::invalid_argument("t_sup: requires zeta >= 0");
  if (d < 1) throw std::invalid_argument("t_sup: requires d >= 1");
  if (p == 0.0) {
    const int s = static_cast<int>(R_or_s);
    if (static_cast<double>(s) != R_or_s || s < 1 || s > d) {
      throw std::invalid_argument("t_sup: requires integer s in [1, d]");
    }
    return zeta * zeta * s;
  }
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("t_sup: requires p in [0, 1]");
  const double R = R_or_s;
  if (!(R > 0.0)) throw std::invalid_argument("t_sup: requires R > 0");
  if (zeta == 0.0) return 0.0;
  if (R <= zeta) return R * R;
  // u = (R/zeta)^p counts how many coordinates fit at level zeta.
  const double u = std::pow(R / zeta, p);
  if (u >= static_cast<double>(d)) return zeta * zeta * d;
  const double fl = std::floor(u);
  const double fr = u - fl;
  return zeta * zeta * (fl + std::pow(fr, 2.0 / p));
}

double t_sup_bruteforce(double zeta, double p, double R_or_s, int d) {
  if (!(zeta >= 0.0)) throw std::invalid_argument("t_sup_bruteforce: requires zeta >= 0");
  if (d < 1) throw std::invalid_argument("t_sup_bruteforce: requires d >= 1");
  if (p == 0.0) {
    const int s = static_cast<int>(R_or_s);
    if (static_cast<double>(s) != R_or_s || s < 1 || s > d) {
      throw std::invalid_argument("t_sup_bruteforce: requires integer s in [1, d]");
    }
    // Best play: s coordinates at (or above) the clip level.
    return zeta * zeta * s;
  }
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("t_sup_bruteforce: requires p in [0, 1]");
  }
  const double R = R_or_s;
  if (!(R > 0.0)) throw std::invalid_argument("t_sup_bruteforce: requires R > 0");
  if (zeta == 0.0) return 0.0;
  const auto clipped = [zeta](double v) { return std::min(v * v, zeta * zeta); };
  double best = 0.0;
  // Family 1: m coordinates at the equal-mass level R m^{-1/p}.
  for (int m = 1; m <= d; ++m) {
    best = std::max(best, m * clipped(R * std::pow(m, -1.0 / p)));
  }
  // Family 2: m coordinates exactly at the clip level zeta, remaining budget
  // (R^p - m zeta^p)^{1/p} on one extra coordinate.
  const double zp = std::pow(zeta, p);
  const double Rp = std::pow(R, p);
  for (int m = 0; m <= d; ++m) {
    const double rem = Rp - m * zp;
    if (rem < 0.0) break;
    double value = m * zeta * zeta;
    if (m < d && rem > 0.0) value += clipped(std::pow(rem, 1.0 / p));
    best = std::max(best, value);
  }
  return best;
}

double rho_n(const Eigen::VectorXd& theta, double eta, double sigma, double B,
             int n) {
  if (!(eta >= 0.0)) throw std::invalid_argument("rho_n: requires eta >= 0");
  if (n < 1) throw std::invalid_argument("rho_n: requires n >= 1");
  const double nu2 = sigma * sigma * B / n;
  const double d = static_cast<double>(theta.size());
  double total = d * nu2 * std::exp(-eta * eta / (2.0 * nu2));
  for (Eigen::Index i = 0; i < theta.size(); ++i) {
    const double t2 = theta[i] * theta[i];
    total += std::min(t2, nu2) + std::min(t2, eta * eta);
  }
  return total;
}

double lasso_risk_lower_diag(const designs::DiagonalDesign& design,
                             const Eigen::VectorXd& theta, double sigma,
                             double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("lasso_risk_lower_diag: requires tau > 0");
  if (theta.size() != design.d()) {
    throw std::invalid_argument("lasso_risk_lower_diag: theta has wrong dimension");
  }
  const double noise = sigma * sigma / design.n();
  double total = 0.0;
  for (int i = 0; i < design.d(); ++i) {
    const double si = design.scales()[i];
    const double var_i = noise / si;       // coordinate noise variance
    const double t = tau / std::sqrt(si);  // normalized threshold
    total += var_i * std::exp(-0.5 * t * t) / (t * t * t + 1.0);
    total += std::min(theta[i] * theta[i], var_i * (1.0 + t * t));
  }
  return total / 16.0;
}

BoundReport lasso_lower_bound(double p, const ProblemParams& params,
                              double alpha) {
  if (!(alpha >= 1.0)) throw std::invalid_argument("lasso_lower_bound: requires alpha >= 1");
  if (params.d < 2) throw std::invalid_argument("lasso_lower_bound: requires d >= 2");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("lasso_lower_bound: requires p in [0, 1]");
  BoundReport report;
  const double spread = params.noise_sq() * params.d / alpha;
  double core;
  if (p == 0.0) {
    if (params.s < 1 || params.s > params.d) {
      throw std::invalid_argument("lasso_lower_bound: requires s in [1, d]");
    }
    const double bias = params.noise_sq() * params.s * alpha;
    core = std::min(spread, bias);
    report.detail = "min{" + fmt(spread) + "," + fmt(bias) + "}";
  } else {
    const double R2 = params.R * params.R;
    const double bias = R2 * std::pow(params.tau_sq() * alpha, 1.0 - 0.5 * p);
    core = std::min({spread, bias, R2});
    report.detail = "min{" + fmt(spread) + "," + fmt(bias) + "," + fmt(R2) + "}";
  }
  report.value = kLassoLowerConstant * core;
  report.lower_const = kLassoLowerConstant;
  report.citation =
      "Lasso minimax lower bound over the alpha-scaled design family";
  return report;
}

double alpha_star(double p, const ProblemParams& params) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("alpha_star: requires p in [0, 1]");
  double value;
  if (p == 0.0) {
    if (params.s < 1 || params.s > params.d) {
      throw std::invalid_argument("alpha_star: requires s in [1, d]");
    }
    value = std::sqrt(static_cast<double>(params.d) / params.s);
  } else {
    value = std::pow(
        params.tau_sq() * std::pow(static_cast<double>(params.d), 2.0 / p),
        p / (4.0 - p));
  }
  return std::max(value, 1.0);
}

Eigen::VectorXd worst_theta(double p, const ProblemParams& params, double alpha,
                            int k) {
  if (k != params.d / 2) {
    throw std::invalid_argument("worst_theta: requires k = floor(d/2)");
  }
  if (!(alpha >= 1.0)) throw std::invalid_argument("worst_theta: requires alpha >= 1");
  Eigen::VectorXd theta = Eigen::VectorXd::Zero(params.d);
  if (p == 0.0) {
    const int len = std::min(params.s, k);
    const double level = 2.0 * std::sqrt(params.noise_sq() * alpha);
    for (int i = 0; i < len; ++i) theta[k + i] = level;
    return theta;
  }
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("worst_theta: requires p in [0, 1]");
  const double tau2_alpha = params.tau_sq() * alpha;
  if (4.0 * tau2_alpha <= 1.0) {
    const double delta = 2.0 * std::sqrt(tau2_alpha);
    const int len = static_cast<int>(
        std::min(static_cast<double>(k), std::floor(std::pow(delta, -p))));
    for (int i = 0; i < len; ++i) theta[k + i] = params.R * delta;
    const double norm_p = len * std::pow(params.R * delta, p);
    if (norm_p > std::pow(params.R, p) * (1.0 + 1e-12)) {
      throw std::logic_error("worst_theta: p-norm constraint violated");
    }
  } else {
    theta[k] = params.R;
  }
  return theta;
}

std::vector<BoundReport> constants_check() {
  std::vector<BoundReport> reports;
  const double q = 2.0 * gauss::normal_cdf(-1.5);
  const double analytic = (10.0 / 27.0) * std::exp(-9.0 / 8.0);

  BoundReport link1;
  link1.value = q;
  link1.regime_ok = q >= analytic;
  link1.citation = "two-sided tail mass 2 Phi(-3/2)";
  link1.detail = "q=" + fmt(q) + " >= (10/27)e^{-9/8}=" + fmt(analytic);
  reports.push_back(link1);

  BoundReport link2;
  link2.value = analytic;
  link2.regime_ok = analytic >= 3.0 / 25.0;
  link2.citation = "analytic tail floor (10/27) e^{-9/8}";
  link2.detail = fmt(analytic) + " >= 3/25=" + fmt(3.0 / 25.0);
  reports.push_back(link2);

  BoundReport link3;
  link3.value = q * q / 32.0;
  link3.regime_ok = q * q / 32.0 >= kLassoLowerConstant;
  link3.citation = "squared tail mass over 32";
  link3.detail = fmt(q * q / 32.0) + " >= 9/20000=" + fmt(kLassoLowerConstant);
  reports.push_back(link3);

  // (3/25)^2 / 32 == 9/20000: cross-multiplied, 3*3*20000 == 9*25*25*32.
  const std::int64_t lhs = 3LL * 3LL * 20000LL;
  const std::int64_t rhs = 9LL * 25LL * 25LL * 32LL;
  BoundReport link4;
  link4.value = kLassoLowerConstant;
  link4.regime_ok = lhs == rhs;
  link4.citation = "(3/25)^2/32 equals 9/20000 (exact integer identity)";
  link4.detail = std::to_string(lhs) + " == " + std::to_string(rhs);
  reports.push_back(link4);
  return reports;
}

std::pair<designs::AlphaInstance, Eigen::VectorXd> data_dependent_instance(
    const ProblemParams& params) {
  const double alpha = params.n * params.R * params.R /
                       (params.sigma * params.sigma * params.B);
  if (!(alpha >= 1.0)) {
    throw std::invalid_argument(
        "data_dependent_instance: n R^2/(sigma^2 B) < 1, no valid scale ratio");
  }
  designs::AlphaInstance instance =
      designs::make_alpha_instance(params.n, params.d, params.B, alpha);
  Eigen::VectorXd theta = Eigen::VectorXd::Zero(params.d);
  theta[instance.k] = params.R;
  return {std::move(instance), std::move(theta)};
}

bool suboptimality_regime_ok(const ProblemParams& params) {
  const double d = static_cast<double>(params.d);
  return params.n <=
         params.sigma * params.sigma * params.B / (params.R * params.R) * d * d;
}

}  // namespace lassolab::theory

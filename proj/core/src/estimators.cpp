#include "lassolab/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "lassolab/gauss.hpp"

namespace lassolab::estimators {

namespace {

void check_dims(int expected, Eigen::Index got, const char* who) {
  if (got != expected) {
    throw std::invalid_argument(std::string(who) + ": observation has wrong dimension");
  }
}

}  // namespace

Eigen::VectorXd ols(const designs::DiagonalDesign& design, const Eigen::VectorXd& y) {
  check_dims(design.n(), y.size(), "ols");
  Eigen::VectorXd z(design.d());
  for (int i = 0; i < design.d(); ++i) z[i] = y[i] / design.column_scale(i);
  return z;
}

Eigen::VectorXd ols(const designs::DenseDesign& design, const Eigen::VectorXd& y) {
  check_dims(design.n(), y.size(), "ols");
  return design.qr().solve(y);
}

Eigen::VectorXd lasso_diagonal(const designs::DiagonalDesign& design,
                               const Eigen::VectorXd& y, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("lasso_diagonal: requires lambda > 0");
  Eigen::VectorXd z = ols(design, y);
  for (int i = 0; i < design.d(); ++i) {
    z[i] = gauss::soft_threshold(lambda / design.scales()[i], z[i]);
  }
  return z;
}

OracleResult oracle_lasso(const designs::DiagonalDesign& design,
                          const Eigen::VectorXd& y,
                          const Eigen::VectorXd& theta_star) {
  if (theta_star.size() != design.d()) {
    throw std::invalid_argument("oracle_lasso: theta has wrong dimension");
  }
  const Eigen::VectorXd z = ols(design, y);
  const Eigen::VectorXd& s = design.scales();

  // For lambda < bp_i = s_i |z_i| coordinate i contributes the quadratic
  // (r_i - g_i lambda)^2 with r_i = z_i - theta_i, g_i = sign(z_i)/s_i; for
  // lambda >= bp_i it sits at zero and contributes theta_i^2 (continuous at
  // the breakpoint).
  struct Piece {
    double bp, a, b, c, theta_sq;
  };
  std::vector<Piece> pieces;
  pieces.reserve(design.d());
  double qa = 0.0, qb = 0.0, qc = 0.0;  // active quadratic qa l^2 + qb l + qc
  double settled = 0.0;                 // sum of theta_i^2 over dead coordinates
  for (int i = 0; i < design.d(); ++i) {
    const double theta_sq = theta_star[i] * theta_star[i];
    const double bp = s[i] * std::abs(z[i]);
    if (bp <= 0.0) {
      settled += theta_sq;
      continue;
    }
    const double g = (z[i] > 0.0 ? 1.0 : -1.0) / s[i];
    const double r = z[i] - theta_star[i];
    pieces.push_back({bp, g * g, -2.0 * r * g, r * r, theta_sq});
    qa += g * g;
    qb += -2.0 * r * g;
    qc += r * r;
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& l, const Piece& r) { return l.bp < r.bp; });

  // lambda -> 0+ limit: the OLS error (argmin 0 is the sentinel for it).
  double best_err = qc + settled;
  double best_lam = 0.0;
  const auto consider = [&](double err, double lam) {
    if (err < best_err) {
      best_err = err;
      best_lam = lam;
    }
  };

  double lo = 0.0;
  std::size_t i = 0;
  while (i < pieces.size()) {
    const double hi = pieces[i].bp;
    if (qa > 0.0) {
      const double v = -qb / (2.0 * qa);
      if (v > lo && v < hi) consider((qa * v + qb) * v + qc + settled, v);
    }
    consider((qa * hi + qb) * hi + qc + settled, hi);
    while (i < pieces.size() && pieces[i].bp == hi) {
      qa -= pieces[i].a;
      qb -= pieces[i].b;
      qc -= pieces[i].c;
      settled += pieces[i].theta_sq;
      ++i;
    }
    lo = hi;
  }
  // Beyond the last breakpoint the error is the constant ||theta||^2, whose
  // value was already probed at that breakpoint by continuity.
  //
  // The running accumulators locate the minimizer but their removals leave
  // cancellation dust (the value can even dip below zero when the true
  // minimum is ~0), so re-evaluate the objective exactly at the winner.
  double exact = 0.0;
  for (int i = 0; i < design.d(); ++i) {
    const double est = gauss::soft_threshold(best_lam / s[i], z[i]);
    const double dev = est - theta_star[i];
    exact += dev * dev;
  }
  return {best_lam, exact};
}

Eigen::VectorXd stols(const designs::DiagonalDesign& design,
                      const Eigen::VectorXd& y, double eta) {
  Eigen::VectorXd z = ols(design, y);
  for (int i = 0; i < z.size(); ++i) z[i] = gauss::soft_threshold(eta, z[i]);
  return z;
}

Eigen::VectorXd stols(const designs::DenseDesign& design,
                      const Eigen::VectorXd& y, double eta) {
  Eigen::VectorXd z = ols(design, y);
  for (int i = 0; i < z.size(); ++i) z[i] = gauss::soft_threshold(eta, z[i]);
  return z;
}

double stols_eta(const theory::ProblemParams& params) {
  if (params.p < 0.0 || params.p > 1.0) {
    throw std::invalid_argument("stols_eta: requires p in [0, 1]");
  }
  if (params.p == 0.0) {
    if (params.s < 1 || params.s > params.d) {
      throw std::invalid_argument("stols_eta: requires s in [1, d]");
    }
    const double logf = 1.0 + std::log(static_cast<double>(params.d) / params.s);
    return std::sqrt(2.0 * params.noise_sq() * logf);
  }
  const double tau2 = params.tau_sq();
  // log(e d tau^p) = 1 + log d + (p/2) log tau^2
  const double logf = 1.0 + std::log(static_cast<double>(params.d)) +
                      0.5 * params.p * std::log(tau2);
  if (!(logf >= 0.0)) {
    throw std::domain_error("stols_eta: log factor is negative, threshold undefined");
  }
  return std::sqrt(2.0 * params.R * params.R * tau2 * logf);
}

namespace {

template <typename Design>
double eta_adaptive(const theory::ProblemParams& params, const Design& design) {
  theory::ProblemParams adapted = params;
  adapted.B = designs::min_certified_B(design);
  return stols_eta(adapted);
}

template <typename Design>
Eigen::VectorXd lift_impl(const SequenceEstimator& inner, const Design& design,
                          const Eigen::VectorXd& y, double sigma, double B,
                          int draws, Rng& rng,
                          const Eigen::VectorXd& w_eigenvalues,
                          const Eigen::MatrixXd* basis) {
  if (draws < 1) throw std::invalid_argument("lift_sequence_estimator: requires draws >= 1");
  const int d = design.d();
  Eigen::VectorXd w_sqrt(d);
  for (int i = 0; i < d; ++i) {
    if (w_eigenvalues[i] < -1e-10) {
      throw std::invalid_argument(
          "lift_sequence_estimator: calibration covariance is indefinite "
          "(design violates the stated class bound)");
    }
    w_sqrt[i] = std::sqrt(std::max(w_eigenvalues[i], 0.0));
  }
  const Eigen::VectorXd z = ols(design, y);
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(d);
  Eigen::VectorXd g(d);
  for (int j = 0; j < draws; ++j) {
    for (int i = 0; i < d; ++i) g[i] = w_sqrt[i] * rng.next_normal();
    if (basis != nullptr) {
      acc += inner(z + (*basis) * g);
    } else {
      acc += inner(z + g);
    }
  }
  return acc / draws;
}

}  // namespace

double stols_eta_adaptive(const theory::ProblemParams& params,
                          const designs::DiagonalDesign& design) {
  return eta_adaptive(params, design);
}

double stols_eta_adaptive(const theory::ProblemParams& params,
                          const designs::DenseDesign& design) {
  return eta_adaptive(params, design);
}

Eigen::VectorXd lift_sequence_estimator(const SequenceEstimator& inner,
                                        const designs::DiagonalDesign& design,
                                        const Eigen::VectorXd& y, double sigma,
                                        double B, int draws, Rng& rng) {
  // W is diagonal with entries sigma^2 B/n - sigma^2/(n s_i).
  const int n = design.n();
  Eigen::VectorXd w(design.d());
  for (int i = 0; i < design.d(); ++i) {
    w[i] = sigma * sigma * (B - 1.0 / design.scales()[i]) / n;
  }
  return lift_impl(inner, design, y, sigma, B, draws, rng, w, nullptr);
}

Eigen::VectorXd lift_sequence_estimator(const SequenceEstimator& inner,
                                        const designs::DenseDesign& design,
                                        const Eigen::VectorXd& y, double sigma,
                                        double B, int draws, Rng& rng) {
  // Diagonalize (1/n) X^T X = V L V^T; then W = V diag(w) V^T with
  // w_i = sigma^2 B/n - sigma^2/(n l_i), and sqrt(W) g = V diag(sqrt w) g.
  const Eigen::MatrixXd gram =
      design.matrix().transpose() * design.matrix() / static_cast<double>(design.n());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  Eigen::VectorXd w(design.d());
  for (int i = 0; i < design.d(); ++i) {
    w[i] = sigma * sigma * (B - 1.0 / es.eigenvalues()[i]) / design.n();
  }
  const Eigen::MatrixXd basis = es.eigenvectors();
  return lift_impl(inner, design, y, sigma, B, draws, rng, w, &basis);
}

EstimatorSpec EstimatorSpec::parse(const std::string& text) {
  const auto bad = [&text]() {
    return std::invalid_argument("unknown estimator spec: \"" + text + "\"");
  };
  const auto to_double = [&](const std::string& part) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != part.size()) throw bad();
    return v;
  };

  EstimatorSpec spec;
  if (text == "ols") {
    spec.kind = Kind::kOls;
    return spec;
  }
  if (text.rfind("lasso:", 0) == 0) {
    const std::string rest = text.substr(6);
    if (rest == "oracle") {
      spec.kind = Kind::kLassoOracle;
      return spec;
    }
    spec.kind = Kind::kLassoFixed;
    spec.param = to_double(rest);
    if (!(spec.param > 0.0)) throw bad();
    return spec;
  }
  if (text.rfind("stols:", 0) == 0) {
    const std::string rest = text.substr(6);
    if (rest == "auto") {
      spec.kind = Kind::kStolsAuto;
      return spec;
    }
    if (rest == "auto-adaptive") {
      spec.kind = Kind::kStolsAutoAdaptive;
      return spec;
    }
    spec.kind = Kind::kStolsFixed;
    spec.param = to_double(rest);
    if (!(spec.param >= 0.0)) throw bad();
    return spec;
  }
  if (text.rfind("lifted:soft:", 0) == 0) {
    const std::string rest = text.substr(12);
    try {
      std::size_t used = 0;
      spec.draws = std::stoi(rest, &used);
      if (used != rest.size()) throw bad();
    } catch (const std::exception&) {
      throw bad();
    }
    if (spec.draws < 1) throw bad();
    spec.kind = Kind::kLiftedSoft;
    return spec;
  }
  throw bad();
}

std::string EstimatorSpec::label() const {
  char buf[64];
  switch (kind) {
    case Kind::kOls:
      return "ols";
    case Kind::kLassoFixed:
      std::snprintf(buf, sizeof buf, "lasso:%g", param);
      return buf;
    case Kind::kLassoOracle:
      return "lasso:oracle";
    case Kind::kStolsFixed:
      std::snprintf(buf, sizeof buf, "stols:%g", param);
      return buf;
    case Kind::kStolsAuto:
      return "stols:auto";
    case Kind::kStolsAutoAdaptive:
      return "stols:auto-adaptive";
    case Kind::kLiftedSoft:
      std::snprintf(buf, sizeof buf, "lifted:soft:%d", draws);
      return buf;
  }
  return "?";
}

}  // namespace lassolab::estimators

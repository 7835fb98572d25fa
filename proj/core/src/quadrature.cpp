#include "lassolab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace lassolab::oracles {

namespace {

constexpr double kInvSqrt2Pi = 0.39894228040143267793994605993438186847;

double simpson(const std::function<double(double)>& f, double a, double fa,
               double b, double fb, double m, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double fa,
             double b, double fb, double m, double fm, double whole,
             double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(f, a, fa, m, fm, lm, flm);
  const double right = simpson(f, m, fm, b, fb, rm, frm);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adapt(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         adapt(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  if (!(b >= a)) throw std::invalid_argument("integrate: requires b >= a");
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fm = f(m);
  return adapt(f, a, fa, b, fb, m, fm, simpson(f, a, fa, b, fb, m, fm), tol, 40);
}

double risk_soft_scaled_quadrature(double nu, double tau, double mu) {
  if (!(nu > 0.0) || !(tau >= 0.0)) {
    throw std::invalid_argument("risk_soft_scaled_quadrature: requires nu > 0, tau >= 0");
  }
  // x = mu + nu z with z standard normal; integrand in z:
  const auto f = [nu, tau, mu](double z) {
    const double x = mu + nu * z;
    double sx = 0.0;
    if (x > tau) sx = x - tau;
    else if (x < -tau) sx = x + tau;
    const double dev = mu - sx;
    return dev * dev * kInvSqrt2Pi * std::exp(-0.5 * z * z);
  };
  // Split at the kinks of S_tau, keep only |z| <= 15 (the Gaussian weight
  // makes everything beyond that smaller than 1e-45 relative), and pre-chunk
  // each smooth piece so the adaptive rule cannot miss the central mass.
  std::vector<double> cuts = {-15.0, 15.0};
  for (double k : {(tau - mu) / nu, (-tau - mu) / nu}) {
    if (k > -15.0 && k < 15.0) cuts.push_back(k);
  }
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i], b = cuts[i + 1];
    const int chunks = std::max(1, static_cast<int>(std::ceil((b - a) / 2.0)));
    for (int c = 0; c < chunks; ++c) {
      const double ca = a + (b - a) * c / chunks;
      const double cb = a + (b - a) * (c + 1) / chunks;
      total += integrate(f, ca, cb, 3e-15);
    }
  }
  return total;
}

double risk_soft_quadrature(double tau, double mu) {
  return risk_soft_scaled_quadrature(1.0, tau, mu);
}

}  // namespace lassolab::oracles

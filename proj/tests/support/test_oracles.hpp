#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "lassolab/designs.hpp"
#include "lassolab/rng.hpp"

// Independent reference implementations used only by tests.  They solve the
// same problems as the library through entirely different algorithms
// (first-order iteration instead of closed forms), so agreement is evidence
// rather than tautology.

namespace test_oracles {

// Accelerated proximal gradient (FISTA) for the diagonal-design Lasso
//   argmin_t (1/n)||X t - y||^2 + 2 lambda ||t||_1
//     = argmin_t sum_i s_i (t_i - z_i)^2 + 2 lambda ||t||_1,  z_i = y_i / X_ii.
// The objective is strongly convex (all s_i > 0), so the iterates converge
// linearly; `iters` around 5000 reaches 1e-10 coordinate accuracy for
// condition numbers up to a few hundred.
inline Eigen::VectorXd fista_lasso_diagonal(
    const lassolab::designs::DiagonalDesign& design, const Eigen::VectorXd& y,
    double lambda, int iters = 5000) {
  const Eigen::VectorXd& s = design.scales();
  const int d = design.d();
  Eigen::VectorXd z(d);
  for (int i = 0; i < d; ++i) z[i] = y[i] / design.column_scale(i);
  const double lip = 2.0 * s.maxCoeff();
  const double cut = 2.0 * lambda / lip;
  Eigen::VectorXd theta = Eigen::VectorXd::Zero(d);
  Eigen::VectorXd momentum = theta;
  double t = 1.0;
  for (int it = 0; it < iters; ++it) {
    Eigen::VectorXd w =
        momentum - (2.0 / lip) * s.cwiseProduct(momentum - z);
    Eigen::VectorXd next(d);
    for (int i = 0; i < d; ++i) {
      next[i] = std::copysign(std::max(std::abs(w[i]) - cut, 0.0), w[i]);
    }
    const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    momentum = next + ((t - 1.0) / t_next) * (next - theta);
    theta = next;
    t = t_next;
  }
  return theta;
}

// Random diagonal design with scales uniform in [1/B, 4] (certified class
// bound at most B) and a matching noisy observation.
struct DiagonalInstance {
  lassolab::designs::DiagonalDesign design;
  Eigen::VectorXd theta;
  Eigen::VectorXd y;
};

inline DiagonalInstance random_diagonal_instance(lassolab::Rng& rng, int n,
                                                 int d, double B,
                                                 double sigma) {
  Eigen::VectorXd scales(d);
  for (int i = 0; i < d; ++i) {
    scales[i] = 1.0 / B + (4.0 - 1.0 / B) * rng.next_uniform();
  }
  lassolab::designs::DiagonalDesign design(n, scales);
  Eigen::VectorXd theta = Eigen::VectorXd::Zero(d);
  for (int i = 0; i < d; ++i) {
    if (rng.next_uniform() < 0.5) theta[i] = 2.0 * rng.next_normal();
  }
  Eigen::VectorXd y = lassolab::designs::sample_observation(design, theta,
                                                            sigma, rng);
  return {std::move(design), std::move(theta), std::move(y)};
}

// Random dense design with (1/n) X^T X = V diag(spec) V^T where spec[0] is
// exactly 1/B and the rest lie in [1/B, 4]: the smallest certified class
// bound is B by construction.
inline lassolab::designs::DenseDesign random_inclass_dense(lassolab::Rng& rng,
                                                           int n, int d,
                                                           double B) {
  Eigen::MatrixXd gauss_left(n, d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < n; ++i) gauss_left(i, j) = rng.next_normal();
  }
  Eigen::MatrixXd gauss_right(d, d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) gauss_right(i, j) = rng.next_normal();
  }
  const Eigen::MatrixXd u =
      Eigen::HouseholderQR<Eigen::MatrixXd>(gauss_left).householderQ() *
      Eigen::MatrixXd::Identity(n, d);
  const Eigen::MatrixXd v =
      Eigen::HouseholderQR<Eigen::MatrixXd>(gauss_right).householderQ() *
      Eigen::MatrixXd::Identity(d, d);
  Eigen::VectorXd spec(d);
  spec[0] = 1.0 / B;
  for (int i = 1; i < d; ++i) {
    spec[i] = 1.0 / B + (4.0 - 1.0 / B) * rng.next_uniform();
  }
  const Eigen::MatrixXd x =
      u * (n * spec).cwiseSqrt().asDiagonal() * v.transpose();
  return lassolab::designs::DenseDesign(x);
}

}  // namespace test_oracles

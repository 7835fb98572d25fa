#pragma once

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

#include "lassolab/rng.hpp"

// Design matrices for the regression model y = X theta + noise, and their
// class parameters:
//
//   class(B):      (1/n) X^T X  >=  (1/B) I   (spectral lower bound)
//   diag class(B): ((1/n) X^T X)^{-1}_{ii} <= B for all i
//
// Diagonal designs X_ii = sqrt(n s_i) are never materialized; all operations
// work on the scale vector s directly in O(d).  Dense designs are materialized
// at desk scale and factorized once at construction.

namespace lassolab::designs {

class DiagonalDesign {
 public:
  // d = scales.size(); requires d >= 1, d <= n, every scale > 0.
  DiagonalDesign(int n, Eigen::VectorXd scales);

  int n() const { return n_; }
  int d() const { return static_cast<int>(s_.size()); }
  const Eigen::VectorXd& scales() const { return s_; }
  // The only nonzero entry of column i: X_ii = sqrt(n s_i).
  double column_scale(int i) const { return std::sqrt(n_ * s_[i]); }

 private:
  int n_;
  Eigen::VectorXd s_;
};

class DenseDesign {
 public:
  // Requires rows >= cols and full column rank (rank-revealing QR check).
  explicit DenseDesign(Eigen::MatrixXd entries);

  int n() const { return static_cast<int>(x_.rows()); }
  int d() const { return static_cast<int>(x_.cols()); }
  const Eigen::MatrixXd& matrix() const { return x_; }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd>& qr() const { return qr_; }

 private:
  Eigen::MatrixXd x_;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr_;
};

// Ill-conditioned diagonal family: k = floor(d/2) leading scales at alpha/B,
// the rest at 1/B; condition number alpha, certified class bound exactly B.
struct AlphaInstance {
  DiagonalDesign design;
  double alpha;
  double B;
  int k;
};

// Requires d >= 2, n >= d, alpha >= 1, B > 0.
AlphaInstance make_alpha_instance(int n, int d, double B, double alpha);

// Smallest B with (1/n) X^T X >= (1/B) I: 1/min_i s_i for diagonal designs,
// 1/lambda_min((1/n) X^T X) for dense ones.  Throws if singular.
double min_certified_B(const DiagonalDesign& design);
double min_certified_B(const DenseDesign& design);

// max_i ((1/n) X^T X)^{-1}_{ii}; always <= min_certified_B.
double diag_class_B(const DiagonalDesign& design);
double diag_class_B(const DenseDesign& design);

// y = X theta + sigma * (iid standard normals); always consumes exactly n
// normal draws so the stream layout does not depend on sigma.
Eigen::VectorXd sample_observation(const DiagonalDesign& design,
                                   const Eigen::VectorXd& theta, double sigma,
                                   Rng& rng);
Eigen::VectorXd sample_observation(const DenseDesign& design,
                                   const Eigen::VectorXd& theta, double sigma,
                                   Rng& rng);

// JSON shape: {n, d, B, alpha, k, s:[...]}.
void to_json(nlohmann::json& j, const AlphaInstance& inst);
void to_json(nlohmann::ordered_json& j, const AlphaInstance& inst);

}  // namespace lassolab::designs

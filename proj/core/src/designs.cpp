#include "lassolab/designs.hpp"

#include <cmath>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace lassolab::designs {

DiagonalDesign::DiagonalDesign(int n, Eigen::VectorXd scales)
    : n_(n), s_(std::move(scales)) {
  if (s_.size() < 1) throw std::invalid_argument("DiagonalDesign: requires d >= 1");
  if (n_ < s_.size()) throw std::invalid_argument("DiagonalDesign: requires d <= n");
  for (Eigen::Index i = 0; i < s_.size(); ++i) {
    if (!(s_[i] > 0.0)) throw std::invalid_argument("DiagonalDesign: scales must be positive");
  }
}

DenseDesign::DenseDesign(Eigen::MatrixXd entries) : x_(std::move(entries)) {
  if (x_.rows() < x_.cols() || x_.cols() < 1) {
    throw std::invalid_argument("DenseDesign: requires n >= d >= 1");
  }
  qr_.compute(x_);
  if (qr_.rank() < x_.cols()) {
    throw std::invalid_argument("DenseDesign: matrix is column-rank deficient");
  }
}

AlphaInstance make_alpha_instance(int n, int d, double B, double alpha) {
  if (d < 2) throw std::invalid_argument("make_alpha_instance: requires d >= 2");
  if (n < d) throw std::invalid_argument("make_alpha_instance: requires n >= d");
  if (!(alpha >= 1.0)) throw std::invalid_argument("make_alpha_instance: requires alpha >= 1");
  if (!(B > 0.0)) throw std::invalid_argument("make_alpha_instance: requires B > 0");
  const int k = d / 2;
  Eigen::VectorXd s = Eigen::VectorXd::Constant(d, 1.0 / B);
  s.head(k).setConstant(alpha / B);
  return AlphaInstance{DiagonalDesign(n, std::move(s)), alpha, B, k};
}

double min_certified_B(const DiagonalDesign& design) {
  return 1.0 / design.scales().minCoeff();
}

namespace {

// Eigendecomposition of (1/n) X^T X with a singularity guard.
Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> gram_eigen(const DenseDesign& design) {
  const Eigen::MatrixXd gram =
      design.matrix().transpose() * design.matrix() / static_cast<double>(design.n());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  const double lmax = es.eigenvalues().maxCoeff();
  const double lmin = es.eigenvalues().minCoeff();
  if (!(lmin > 0.0) || lmin <= 1e-12 * lmax) {
    throw std::invalid_argument("design is numerically singular: no finite class bound");
  }
  return es;
}

}  // namespace

double min_certified_B(const DenseDesign& design) {
  return 1.0 / gram_eigen(design).eigenvalues().minCoeff();
}

double diag_class_B(const DiagonalDesign& design) {
  return design.scales().cwiseInverse().maxCoeff();
}

double diag_class_B(const DenseDesign& design) {
  const auto es = gram_eigen(design);
  const Eigen::MatrixXd& v = es.eigenvectors();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    const double entry =
        (v.row(i).array().square() / es.eigenvalues().array().transpose()).sum();
    worst = std::max(worst, entry);
  }
  return worst;
}

namespace {

Eigen::VectorXd noise_vector(int n, double sigma, Rng& rng) {
  Eigen::VectorXd w(n);
  for (int i = 0; i < n; ++i) w[i] = sigma * rng.next_normal();
  return w;
}

}  // namespace

Eigen::VectorXd sample_observation(const DiagonalDesign& design,
                                   const Eigen::VectorXd& theta, double sigma,
                                   Rng& rng) {
  if (theta.size() != design.d()) {
    throw std::invalid_argument("sample_observation: theta has wrong dimension");
  }
  if (!(sigma >= 0.0)) throw std::invalid_argument("sample_observation: requires sigma >= 0");
  Eigen::VectorXd y = noise_vector(design.n(), sigma, rng);
  for (int i = 0; i < design.d(); ++i) y[i] += design.column_scale(i) * theta[i];
  return y;
}

Eigen::VectorXd sample_observation(const DenseDesign& design,
                                   const Eigen::VectorXd& theta, double sigma,
                                   Rng& rng) {
  if (theta.size() != design.d()) {
    throw std::invalid_argument("sample_observation: theta has wrong dimension");
  }
  if (!(sigma >= 0.0)) throw std::invalid_argument("sample_observation: requires sigma >= 0");
  Eigen::VectorXd y = noise_vector(design.n(), sigma, rng);
  y.noalias() += design.matrix() * theta;
  return y;
}

namespace {

template <typename Json>
void fill_json(Json& j, const AlphaInstance& inst) {
  j = Json{{"n", inst.design.n()},
           {"d", inst.design.d()},
           {"B", inst.B},
           {"alpha", inst.alpha},
           {"k", inst.k},
           {"s", std::vector<double>(inst.design.scales().begin(),
                                     inst.design.scales().end())}};
}

}  // namespace

void to_json(nlohmann::json& j, const AlphaInstance& inst) { fill_json(j, inst); }
void to_json(nlohmann::ordered_json& j, const AlphaInstance& inst) {
  fill_json(j, inst);
}

}  // namespace lassolab::designs

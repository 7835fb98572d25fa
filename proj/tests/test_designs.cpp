#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "lassolab/designs.hpp"
#include "support/test_oracles.hpp"

using namespace lassolab;

TEST_CASE("diagonal design accessors") {
  Eigen::VectorXd s(3);
  s << 1.0, 0.25, 4.0;
  designs::DiagonalDesign design(16, s);
  CHECK(design.n() == 16);
  CHECK(design.d() == 3);
  CHECK(design.column_scale(0) == doctest::Approx(4.0));
  CHECK(design.column_scale(1) == doctest::Approx(2.0));
  CHECK(design.column_scale(2) == doctest::Approx(8.0));
  CHECK_THROWS_AS(designs::DiagonalDesign(2, s), std::invalid_argument);
  Eigen::VectorXd bad(2);
  bad << 1.0, 0.0;
  CHECK_THROWS_AS(designs::DiagonalDesign(4, bad), std::invalid_argument);
}

TEST_CASE("dense design requires full column rank") {
  Eigen::MatrixXd x(3, 2);
  x << 1, 0, 0, 1, 1, 1;
  designs::DenseDesign dense(x);
  CHECK(dense.n() == 3);
  CHECK(dense.d() == 2);
  Eigen::MatrixXd singular(3, 2);
  singular << 1, 2, 2, 4, 3, 6;
  CHECK_THROWS_AS(designs::DenseDesign{singular}, std::invalid_argument);
  Eigen::MatrixXd wide(2, 3);
  wide.setRandom();
  CHECK_THROWS_AS(designs::DenseDesign{wide}, std::invalid_argument);
}

TEST_CASE("class bounds on a hand-checked dense design") {
  Eigen::MatrixXd x(3, 2);
  x << 1, 0, 0, 1, 1, 1;
  designs::DenseDesign dense(x);
  // (1/3) X^T X = [[2/3,1/3],[1/3,2/3]]: eigenvalues 1/3 and 1, inverse
  // diagonal entries both 2.
  CHECK(designs::min_certified_B(dense) == doctest::Approx(3.0));
  CHECK(designs::diag_class_B(dense) == doctest::Approx(2.0));
}

TEST_CASE("class bounds on diagonal designs") {
  Eigen::VectorXd s(4);
  s << 1.0, 0.5, 0.125, 2.0;
  designs::DiagonalDesign design(8, s);
  CHECK(designs::min_certified_B(design) == doctest::Approx(8.0));
  CHECK(designs::diag_class_B(design) == doctest::Approx(8.0));
}

TEST_CASE("diag class bound never exceeds the spectral one") {
  Rng rng(314);
  for (int rep = 0; rep < 10; ++rep) {
    const auto dense = test_oracles::random_inclass_dense(rng, 24, 6, 4.0);
    const double spectral = designs::min_certified_B(dense);
    CHECK(designs::diag_class_B(dense) <= spectral * (1.0 + 1e-10));
    CHECK(spectral == doctest::Approx(4.0).epsilon(1e-8));
  }
}

TEST_CASE("adversarial scale profile") {
  const auto inst = designs::make_alpha_instance(256, 256, 16.0, 16.0);
  CHECK(inst.k == 128);
  CHECK(inst.B == 16.0);
  CHECK(inst.alpha == 16.0);
  CHECK(inst.design.scales()[0] == doctest::Approx(1.0));      // alpha/B
  CHECK(inst.design.scales()[127] == doctest::Approx(1.0));
  CHECK(inst.design.scales()[128] == doctest::Approx(1.0 / 16));  // 1/B
  CHECK(inst.design.scales()[255] == doctest::Approx(1.0 / 16));
  CHECK(designs::min_certified_B(inst.design) == doctest::Approx(16.0));

  const auto odd = designs::make_alpha_instance(16, 5, 2.0, 8.0);
  CHECK(odd.k == 2);
  CHECK(odd.design.scales()[1] == doctest::Approx(4.0));   // alpha/B
  CHECK(odd.design.scales()[2] == doctest::Approx(0.5));   // 1/B

  CHECK_THROWS_AS(designs::make_alpha_instance(4, 8, 2.0, 2.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(designs::make_alpha_instance(8, 8, 2.0, 0.5),
                  std::invalid_argument);
}

TEST_CASE("observation sampling is seed-deterministic and well-scaled") {
  Eigen::VectorXd s(3);
  s << 1.0, 0.25, 4.0;
  designs::DiagonalDesign design(16, s);
  Eigen::VectorXd theta(3);
  theta << 1.0, -2.0, 0.5;
  Rng a(99), b(99);
  const auto ya = designs::sample_observation(design, theta, 1.0, a);
  const auto yb = designs::sample_observation(design, theta, 1.0, b);
  CHECK(ya.size() == 16);
  CHECK((ya - yb).cwiseAbs().maxCoeff() == 0.0);
  // noiseless check: y restricted to the design rows reproduces X theta
  Rng c(99);
  const auto y0 = designs::sample_observation(design, theta, 0.0, c);
  for (int i = 0; i < 3; ++i) {
    CHECK(y0[i] == doctest::Approx(design.column_scale(i) * theta[i]));
  }
  // sigma = 0 consumes the same number of draws as sigma > 0
  CHECK(a.next_u64() == c.next_u64());

  // dense variant agrees with the same formula
  Eigen::MatrixXd x(3, 2);
  x << 1, 0, 0, 1, 1, 1;
  designs::DenseDesign dense(x);
  Eigen::VectorXd t2(2);
  t2 << 2.0, -1.0;
  Rng d(5);
  const auto yd = designs::sample_observation(dense, t2, 0.0, d);
  CHECK(yd[0] == doctest::Approx(2.0));
  CHECK(yd[1] == doctest::Approx(-1.0));
  CHECK(yd[2] == doctest::Approx(1.0));
}

TEST_CASE("alpha instance serializes to the documented JSON shape") {
  const auto inst = designs::make_alpha_instance(8, 4, 2.0, 4.0);
  nlohmann::json j = inst;
  CHECK(j["n"] == 8);
  CHECK(j["d"] == 4);
  CHECK(j["B"] == 2.0);
  CHECK(j["alpha"] == 4.0);
  CHECK(j["k"] == 2);
  CHECK(j["s"].size() == 4);
  CHECK(j["s"][0] == 2.0);
  CHECK(j["s"][3] == 0.5);
  // ordered variant keeps declaration order and carries identical values
  nlohmann::ordered_json oj;
  designs::to_json(oj, inst);
  const std::vector<std::string> keys = {"n", "d", "B", "alpha", "k", "s"};
  int i = 0;
  for (const auto& item : oj.items()) CHECK(item.key() == keys[i++]);
  CHECK(nlohmann::json::parse(oj.dump()) == j);
}

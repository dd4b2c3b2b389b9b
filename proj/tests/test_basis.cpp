#include "br1/basis.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace br1;

namespace {

// Horner evaluation of sum c_k x^k and its derivative.
std::pair<double, double> poly(const Eigen::VectorXd& c, double x) {
  double p = 0, dp = 0;
  for (Eigen::Index k = c.size() - 1; k >= 0; --k) {
    dp = dp * x + p;
    p = p * x + c(k);
  }
  return {p, dp};
}

} // namespace

TEST_CASE("lgl rule, degree 1 and 2") {
  const auto r1 = lgl_rule(1);
  CHECK(r1.nodes(0) == -1.0);
  CHECK(r1.nodes(1) == 1.0);
  CHECK(r1.weights(0) == doctest::Approx(1.0).epsilon(1e-15));

  const auto r2 = lgl_rule(2);
  CHECK(r2.nodes(1) == 0.0);
  CHECK(r2.weights(0) == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(r2.weights(1) == doctest::Approx(4.0 / 3).epsilon(1e-15));
}

TEST_CASE("lgl rule, degree 3 interior node is 1/sqrt(5)") {
  // mpmath, 50 digits: 1/sqrt(5)
  const double x = 0.4472135954999579392818347337462552470881236719223;
  const auto r = lgl_rule(3);
  CHECK(std::abs(r.nodes(2) - x) <= 1e-16);
  CHECK(std::abs(r.nodes(1) + x) <= 1e-16);
  CHECK(std::abs(r.weights(0) - 1.0 / 6) <= 1e-16);
  CHECK(std::abs(r.weights(1) - 5.0 / 6) <= 1e-15);
}

TEST_CASE("lgl rule, degree 4 closed form") {
  const auto r = lgl_rule(4);
  CHECK(std::abs(r.nodes(3) - std::sqrt(3.0 / 7)) <= 1e-15);
  CHECK(std::abs(r.weights(0) - 0.1) <= 1e-15);
  CHECK(std::abs(r.weights(1) - 49.0 / 90) <= 1e-15);
  CHECK(std::abs(r.weights(2) - 32.0 / 45) <= 1e-15);
}

TEST_CASE("degree 0 has no interior scheme") {
  CHECK_THROWS_AS(lgl_rule(0), std::invalid_argument);
  CHECK_THROWS_AS(Operators::build(0), std::invalid_argument);
}

TEST_CASE("degree 1 derivative matrix") {
  const auto ops = Operators::build(1);
  Eigen::Matrix2d expected;
  expected << -0.5, 0.5, -0.5, 0.5;
  CHECK((ops.d - expected).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("rule properties up to the verified degree") {
  for (int n = 1; n <= kMaxVerifiedDegree; ++n) {
    CAPTURE(n);
    const auto r = lgl_rule(n);
    CHECK(std::abs(r.weights.sum() - 2) <= 1e-13);
    CHECK((r.nodes + r.nodes.reverse()).cwiseAbs().maxCoeff() == 0.0);
    for (int i = 0; i < n; ++i) CHECK(r.nodes(i) < r.nodes(i + 1));
    CHECK(r.weights.minCoeff() > 0);
  }
}

TEST_CASE("quadrature is exact to degree 2N-1") {
  for (int n = 1; n <= 16; ++n) {
    const auto r = lgl_rule(n);
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double q = 0;
      for (int i = 0; i <= n; ++i) q += r.weights(i) * std::pow(r.nodes(i), k);
      const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
      CHECK(std::abs(q - exact) <= 1e-13);
    }
  }
}

TEST_CASE("derivative matrix is exact for polynomials of degree N") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> unit(-1, 1);
  for (int n = 1; n <= 16; ++n) {
    const auto ops = Operators::build(n);
    Eigen::VectorXd c(n + 1);
    for (auto& v : c) v = unit(rng);
    Eigen::VectorXd f(n + 1), df(n + 1);
    for (int i = 0; i <= n; ++i) std::tie(f(i), df(i)) = poly(c, ops.nodes(i));
    CHECK((ops.d * f - df).cwiseAbs().maxCoeff() <= 1e-11);
    CHECK(ops.d.rowwise().sum().cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("sbp property") {
  for (int n = 1; n <= 16; ++n) {
    CAPTURE(n);
    CHECK(Operators::build(n).sbp_residual() <= 1e-13);
  }
}

TEST_CASE("interpolation matrix reproduces degree-N polynomials") {
  const auto ops = Operators::build(5);
  Eigen::VectorXd targets = Eigen::VectorXd::LinSpaced(11, -1, 1);
  const auto m = interpolation_matrix(ops.nodes, targets);
  Eigen::VectorXd c(6);
  c << 0.3, -1.0, 0.5, 2.0, -0.7, 0.1;
  Eigen::VectorXd f(6), exact(11);
  for (int i = 0; i < 6; ++i) f(i) = poly(c, ops.nodes(i)).first;
  for (int i = 0; i < 11; ++i) exact(i) = poly(c, targets(i)).first;
  CHECK((m * f - exact).cwiseAbs().maxCoeff() <= 1e-13);
}

TEST_CASE("long double rule agrees with double") {
  const auto rd = lgl_rule<double>(9);
  const auto rl = lgl_rule<long double>(9);
  for (int i = 0; i <= 9; ++i) CHECK(std::abs(rd.nodes(i) - static_cast<double>(rl.nodes(i))) <= 2e-16);
}

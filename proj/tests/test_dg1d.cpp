#include "br1/diagnostics.hpp"
#include "br1/dg1d.hpp"
#include "br1/fluxes.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace br1;

namespace {

Eigen::VectorXd random_vector(std::mt19937& rng, int n, double lo = -1, double hi = 1) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Eigen::VectorXd v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

// sum of -(sigma |a| / 2) [U]^2 over all periodic interfaces
double interface_dissipation(const Mesh1d& m, const Eigen::VectorXd& u, double a, double sigma) {
  const int n = m.n(), k = m.num_elements();
  double sum = 0;
  for (int e = 0; e < k; ++e) {
    const double jump = u(((e + 1) % k) * n) - u(e * n + n - 1);
    sum += -sigma * std::abs(a) / 2 * jump * jump;
  }
  return sum;
}

} // namespace

TEST_CASE("burgers flux differencing equals the split form") {
  std::mt19937 rng(1);
  for (int degree = 1; degree <= 8; ++degree) {
    const auto ops = Operators::build(degree);
    for (int trial = 0; trial < 20; ++trial) {
      const Eigen::VectorXd u = random_vector(rng, degree + 1);
      CHECK((burgers_volume_ec(ops, u) - burgers_volume_split(ops, u)).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
}

TEST_CASE("burgers volume contraction reduces to the boundary entropy flux") {
  std::mt19937 rng(2);
  for (int degree = 1; degree <= 8; ++degree) {
    const auto ops = Operators::build(degree);
    for (int trial = 0; trial < 20; ++trial) {
      const Eigen::VectorXd u = random_vector(rng, degree + 1);
      const double lhs = ops.weights.dot(u.cwiseProduct(burgers_volume_ec(ops, u)));
      const double rhs = burgers_entropy_flux(u(degree)) - burgers_entropy_flux(u(0));
      CHECK(std::abs(lhs - rhs) <= 1e-12);
    }
  }
}

TEST_CASE("advective interface energy") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> dist(-2, 2);
  for (int i = 0; i < 100; ++i) {
    const double a = dist(rng), ul = dist(rng), ur = dist(rng);
    for (double sigma : {0.0, 0.5, 1.0})
      CHECK(std::abs(advdiff_interface_energy(a, ul, ur, sigma) + sigma * std::abs(a) / 2 * (ur - ul) * (ur - ul)) <=
            1e-13);
  }
}

TEST_CASE("assembled advective energy rate equals the interface jumps") {
  std::mt19937 rng(4);
  const Mesh1d mesh = build_line_mesh(0.0, 1.0, 5, 4);
  // b is so small that the diffusive part is far below round-off.
  const auto coeffs = linear_advdiff_coeffs(0.8, [](double) { return 1e-300; });
  for (double sigma : {0.0, 0.5, 1.0}) {
    const Eigen::VectorXd u = random_vector(rng, mesh.size());
    const Eigen::VectorXd r = rhs_linear_advdiff(mesh, u, coeffs, {sigma, true});
    CHECK(std::abs(energy_rate_1d(mesh, u, r) - interface_dissipation(mesh, u, 0.8, sigma)) <= 1e-12);
  }
}

TEST_CASE("advection-diffusion energy never grows") {
  std::mt19937 rng(5);
  const Mesh1d mesh = build_line_mesh(-1.0, 2.0, 6, 5);
  const auto coeffs = linear_advdiff_coeffs(1.3, [](double x) { return 0.02 * (1.5 + std::sin(3 * x)); });
  for (bool periodic : {true, false})
    for (double sigma : {0.0, 1.0})
      for (int trial = 0; trial < 10; ++trial) {
        const Eigen::VectorXd u = random_vector(rng, mesh.size());
        CHECK(energy_rate_1d(mesh, u, rhs_linear_advdiff(mesh, u, coeffs, {sigma, periodic})) <= 1e-13);
      }
}

TEST_CASE("periodic advection-diffusion conserves the mean") {
  std::mt19937 rng(6);
  const Mesh1d mesh = build_line_mesh(0.0, 2.0, 4, 3);
  const auto coeffs = linear_advdiff_coeffs(-0.7, [](double) { return 0.1; });
  const Eigen::VectorXd u = random_vector(rng, mesh.size());
  CHECK(std::abs(total_mass_1d(mesh, rhs_linear_advdiff(mesh, u, coeffs, {1.0, true}))) <= 1e-13);
}

TEST_CASE("advection-diffusion matches a separable exact solution") {
  const Mesh1d mesh = build_line_mesh(0.0, 2.0, 4, 8);
  const double a = 1.0, b = 0.05, k = std::numbers::pi;
  const auto coeffs = linear_advdiff_coeffs(a, [=](double) { return b; });
  const Eigen::VectorXd x = mesh.coordinates();
  Eigen::VectorXd u(x.size()), exact(x.size());
  for (int i = 0; i < x.size(); ++i) {
    u(i) = std::sin(k * x(i));
    exact(i) = -a * k * std::cos(k * x(i)) - b * k * k * std::sin(k * x(i));
  }
  CHECK((rhs_linear_advdiff(mesh, u, coeffs, {1.0, true}) - exact).cwiseAbs().maxCoeff() <= 1e-4);
}

TEST_CASE("burgers: entropy conservative without viscosity, dissipative with it") {
  std::mt19937 rng(7);
  const Mesh1d mesh = build_line_mesh(0.0, 1.0, 6, 5);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::VectorXd u = random_vector(rng, mesh.size());
    const Eigen::VectorXd r0 = rhs_burgers(mesh, u, {0.0, true});
    CHECK(std::abs(energy_rate_1d(mesh, u, r0)) <= 1e-12);
    CHECK(std::abs(total_mass_1d(mesh, r0)) <= 1e-12);
    CHECK(std::abs(energy_rate_1d(mesh, u, rhs_burgers(mesh, u, {0.0, false}))) <= 1e-12);
    CHECK(energy_rate_1d(mesh, u, rhs_burgers(mesh, u, {0.01, true})) < 0);
    CHECK(energy_rate_1d(mesh, u, rhs_burgers(mesh, u, {0.01, false})) < 0);
  }
}

TEST_CASE("size mismatches are rejected") {
  const Mesh1d mesh = build_line_mesh(0.0, 1.0, 2, 2);
  CHECK_THROWS_AS(rhs_burgers(mesh, Eigen::VectorXd::Zero(3)), std::invalid_argument);
  CHECK_THROWS_AS(build_line_mesh(1.0, 0.0, 2, 2), std::invalid_argument);
  const auto coeffs = linear_advdiff_coeffs(1.0, [](double) { return -1.0; });
  CHECK_THROWS_AS(rhs_linear_advdiff(mesh, Eigen::VectorXd::Zero(mesh.size()), coeffs), std::invalid_argument);
}

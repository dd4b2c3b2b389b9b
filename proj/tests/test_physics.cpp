#include "br1/physics.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace br1;

namespace {

Vec5 random_state(std::mt19937& rng, const Gas& gas) {
  std::uniform_real_distribution<double> pos(0.5, 2.0), vel(-1.0, 1.0);
  return from_primitive(pos(rng), Vec3(vel(rng), vel(rng), vel(rng)), pos(rng), gas);
}

// Central difference of a scalar function of the state along e_k.
template <typename F> Vec5 fd_gradient(F&& f, const Vec5& u, double h = 1e-6) {
  Vec5 g;
  for (int k = 0; k < 5; ++k) {
    Vec5 up = u, um = u;
    up(k) += h;
    um(k) -= h;
    g(k) = (f(up) - f(um)) / (2 * h);
  }
  return g;
}

} // namespace

TEST_CASE("primitive round trip") {
  const Gas gas;
  const Vec5 u = from_primitive(1.3, Vec3(0.2, -0.4, 0.1), 0.8, gas);
  const auto w = to_primitive<double>(u, gas);
  CHECK(w.rho == doctest::Approx(1.3));
  CHECK(w.p == doctest::Approx(0.8));
  CHECK((w.v - Vec3(0.2, -0.4, 0.1)).norm() <= 1e-15);
}

TEST_CASE("entropy of reference states") {
  const Gas gas;
  const Vec5 unit = from_primitive(1.0, Vec3::Zero().eval(), 1.0, gas);
  CHECK(entropy<double>(unit, gas) == 0.0);
  CHECK(entropy_variables<double>(unit, gas)(0) == doctest::Approx(3.5).epsilon(1e-15));
  CHECK(entropy_variables<double>(unit, gas)(4) == -1.0);
  // rho = 1, p = e: varsigma = 1, s = -1 / (gamma - 1)
  const Vec5 u = from_primitive(1.0, Vec3::Zero().eval(), std::exp(1.0), gas);
  CHECK(entropy<double>(u, gas) == doctest::Approx(-2.5).epsilon(1e-15));
}

TEST_CASE("entropy variables are the state derivative of s") {
  const Gas gas;
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Vec5 u = random_state(rng, gas);
    const Vec5 fd = fd_gradient([&](const Vec5& x) { return entropy<double>(x, gas); }, u);
    CHECK((fd - entropy_variables<double>(u, gas)).cwiseAbs().maxCoeff() <= 1e-7);
  }
}

TEST_CASE("entropy variable map inverts") {
  const Gas gas;
  std::mt19937 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const Vec5 u = random_state(rng, gas);
    const Vec5 back = conservative_from_entropy<double>(entropy_variables<double>(u, gas), gas);
    CHECK((back - u).cwiseAbs().maxCoeff() <= 1e-12 * u.cwiseAbs().maxCoeff());
  }
}

TEST_CASE("entropy flux compatibility: d f_ent / du = w^T df/du") {
  const Gas gas;
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Vec5 u = random_state(rng, gas);
    const Vec5 w = entropy_variables<double>(u, gas);
    for (int d = 0; d < 3; ++d) {
      const Vec5 lhs = fd_gradient([&](const Vec5& x) { return entropy_and_flux<double>(x, gas).flux(d); }, u);
      Vec5 rhs;
      for (int k = 0; k < 5; ++k) {
        Vec5 up = u, um = u;
        up(k) += 1e-6;
        um(k) -= 1e-6;
        rhs(k) = w.dot((euler_flux<double>(up, gas).col(d) - euler_flux<double>(um, gas).col(d)) / 2e-6);
      }
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-6);
    }
  }
}

TEST_CASE("entropy potential is rho v") {
  const Gas gas;
  std::mt19937 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const Vec5 u = random_state(rng, gas);
    CHECK((entropy_potential<double>(u, gas) - u.segment<3>(1)).cwiseAbs().maxCoeff() <= 1e-13);
  }
}

TEST_CASE("admissibility") {
  const Gas gas;
  CHECK(is_admissible<double>(from_primitive(1.0, Vec3::Zero().eval(), 1.0, gas), gas));
  CHECK_FALSE(is_admissible<double>(Vec5(-1, 0, 0, 0, 1), gas));
  CHECK_FALSE(is_admissible<double>(Vec5(1, 2, 0, 0, 1), gas)); // negative pressure
  CHECK_FALSE(is_admissible<double>(Vec5(1, NAN, 0, 0, 1), gas));
  CHECK_THROWS_AS(entropy<double>(Vec5(1, 2, 0, 0, 1), gas), PositivityError);
}

TEST_CASE("chain rule recovers velocity and temperature gradients") {
  Gas gas;
  gas.mach = 0.3;
  // rho, v, p as smooth functions of x; gradients of w by central differences.
  auto prim = [](const Vec3& x) {
    return std::tuple{1 + 0.2 * std::sin(x(0) + 2 * x(1)),
                      Vec3(std::cos(x(2)), 0.5 * x(0) * x(1), std::sin(x(0) - x(2))), 1 + 0.1 * std::cos(x(1))};
  };
  auto state = [&](const Vec3& x) {
    const auto [r, v, p] = prim(x);
    return Vec5(from_primitive(r, v, p, gas));
  };
  const Vec3 x0(0.3, -0.7, 1.1);
  const double h = 1e-5;
  Block grad_w;
  Matrix3<double> grad_v;
  Vec3 grad_t;
  for (int d = 0; d < 3; ++d) {
    Vec3 xp = x0, xm = x0;
    xp(d) += h;
    xm(d) -= h;
    grad_w.col(d) = (entropy_variables<double>(state(xp), gas) - entropy_variables<double>(state(xm), gas)) / (2 * h);
    const auto [rp, vp, pp] = prim(xp);
    const auto [rm, vm, pm] = prim(xm);
    grad_v.row(d) = ((vp - vm) / (2 * h)).transpose();
    grad_t(d) = (gas.temperature(rp, pp) - gas.temperature(rm, pm)) / (2 * h);
  }
  const auto g = primitive_gradients<double>(state(x0), grad_w, gas);
  CHECK((g.grad_v - grad_v).cwiseAbs().maxCoeff() <= 1e-8);
  CHECK((g.grad_t - grad_t).cwiseAbs().maxCoeff() <= 1e-8);
}

TEST_CASE("viscous flux dissipates entropy for any gradient") {
  Gas gas;
  gas.reynolds = 100;
  std::mt19937 rng(8);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 200; ++trial) {
    const Vec5 u = random_state(rng, gas);
    Block q;
    for (int i = 0; i < 5; ++i)
      for (int d = 0; d < 3; ++d) q(i, d) = normal(rng);
    const Block fv = viscous_flux<double>(u, q, gas);
    double production = 0;
    for (int d = 0; d < 3; ++d) production += fv.col(d).dot(q.col(d));
    CHECK(production >= -1e-12);
    CHECK(fv.row(0).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("viscous flux of a uniform state vanishes") {
  Gas gas;
  const Vec5 u = from_primitive(1.0, Vec3(0.3, 0.2, 0.1), 1.0, gas);
  CHECK(viscous_flux<double>(u, Block::Zero(), gas).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("burgers entropy pair") {
  for (double u : {-1.5, -0.2, 0.0, 0.7, 2.0}) {
    const double h = 1e-6;
    const double ds = (burgers_entropy(u + h) - burgers_entropy(u - h)) / (2 * h);
    CHECK(ds == doctest::Approx(burgers_entropy_variable(u)).epsilon(1e-8));
    const double dF = (burgers_entropy_flux(u + h) - burgers_entropy_flux(u - h)) / (2 * h);
    CHECK(dF == doctest::Approx(burgers_entropy_variable(u) * u).epsilon(1e-8));
    CHECK(burgers_flux(u) == u * u / 2);
  }
}

TEST_CASE("diffusion coefficient validation") {
  const auto c = linear_advdiff_coeffs(1.0, [](double x) { return x; });
  const std::vector<double> ok{0.1, 0.5}, bad{0.1, 0.0};
  CHECK_NOTHROW(c.validate(ok));
  CHECK_THROWS_AS(c.validate(bad), std::invalid_argument);
}

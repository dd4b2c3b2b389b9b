#include "br1/diagnostics.hpp"
#include "br1/initial_conditions.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

using namespace br1;

namespace {

Mesh periodic_box(int degree, int k) {
  BoxSpec spec;
  spec.degree = degree;
  spec.elements = {k, k, k};
  spec.extent = Vec3::Constant(2 * std::numbers::pi);
  return build_box_mesh(spec);
}

} // namespace

TEST_CASE("three-point derivative is exact for quadratics on uneven samples") {
  const std::vector<double> t{0.0, 0.3, 0.5, 1.1, 1.2};
  std::vector<double> y;
  for (double s : t) y.push_back(2 - s + 3 * s * s);
  const auto dy = three_point_derivative(t, y);
  for (std::size_t i = 0; i < t.size(); ++i) CHECK(dy[i] == doctest::Approx(-1 + 6 * t[i]).epsilon(1e-12));
  CHECK_THROWS_AS(three_point_derivative({0.0, 1.0}, {0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("series: dissipation, numerical Reynolds number and CSV") {
  TimeSeries s;
  // E = 10 - t^2 / 2: diss = t, ens = 3 t^2 / 2 gives Re_num = 3 t
  for (double t : {0.0, 0.5, 1.0, 2.0}) {
    Record r;
    r.t = t;
    r.kinetic = 10 - t * t / 2;
    r.enstrophy = 1.5 * t * t;
    r.mass = 1.0;
    s.add(r);
  }
  s.finalize();
  const auto& rec = s.records();
  CHECK(std::abs(*rec[0].diss) <= 1e-14);
  CHECK_FALSE(rec[0].re_num.has_value()); // diss <= 0 is flagged as absent
  for (std::size_t i = 1; i < rec.size(); ++i) {
    CHECK(*rec[i].diss == doctest::Approx(rec[i].t).epsilon(1e-12));
    CHECK(*rec[i].re_num == doctest::Approx(3 * rec[i].t).epsilon(1e-12));
  }
  std::ostringstream os;
  s.write_csv(os);
  std::istringstream in(os.str());
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  CHECK(header == "t,S,Ekin,ens,diss,Re_num,mass");
  CHECK(first.find(",,") != std::string::npos); // S missing
  CHECK(first.substr(0, 5) == "0,,10");

  Record late;
  late.t = 2.0;
  CHECK_THROWS_AS(s.add(late), std::invalid_argument);
}

TEST_CASE("kinetic energy, totals and entropy of a uniform state") {
  const Gas gas;
  const Mesh mesh = periodic_box(3, 2);
  const NseOperator op(mesh, gas);
  const Field5 u = sample(mesh, uniform_state(2.0, Vec3(1.0, 0.0, 0.5), 1.0, gas));
  const double vol = std::pow(2 * std::numbers::pi, 3);
  CHECK(kinetic_energy(op, u) == doctest::Approx(vol * 2.0 * 1.25 / 2).epsilon(1e-13));
  CHECK(conserved_totals(op, u)(0) == doctest::Approx(2 * vol).epsilon(1e-13));
  CHECK(total_entropy(op, u) == doctest::Approx(vol * entropy<double>(u.col(0), gas)).epsilon(1e-13));
  CHECK(enstrophy(op, u) <= 1e-20);
}

TEST_CASE("enstrophy of a shear layer") {
  // v = (sin y, 0, 0) at unit density: omega_z = -cos y, ens = (2 pi)^3 / 4
  Gas gas;
  gas.mach = 0.3;
  const Mesh mesh = periodic_box(7, 2);
  const NseOperator op(mesh, gas);
  const Field5 u = sample(mesh, [&](const Vec3& x) {
    return Vec5(from_primitive(1.0, Vec3(std::sin(x(1)), 0.0, 0.0), 1.0, gas));
  });
  CHECK(enstrophy(op, u) == doctest::Approx(std::pow(2 * std::numbers::pi, 3) / 4).epsilon(1e-5));
}

TEST_CASE("entropy rate audit is linear in the rate") {
  const Gas gas;
  const Mesh mesh = periodic_box(2, 2);
  const NseOperator op(mesh, gas);
  const Field5 u = sample(mesh, random_smooth(gas, Vec3::Zero(), Vec3::Constant(2 * std::numbers::pi), 0.2, 3));
  const Field5 a = Field5::Random(5, mesh.num_nodes()), b = Field5::Random(5, mesh.num_nodes());
  const double lhs = entropy_rate_audit(op, u, 2 * a - 3 * b);
  const double rhs = 2 * entropy_rate_audit(op, u, a) - 3 * entropy_rate_audit(op, u, b);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("taylor-green initial state") {
  Gas gas;
  gas.mach = 0.1;
  const auto f = taylor_green(gas);
  const double p0 = 1 / (gas.gamma * 0.01);
  const Vec5 u = f(Vec3::Zero());
  const auto w = to_primitive<double>(u, gas);
  CHECK(w.p == doctest::Approx(p0 + 2.0 * 3 / 16).epsilon(1e-14));
  CHECK(w.rho == doctest::Approx(w.p / p0).epsilon(1e-14));
  CHECK(w.v.norm() <= 1e-15);
  const Vec3 x(std::numbers::pi / 2, 0.0, 0.0);
  CHECK(to_primitive<double>(f(x), gas).v(0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("1D mass") {
  const Mesh1d mesh = build_line_mesh(0.0, 3.0, 3, 2);
  CHECK(total_mass_1d(mesh, Eigen::VectorXd::Constant(mesh.size(), 2.0)) == doctest::Approx(6.0).epsilon(1e-14));
}

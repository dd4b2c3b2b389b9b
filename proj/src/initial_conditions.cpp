#include "br1/initial_conditions.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace br1 {

Field5 sample(const Mesh& mesh, const PointState& f) {
  Field5 u(5, mesh.num_nodes());
  for (int e = 0; e < mesh.num_elements(); ++e)
    for (int node = 0; node < mesh.nodes_per_element(); ++node)
      u.col(mesh.offset(e) + node) = f(mesh.elements[e].x.col(node));
  return u;
}

PointState uniform_state(double rho, const Vec3& v, double p, const Gas& gas) {
  const Vec5 u = from_primitive(rho, v, p, gas);
  return [u](const Vec3&) { return u; };
}

PointState taylor_green(const Gas& gas) {
  const double p0 = 1.0 / (gas.gamma * gas.mach * gas.mach);
  return [gas, p0](const Vec3& x) {
    using std::cos;
    using std::sin;
    const Vec3 v(sin(x(0)) * cos(x(1)) * cos(x(2)), -cos(x(0)) * sin(x(1)) * cos(x(2)), 0.0);
    const double p = p0 + (cos(2 * x(0)) + cos(2 * x(1))) * (cos(2 * x(2)) + 2) / 16;
    return Vec5(from_primitive(p / p0, v, p, gas));
  };
}

PointState density_wave(const Gas& gas, const Vec3& v, double p, double amplitude, double t) {
  return [=](const Vec3& x) {
    const double rho = 1 + amplitude * std::sin(std::numbers::pi * (x.sum() - v.sum() * t));
    return Vec5(from_primitive(rho, v, p, gas));
  };
}

PointState random_smooth(const Gas& gas, const Vec3& origin, const Vec3& extent, double amplitude,
                         std::uint64_t seed) {
  struct Mode {
    Eigen::Vector3i k;
    double phase;
    Vec5 amp;
  };
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> wave(-2, 2);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<Mode> modes(4);
  for (auto& m : modes) {
    do {
      m.k = Eigen::Vector3i(wave(rng), wave(rng), wave(rng));
    } while (m.k.isZero());
    m.phase = std::numbers::pi * unit(rng);
    for (int c = 0; c < 5; ++c) m.amp(c) = amplitude * unit(rng) / modes.size();
  }
  return [=](const Vec3& x) {
    Vec5 prim(1.0, 0.0, 0.0, 0.0, 1.0); // rho, v, p
    for (const auto& m : modes) {
      double arg = m.phase;
      for (int d = 0; d < 3; ++d) arg += 2 * std::numbers::pi * m.k(d) * (x(d) - origin(d)) / extent(d);
      prim += m.amp * std::sin(arg);
    }
    return Vec5(from_primitive(prim(0), Vec3(prim.segment<3>(1)), prim(4), gas));
  };
}

} // namespace br1

#include "br1/time_integration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace br1 {

RkScheme RkScheme::lserk54() {
  return {"lserk54",
          4,
          {0.0, -567301805773.0 / 1357537059087.0, -2404267990393.0 / 2016746695238.0,
           -3550918686646.0 / 2091501179385.0, -1275806237668.0 / 842570457699.0},
          {1432997174477.0 / 9575080441755.0, 5161836677717.0 / 13612068292357.0, 1720146321549.0 / 2090206949498.0,
           3134564353537.0 / 4481467310338.0, 2277821191437.0 / 14882151754819.0},
          {0.0, 1432997174477.0 / 9575080441755.0, 2526269341429.0 / 6820363962896.0,
           2006345519317.0 / 3224310063776.0, 2802321613138.0 / 2924317926251.0}};
}

RkScheme RkScheme::williamson3() {
  return {"williamson3", 3, {0.0, -5.0 / 9.0, -153.0 / 128.0}, {1.0 / 3.0, 15.0 / 16.0, 8.0 / 15.0},
          {0.0, 1.0 / 3.0, 3.0 / 4.0}};
}

RkScheme RkScheme::by_name(const std::string& name) {
  if (name == "lserk54") return lserk54();
  if (name == "williamson3") return williamson3();
  throw std::invalid_argument("unknown Runge-Kutta scheme '" + name + "'");
}

double estimate_dt(const Mesh& mesh, const Field5& u, double cfl, const Gas& gas) {
  if (!(cfl > 0)) throw std::invalid_argument("estimate_dt: CFL must be positive");
  const double n2 = std::max(1.0, double(mesh.degree) * mesh.degree);
  const double visc_factor = std::max(4.0 / 3.0, gas.gamma / gas.prandtl) * gas.mu;
  double dt = std::numeric_limits<double>::infinity();
  for (int e = 0; e < mesh.num_elements(); ++e) {
    const auto& geo = mesh.elements[e];
    for (int node = 0; node < mesh.nodes_per_element(); ++node) {
      double h = std::numeric_limits<double>::infinity();
      for (int l = 0; l < 3; ++l) {
        const double norm = geo.ja[l].col(node).norm();
        if (!(norm > 0)) throw MeshError("estimate_dt: zero-measure element " + std::to_string(e));
        h = std::min(h, 2 * geo.jac(node) / norm);
      }
      const auto w = to_primitive<double>(u.col(mesh.offset(e) + node), gas);
      if (!(w.p > 0) || !(w.rho > 0)) throw PositivityError("estimate_dt: inadmissible state", e, node);
      const double a = std::sqrt(gas.gamma * w.p / w.rho);
      dt = std::min(dt, cfl * h / ((w.v.norm() + a) * n2));
      if (gas.viscous()) dt = std::min(dt, cfl * w.rho * h * h * gas.reynolds / (n2 * n2 * visc_factor));
    }
  }
  return dt;
}

double estimate_dt_advdiff(const Mesh1d& mesh, const AdvDiffCoefficients& c, double cfl) {
  const double n2 = std::max(1.0, double(mesh.ops.degree) * mesh.ops.degree);
  double dt = std::numeric_limits<double>::infinity();
  for (int e = 0; e < mesh.num_elements(); ++e) {
    const double h = mesh.dx[e];
    if (c.a != 0) dt = std::min(dt, cfl * h / (std::abs(c.a) * n2));
    for (int i = 0; i < mesh.n(); ++i) {
      const double b = c.b(mesh.node_x(e, i));
      if (b > 0) dt = std::min(dt, cfl * h * h / (b * n2 * n2));
    }
  }
  return dt;
}

double estimate_dt_burgers(const Mesh1d& mesh, const Eigen::VectorXd& u, double nu, double cfl) {
  const double n2 = std::max(1.0, double(mesh.ops.degree) * mesh.ops.degree);
  const double umax = std::max(u.cwiseAbs().maxCoeff(), 1e-12);
  double dt = std::numeric_limits<double>::infinity();
  for (double h : mesh.dx) {
    dt = std::min(dt, cfl * h / (umax * n2));
    if (nu > 0) dt = std::min(dt, cfl * h * h / (nu * n2 * n2));
  }
  return dt;
}

} // namespace br1

#pragma once

// Explicit low-storage Runge-Kutta schemes (2N storage, Williamson form)
// and CFL time-step estimates.

#include "br1/dg1d.hpp"
#include "br1/dg3d.hpp"
#include "br1/mesh.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace br1 {

/// du = A_s du + dt L(u); u += B_s du, stage time t + c_s dt.
struct RkScheme {
  std::string name;
  int order = 0;
  std::vector<double> a, b, c;

  int stages() const { return static_cast<int>(a.size()); }

  static RkScheme lserk54(); // Carpenter-Kennedy five-stage fourth order
  static RkScheme williamson3(); // three-stage third order
  static RkScheme by_name(const std::string& name);
};

/// One step on a copy; `u` is only replaced once every stage succeeded, so an
/// exception thrown by `rhs` leaves it untouched.
template <typename Field, typename Rhs>
void rk_step(Field& u, double t, double dt, Rhs&& rhs, const RkScheme& scheme) {
  if (!(dt >= 0)) throw std::invalid_argument("rk_step: dt must be nonnegative");
  if (dt == 0) return;
  Field work = u;
  Field du = Field::Zero(u.rows(), u.cols());
  for (int s = 0; s < scheme.stages(); ++s) {
    du = scheme.a[s] * du + dt * rhs(work, t + scheme.c[s] * dt);
    work += scheme.b[s] * du;
  }
  u = std::move(work);
}

/// Advective limit CFL * h / ((|v| + a) N^2) and viscous limit
/// CFL * rho h^2 Re / (N^4 max(4/3, gamma/Pr) mu), h = 2 min_l J / |Ja^l|.
double estimate_dt(const Mesh& mesh, const Field5& u, double cfl, const Gas& gas);

/// 1D limits: CFL dx / (|a| N^2) and CFL dx^2 / (b N^4).
double estimate_dt_advdiff(const Mesh1d& mesh, const AdvDiffCoefficients& c, double cfl);
double estimate_dt_burgers(const Mesh1d& mesh, const Eigen::VectorXd& u, double nu, double cfl);

} // namespace br1

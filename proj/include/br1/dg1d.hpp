#pragma once

// 1D DGSEM for the scalar model problems on [x_0, x_K]: linear
// advection-diffusion in split form and viscous Burgers with the
// entropy-conservative two-point volume flux, both with BR1 viscous terms.
//
// Solution storage is one vector of K (N+1) nodal values, element-major.

#include "br1/basis.hpp"
#include "br1/dg3d.hpp"
#include "br1/physics.hpp"

#include <vector>

namespace br1 {

struct Mesh1d {
  Operators ops;
  std::vector<double> x0; // left end of each element
  std::vector<double> dx;

  int num_elements() const { return static_cast<int>(dx.size()); }
  int n() const { return ops.size(); }
  int size() const { return num_elements() * n(); }
  double node_x(int e, int i) const { return x0[e] + dx[e] * (ops.nodes(i) + 1) / 2; }
  Eigen::VectorXd coordinates() const;
};

Mesh1d build_line_mesh(double left, double right, int elements, int degree);

struct AdvDiffScheme {
  double sigma = 1.0;    // 1 = upwind, 0 = central
  bool periodic = false; // otherwise u(left) = 0, u_x(right) = 0 weakly
};

/// u_t + (a u)_x = (b u_x)_x with the split advective volume term.
Eigen::VectorXd rhs_linear_advdiff(const Mesh1d& mesh, const Eigen::VectorXd& u, const AdvDiffCoefficients& coeffs,
                                   const AdvDiffScheme& scheme = {});

/// Advective part of the energy rate contributed by one interface,
/// F*[U] - a[U^2]/2, with [.] = right - left.
double advdiff_interface_energy(double a, double u_left, double u_right, double sigma);

struct BurgersScheme {
  double nu = 0.01;      // b(u) = nu
  bool periodic = false; // otherwise u = 0 at both ends
  VolumeMode volume = VolumeMode::EntropyConservative;
};

/// u_t + (u^2/2)_x = (nu u_x)_x with EC interface fluxes and BR1.
Eigen::VectorXd rhs_burgers(const Mesh1d& mesh, const Eigen::VectorXd& u, const BurgersScheme& scheme = {});

/// 2 sum_m D_im F^ec(U_i, U_m) on one element.
Eigen::VectorXd burgers_volume_ec(const Operators& ops, const Eigen::VectorXd& u);
/// (1/3) (D(U^2) + U o DU) on one element.
Eigen::VectorXd burgers_volume_split(const Operators& ops, const Eigen::VectorXd& u);

/// sum_k (dx_k/2) ||U^k||_N^2.
double energy_norm_1d(const Mesh1d& mesh, const Eigen::VectorXd& u);
/// sum_k (dx_k/2) <U, dU/dt>_N, i.e. half the rate of energy_norm_1d.
double energy_rate_1d(const Mesh1d& mesh, const Eigen::VectorXd& u, const Eigen::VectorXd& dudt);

} // namespace br1

#pragma once

// Semi-discrete DGSEM operator for the 3D compressible Navier-Stokes
// equations on periodic curvilinear meshes: flux-differencing volume terms,
// EC / matrix-dissipation interface fluxes and BR1 viscous coupling.
//
// Solution storage is one Field5 with mesh.num_nodes() columns; element e
// occupies columns [e * (N+1)^3, (e+1) * (N+1)^3).

#include "br1/fluxes.hpp"
#include "br1/mesh.hpp"
#include "br1/physics.hpp"

#include <array>

namespace br1 {

enum class VolumeMode { EntropyConservative, Standard };
enum class InterfaceFlux { EntropyConservative, MatrixDissipation };

struct SchemeConfig {
  VolumeMode volume = VolumeMode::EntropyConservative;
  InterfaceFlux interface = InterfaceFlux::EntropyConservative;
  int threads = 1;
};

/// Which parts of the right-hand side to assemble.
struct RhsTerms {
  bool advective = true;
  bool viscous = true;
};

using Gradient = std::array<Field5, 3>; // Cartesian d/dx_d of the entropy variables

class NseOperator {
public:
  NseOperator(const Mesh& mesh, Gas gas, SchemeConfig scheme = {});

  const Mesh& mesh() const { return *mesh_; }
  const Gas& gas() const { return gas_; }
  const SchemeConfig& scheme() const { return scheme_; }

  /// dU/dt. Throws PositivityError naming the element and node of the first
  /// inadmissible state.
  Field5 rhs(const Field5& u, RhsTerms terms = {}) const;

  void check_admissible(const Field5& u) const;
  Field5 entropy_variables(const Field5& u) const;
  /// BR1 lifted gradients of the entropy variables.
  Gradient gradients(const Field5& w) const;

  /// Advective volume term of one element before division by J
  /// (flux differencing or strong-form standard derivative).
  Field5 volume_term(const Field5& u, int element) const;

  /// sum_k sum_ijk omega J W^T dU/dt.
  double entropy_rate(const Field5& u, const Field5& dudt) const;
  /// (1/Re) sum_k sum_ijk omega J sum_d f_v,d^T Q_d, the viscous volume entropy dissipation.
  double viscous_volume_dissipation(const Field5& u) const;

  /// Quadrature weights times J at every node (omega_i omega_j omega_k J).
  const Eigen::VectorXd& mass() const { return mass_; }

private:
  void add_advective(const Field5& u, Field5& out) const;
  void add_viscous(const Field5& u, Field5& out) const;
  Gradient viscous_fluxes(const Field5& u, const Gradient& q) const;

  const Mesh* mesh_;
  Gas gas_;
  SchemeConfig scheme_;
  Eigen::VectorXd mass_;
  Eigen::VectorXd inv_jac_;
};

} // namespace br1

#pragma once

// Two-point fluxes: KEPEC entropy-conservative flux, matrix dissipation,
// contravariant assembly with averaged metrics, BR1 averages, and the
// scalar 1D fluxes.

#include "br1/physics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace br1 {

/// Logarithmic mean (aR - aL) / (ln aR - ln aL), series branch for aL ~ aR.
template <typename Scalar> Scalar log_mean(Scalar a_l, Scalar a_r) {
  if (!(a_l > 0) || !(a_r > 0)) throw std::domain_error("log_mean: arguments must be positive");
  const Scalar zeta = a_l / a_r;
  const Scalar f = (zeta - 1) / (zeta + 1);
  const Scalar u = f * f;
  Scalar big_f;
  if (u < Scalar(1e-4))
    big_f = 1 + u / 3 + u * u / 5 + u * u * u / 7;
  else
    big_f = std::log(zeta) / (2 * f);
  return (a_l + a_r) / (2 * big_f);
}

/// Averaged quantities shared by the KEPEC flux and the dissipation term.
template <typename Scalar> struct PairMeans {
  Scalar rho_ln, beta_ln, p_avg, p_ln;
  Vector3<Scalar> v_avg;
  Scalar v2_bar; // 2 sum <v_i>^2 - sum <v_i^2>
};

template <typename Scalar>
PairMeans<Scalar> pair_means(const Primitive<Scalar>& a, const Primitive<Scalar>& b) {
  if (!(a.p > 0) || !(b.p > 0)) throw PositivityError("pair_means: nonpositive pressure");
  const Scalar beta_a = a.rho / (2 * a.p), beta_b = b.rho / (2 * b.p);
  PairMeans<Scalar> m;
  m.rho_ln = log_mean(a.rho, b.rho);
  m.beta_ln = log_mean(beta_a, beta_b);
  m.p_avg = (a.rho + b.rho) / 2 / (beta_a + beta_b);
  m.p_ln = m.rho_ln / (2 * m.beta_ln);
  m.v_avg = (a.v + b.v) / 2;
  m.v2_bar = 2 * m.v_avg.squaredNorm() - (a.v.squaredNorm() + b.v.squaredNorm()) / 2;
  return m;
}

template <typename Scalar>
PairMeans<Scalar> pair_means(const State<Scalar>& u_l, const State<Scalar>& u_r, const GasParams<Scalar>& gas) {
  return pair_means(to_primitive(u_l, gas), to_primitive(u_r, gas));
}

/// KEPEC flux in Cartesian direction l (0-based).
template <typename Scalar>
State<Scalar> kepec_flux(const PairMeans<Scalar>& m, int l, const GasParams<Scalar>& gas) {
  const Scalar vl = m.v_avg(l);
  const Scalar mass = m.rho_ln * vl;
  State<Scalar> f;
  f(0) = mass;
  f.template segment<3>(1) = mass * m.v_avg;
  f(1 + l) += m.p_avg;
  f(4) = m.p_ln * vl / (gas.gamma - 1) + m.p_avg * vl + mass * m.v2_bar / 2;
  return f;
}

template <typename Scalar>
State<Scalar> kepec_flux(const State<Scalar>& u_l, const State<Scalar>& u_r, int l, const GasParams<Scalar>& gas) {
  if (l < 0 || l > 2) throw std::out_of_range("kepec_flux: direction must be 0, 1 or 2");
  return kepec_flux(pair_means(u_l, u_r, gas), l, gas);
}

/// All three Cartesian KEPEC fluxes as columns.
template <typename Scalar>
BlockFlux<Scalar> kepec_block(const PairMeans<Scalar>& m, const GasParams<Scalar>& gas) {
  BlockFlux<Scalar> f;
  for (int l = 0; l < 3; ++l) f.col(l) = kepec_flux(m, l, gas);
  return f;
}

template <typename Scalar>
BlockFlux<Scalar> kepec_block(const State<Scalar>& u_l, const State<Scalar>& u_r, const GasParams<Scalar>& gas) {
  return kepec_block(pair_means(u_l, u_r, gas), gas);
}

/// Contraction of the KEPEC flux with a metric vector without forming all three columns.
template <typename Scalar>
State<Scalar> kepec_contracted(const PairMeans<Scalar>& m, const Vector3<Scalar>& ja, const GasParams<Scalar>& gas) {
  const Scalar vn = m.v_avg.dot(ja);
  const Scalar mass = m.rho_ln * vn;
  State<Scalar> f;
  f(0) = mass;
  f.template segment<3>(1) = mass * m.v_avg + m.p_avg * ja;
  f(4) = m.p_ln * vn / (gas.gamma - 1) + m.p_avg * vn + mass * m.v2_bar / 2;
  return f;
}

/// F^ec . Ja_avg, the EC flux contracted with an averaged metric vector.
template <typename Scalar>
State<Scalar> contravariant_ec_flux(const State<Scalar>& u_l, const State<Scalar>& u_r, const Vector3<Scalar>& ja_avg,
                                    const GasParams<Scalar>& gas) {
  return kepec_contracted(pair_means(u_l, u_r, gas), ja_avg, gas);
}

/// Orthonormal frame (n, t1, t2) as rows. The helper axis is the one after
/// the largest-magnitude normal component, so n = x gives the identity.
template <typename Scalar> Matrix3<Scalar> normal_frame(const Vector3<Scalar>& n) {
  int k = 0;
  n.cwiseAbs().maxCoeff(&k);
  Vector3<Scalar> helper = Vector3<Scalar>::Zero();
  helper((k + 1) % 3) = 1;
  Vector3<Scalar> t1 = helper - helper.dot(n) * n;
  t1.normalize();
  const Vector3<Scalar> t2 = n.cross(t1);
  Matrix3<Scalar> frame;
  frame.row(0) = n.transpose();
  frame.row(1) = t1.transpose();
  frame.row(2) = t2.transpose();
  return frame;
}

/// Symmetric positive semidefinite matrix R|Lambda|T R^T for the direction n.
template <typename Scalar>
Matrix5<Scalar> es_dissipation_matrix(const State<Scalar>& u_l, const State<Scalar>& u_r, const Vector3<Scalar>& n,
                                      const GasParams<Scalar>& gas) {
  const Matrix3<Scalar> frame = normal_frame(n);
  Matrix5<Scalar> rot = Matrix5<Scalar>::Identity();
  rot.template block<3, 3>(1, 1) = frame;
  const State<Scalar> ul = rot * u_l, ur = rot * u_r;
  const auto m = pair_means(ul, ur, gas);
  const Scalar g = gas.gamma;
  const Scalar a = std::sqrt(g * m.p_avg / m.rho_ln);
  const Scalar h = g / (2 * m.beta_ln * (g - 1)) + m.v2_bar / 2;
  const Scalar v1 = m.v_avg(0), v2 = m.v_avg(1), v3 = m.v_avg(2);

  Matrix5<Scalar> r;
  r << 1, 1, 0, 0, 1,
       v1 - a, v1, 0, 0, v1 + a,
       v2, v2, 1, 0, v2,
       v3, v3, 0, 1, v3,
       h - v1 * a, m.v2_bar / 2, v2, v3, h + v1 * a;
  Vector5<Scalar> lam_t;
  lam_t << std::abs(v1 - a) * m.rho_ln / (2 * g), std::abs(v1) * m.rho_ln * (g - 1) / g,
      std::abs(v1) * m.p_avg, std::abs(v1) * m.p_avg, std::abs(v1 + a) * m.rho_ln / (2 * g);
  const Matrix5<Scalar> local = r * lam_t.asDiagonal() * r.transpose();
  return rot.transpose() * local * rot;
}

/// Matrix-dissipation penalty -1/2 s R|Lambda|T R^T [w] with [w] = w_r - w_l.
template <typename Scalar>
State<Scalar> es_dissipation(const State<Scalar>& u_l, const State<Scalar>& u_r, const Vector3<Scalar>& n, Scalar s_hat,
                             const GasParams<Scalar>& gas) {
  const EntropyState<Scalar> jump = entropy_variables(u_r, gas) - entropy_variables(u_l, gas);
  return Scalar(-0.5) * s_hat * (es_dissipation_matrix(u_l, u_r, n, gas) * jump);
}

template <typename Scalar> Scalar br1_average(Scalar a, Scalar b) { return (a + b) / 2; }

template <typename Derived>
auto br1_average_state(const Eigen::MatrixBase<Derived>& w_l, const Eigen::MatrixBase<Derived>& w_r) {
  return ((w_l + w_r) / 2).eval();
}

template <typename Derived>
auto br1_average_flux(const Eigen::MatrixBase<Derived>& f_l, const Eigen::MatrixBase<Derived>& f_r) {
  return ((f_l + f_r) / 2).eval();
}

/// (U^2 + U V + V^2) / 6.
template <typename Scalar> Scalar burgers_ec_flux(Scalar u, Scalar v) { return (u * u + u * v + v * v) / 6; }

/// a <U> - sigma |a| [U] / 2; sigma = 1 is full upwind, sigma = 0 central.
template <typename Scalar> Scalar linear_flux(Scalar a, Scalar u_l, Scalar u_r, Scalar sigma) {
  return a * (u_l + u_r) / 2 - sigma * std::abs(a) * (u_r - u_l) / 2;
}

} // namespace br1

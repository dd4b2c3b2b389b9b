#pragma once

// Nondimensional compressible Navier-Stokes state algebra and the scalar
// 1D model problems (linear advection-diffusion, viscous Burgers).

#include "br1/types.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <string>

namespace br1 {

/// Gas and flow parameters. `reynolds = inf` switches the viscous terms off.
template <typename Scalar = double> struct GasParams {
  Scalar gamma = Scalar(1.4);
  Scalar reynolds = std::numeric_limits<Scalar>::infinity();
  Scalar prandtl = Scalar(0.72);
  Scalar mach = Scalar(0.1);
  Scalar mu = Scalar(1);

  bool viscous() const { return std::isfinite(static_cast<double>(reynolds)); }
  /// Heat conductivity lambda = mu / ((gamma - 1) Pr M^2).
  Scalar conductivity() const { return mu / ((gamma - 1) * prandtl * mach * mach); }
  /// T = gamma M^2 p / rho.
  Scalar temperature(Scalar rho, Scalar p) const { return gamma * mach * mach * p / rho; }
};

using Gas = GasParams<double>;

inline constexpr double kRhoMin = 1e-10;
inline constexpr double kPressureMin = 1e-10;

template <typename Scalar> struct Primitive {
  Scalar rho;
  Vector3<Scalar> v;
  Scalar p;
};

template <typename Scalar>
Scalar pressure(const State<Scalar>& u, const GasParams<Scalar>& gas) {
  if (!(u(0) > 0)) throw PositivityError("pressure: nonpositive density");
  const Scalar kinetic = (u(1) * u(1) + u(2) * u(2) + u(3) * u(3)) / (2 * u(0));
  return (gas.gamma - 1) * (u(4) - kinetic);
}

template <typename Scalar>
Primitive<Scalar> to_primitive(const State<Scalar>& u, const GasParams<Scalar>& gas) {
  Primitive<Scalar> w;
  w.rho = u(0);
  w.p = pressure(u, gas);
  w.v = u.template segment<3>(1) / u(0);
  return w;
}

template <typename Scalar>
State<Scalar> from_primitive(Scalar rho, const Vector3<Scalar>& v, Scalar p, const GasParams<Scalar>& gas) {
  State<Scalar> u;
  u(0) = rho;
  u.template segment<3>(1) = rho * v;
  u(4) = p / (gas.gamma - 1) + rho * v.squaredNorm() / 2;
  return u;
}

/// True when rho and p exceed the admissibility floors and are finite.
template <typename Scalar>
bool is_admissible(const State<Scalar>& u, const GasParams<Scalar>& gas) {
  if (!u.allFinite() || !(u(0) > Scalar(kRhoMin))) return false;
  return pressure(u, gas) > Scalar(kPressureMin);
}

/// Cartesian advective fluxes f_1, f_2, f_3 (columns).
template <typename Scalar>
BlockFlux<Scalar> euler_flux(const State<Scalar>& u, const GasParams<Scalar>& gas) {
  const Scalar p = pressure(u, gas);
  if (!(p > 0)) throw PositivityError("euler_flux: nonpositive pressure");
  const Vector3<Scalar> v = u.template segment<3>(1) / u(0);
  BlockFlux<Scalar> f;
  for (int d = 0; d < 3; ++d) {
    f(0, d) = u(1 + d);
    f.template block<3, 1>(1, d) = u(1 + d) * v;
    f(1 + d, d) += p;
    f(4, d) = v(d) * (u(4) + p);
  }
  return f;
}

/// Physical entropy varsigma = ln p - gamma ln rho.
template <typename Scalar>
Scalar physical_entropy(Scalar rho, Scalar p, const GasParams<Scalar>& gas) {
  return std::log(p) - gas.gamma * std::log(rho);
}

template <typename Scalar>
EntropyState<Scalar> entropy_variables(const State<Scalar>& u, const GasParams<Scalar>& gas) {
  const Scalar p = pressure(u, gas);
  if (!(u(0) > 0) || !(p > 0)) throw PositivityError("entropy_variables: state outside rho > 0, p > 0");
  const Scalar rho = u(0);
  const Vector3<Scalar> v = u.template segment<3>(1) / rho;
  const Scalar sigma = physical_entropy(rho, p, gas);
  const Scalar beta = rho / p;
  EntropyState<Scalar> w;
  w(0) = (gas.gamma - sigma) / (gas.gamma - 1) - beta * v.squaredNorm() / 2;
  w.template segment<3>(1) = beta * v;
  w(4) = -beta;
  return w;
}

template <typename Scalar>
State<Scalar> conservative_from_entropy(const EntropyState<Scalar>& w, const GasParams<Scalar>& gas) {
  if (!(w(4) < 0)) throw PositivityError("conservative_from_entropy: w5 must be negative");
  const Scalar rho_over_p = -w(4);
  const Vector3<Scalar> v = w.template segment<3>(1) / rho_over_p;
  const Scalar sigma = gas.gamma - (gas.gamma - 1) * (w(0) - w(4) * v.squaredNorm() / 2);
  // sigma = ln p - gamma ln rho with p = rho / rho_over_p
  const Scalar log_rho = (sigma + std::log(rho_over_p)) / (1 - gas.gamma);
  const Scalar rho = std::exp(log_rho);
  return from_primitive(rho, v, rho / rho_over_p, gas);
}

/// Mathematical entropy s = -rho varsigma / (gamma - 1).
template <typename Scalar>
Scalar entropy(const State<Scalar>& u, const GasParams<Scalar>& gas) {
  const Scalar p = pressure(u, gas);
  if (!(u(0) > 0) || !(p > 0)) throw PositivityError("entropy: state outside rho > 0, p > 0");
  return -u(0) * physical_entropy(u(0), p, gas) / (gas.gamma - 1);
}

template <typename Scalar> struct EntropyPair {
  Scalar s;
  Vector3<Scalar> flux;
};

/// Entropy and entropy flux f_ent = s v.
template <typename Scalar>
EntropyPair<Scalar> entropy_and_flux(const State<Scalar>& u, const GasParams<Scalar>& gas) {
  const Scalar s = entropy(u, gas);
  return {s, s * u.template segment<3>(1) / u(0)};
}

/// Entropy potential Psi_l = w^T f_l - f_ent_l for each direction.
template <typename Scalar>
Vector3<Scalar> entropy_potential(const State<Scalar>& u, const GasParams<Scalar>& gas) {
  const EntropyState<Scalar> w = entropy_variables(u, gas);
  const BlockFlux<Scalar> f = euler_flux(u, gas);
  const auto pair = entropy_and_flux(u, gas);
  return (f.transpose() * w) - pair.flux;
}

/// Cartesian gradients of velocity (row d = d/dx_d) and temperature recovered
/// from the entropy-variable gradients by the chain rule.
template <typename Scalar> struct PrimitiveGradients {
  Matrix3<Scalar> grad_v; // grad_v(d, i) = dv_i / dx_d
  Vector3<Scalar> grad_t;
};

template <typename Scalar>
PrimitiveGradients<Scalar> primitive_gradients(const State<Scalar>& u, const BlockFlux<Scalar>& grad_w,
                                               const GasParams<Scalar>& gas) {
  const Scalar p = pressure(u, gas);
  const Scalar rho = u(0);
  const Vector3<Scalar> v = u.template segment<3>(1) / rho;
  const Scalar w5 = -rho / p;
  PrimitiveGradients<Scalar> g;
  for (int d = 0; d < 3; ++d) {
    // v_i = -w_{i+1} / w5
    for (int i = 0; i < 3; ++i) g.grad_v(d, i) = -(grad_w(1 + i, d) + v(i) * grad_w(4, d)) / w5;
    // T = -gamma M^2 / w5
    g.grad_t(d) = gas.gamma * gas.mach * gas.mach * grad_w(4, d) / (w5 * w5);
  }
  return g;
}

/// Viscous fluxes f_v,1..3 from the state and entropy-variable gradients
/// (without the 1/Re factor).
template <typename Scalar>
BlockFlux<Scalar> viscous_flux(const State<Scalar>& u, const BlockFlux<Scalar>& grad_w,
                               const GasParams<Scalar>& gas) {
  if (!(u(0) > 0)) throw PositivityError("viscous_flux: nonpositive density");
  const auto g = primitive_gradients(u, grad_w, gas);
  const Vector3<Scalar> v = u.template segment<3>(1) / u(0);
  const Scalar div_v = g.grad_v.trace();
  Matrix3<Scalar> tau = gas.mu * (g.grad_v + g.grad_v.transpose());
  tau.diagonal().array() -= Scalar(2) / 3 * gas.mu * div_v;
  const Scalar lambda = gas.conductivity();
  BlockFlux<Scalar> fv;
  for (int d = 0; d < 3; ++d) {
    fv(0, d) = 0;
    fv.template block<3, 1>(1, d) = tau.row(d).transpose();
    fv(4, d) = tau.row(d).dot(v) + lambda * g.grad_t(d);
  }
  return fv;
}

// Scalar Burgers: f = u^2/2, s = u^2/2, w = u, f_ent = u^3/3.
template <typename Scalar> Scalar burgers_flux(Scalar u) { return u * u / 2; }
template <typename Scalar> Scalar burgers_entropy(Scalar u) { return u * u / 2; }
template <typename Scalar> Scalar burgers_entropy_variable(Scalar u) { return u; }
template <typename Scalar> Scalar burgers_entropy_flux(Scalar u) { return u * u * u / 3; }

/// Coefficients of u_t + (a u)_x = (b(x) u_x)_x.
struct AdvDiffCoefficients {
  double a = 1.0;
  std::function<double(double)> b = [](double) { return 1.0; };

  /// Throws if b is not strictly positive at every sample point.
  void validate(std::span<const double> samples) const {
    for (double x : samples)
      if (!(b(x) > 0)) throw std::invalid_argument("diffusion coefficient b(x) must be positive, x = " + std::to_string(x));
  }
};

inline AdvDiffCoefficients linear_advdiff_coeffs(double a, std::function<double(double)> b) {
  return AdvDiffCoefficients{a, std::move(b)};
}

} // namespace br1

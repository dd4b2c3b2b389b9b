#include "br1/dg1d.hpp"

#include "br1/fluxes.hpp"

#include <stdexcept>

namespace br1 {

Eigen::VectorXd Mesh1d::coordinates() const {
  Eigen::VectorXd x(size());
  for (int e = 0; e < num_elements(); ++e)
    for (int i = 0; i < n(); ++i) x(e * n() + i) = node_x(e, i);
  return x;
}

Mesh1d build_line_mesh(double left, double right, int elements, int degree) {
  if (elements < 1) throw std::invalid_argument("line mesh: need at least one element");
  if (!(right > left)) throw std::invalid_argument("line mesh: right end must exceed left end");
  Mesh1d m;
  m.ops = Operators::build(degree);
  const double h = (right - left) / elements;
  for (int e = 0; e < elements; ++e) {
    m.x0.push_back(left + e * h);
    m.dx.push_back(h);
  }
  return m;
}

namespace {

void check_size(const Mesh1d& mesh, const Eigen::VectorXd& u) {
  if (u.size() != mesh.size()) throw std::invalid_argument("1D solution size does not match the mesh");
}

// Values at the left (xi = -1) and right (xi = +1) end of element e.
double left_value(const Mesh1d& m, const Eigen::VectorXd& v, int e) { return v(e * m.n()); }
double right_value(const Mesh1d& m, const Eigen::VectorXd& v, int e) { return v(e * m.n() + m.n() - 1); }

// BR1 gradient: (dx/2) w Q = B (W* - W) + w D W, with the boundary states
// given for the outer ends when not periodic.
Eigen::VectorXd br1_gradient_1d(const Mesh1d& m, const Eigen::VectorXd& w, bool periodic, double w_left_bc,
                                double w_right_bc, bool right_bc_is_own) {
  const int n = m.n(), k = m.num_elements();
  const double w_end = m.ops.weights(0);
  Eigen::VectorXd q(w.size());
  for (int e = 0; e < k; ++e) {
    const Eigen::VectorXd we = w.segment(e * n, n);
    Eigen::VectorXd qe = m.ops.d * we;
    double star_l, star_r;
    if (e > 0 || periodic)
      star_l = (we(0) + right_value(m, w, (e + k - 1) % k)) / 2;
    else
      star_l = w_left_bc;
    if (e < k - 1 || periodic)
      star_r = (we(n - 1) + left_value(m, w, (e + 1) % k)) / 2;
    else
      star_r = right_bc_is_own ? we(n - 1) : w_right_bc;
    qe(0) -= (star_l - we(0)) / w_end;
    qe(n - 1) += (star_r - we(n - 1)) / w_end;
    q.segment(e * n, n) = qe * (2 / m.dx[e]);
  }
  return q;
}

} // namespace

double advdiff_interface_energy(double a, double u_left, double u_right, double sigma) {
  const double jump = u_right - u_left;
  return linear_flux(a, u_left, u_right, sigma) * jump - a * (u_right * u_right - u_left * u_left) / 2;
}

Eigen::VectorXd rhs_linear_advdiff(const Mesh1d& m, const Eigen::VectorXd& u, const AdvDiffCoefficients& c,
                                   const AdvDiffScheme& scheme) {
  check_size(m, u);
  const int n = m.n(), k = m.num_elements();
  const double a = c.a;
  const auto& ops = m.ops;
  const Eigen::VectorXd x = m.coordinates();
  Eigen::VectorXd b(x.size());
  for (int g = 0; g < x.size(); ++g) b(g) = c.b(x(g));
  c.validate(std::span<const double>(x.data(), static_cast<std::size_t>(x.size())));

  // Left: U* = 0, Q* = Q. Right: U* = U, Q* = 0.
  const Eigen::VectorXd q = br1_gradient_1d(m, u, scheme.periodic, 0.0, 0.0, true);

  Eigen::VectorXd out(u.size());
  for (int e = 0; e < k; ++e) {
    const Eigen::VectorXd ue = u.segment(e * n, n);
    const Eigen::VectorXd be = b.segment(e * n, n);
    const Eigen::VectorXd qe = q.segment(e * n, n);
    const Eigen::VectorXd wu = ops.weights.cwiseProduct(ue);
    const Eigen::VectorXd wbq = ops.weights.cwiseProduct(be.cwiseProduct(qe));

    // w_i (dx/2) U_t = -1/2 {w D(aU) - a D^T(w U)} - D^T(w b Q) - B {(F* - aU/2) - b Q*}
    Eigen::VectorXd r = -0.5 * ops.weights.cwiseProduct(ops.d * (a * ue)) + 0.5 * a * (ops.d.transpose() * wu) -
                        ops.d.transpose() * wbq;

    double f_l, bq_l, f_r, bq_r;
    const int prev = (e + k - 1) % k, next = (e + 1) % k;
    if (e > 0 || scheme.periodic) {
      f_l = linear_flux(a, right_value(m, u, prev), ue(0), scheme.sigma);
      bq_l = be(0) * (qe(0) + right_value(m, q, prev)) / 2;
    } else {
      f_l = 0.0;
      bq_l = be(0) * qe(0);
    }
    if (e < k - 1 || scheme.periodic) {
      f_r = linear_flux(a, ue(n - 1), left_value(m, u, next), scheme.sigma);
      bq_r = be(n - 1) * (qe(n - 1) + left_value(m, q, next)) / 2;
    } else {
      f_r = a * ue(n - 1);
      bq_r = 0.0;
    }
    r(0) += (f_l - a * ue(0) / 2) - bq_l;
    r(n - 1) -= (f_r - a * ue(n - 1) / 2) - bq_r;
    out.segment(e * n, n) = r.cwiseQuotient(ops.weights) * (2 / m.dx[e]);
  }
  return out;
}

Eigen::VectorXd burgers_volume_ec(const Operators& ops, const Eigen::VectorXd& u) {
  const int n = ops.size();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i)
    for (int m = 0; m < n; ++m) out(i) += 2 * ops.d(i, m) * burgers_ec_flux(u(i), u(m));
  return out;
}

Eigen::VectorXd burgers_volume_split(const Operators& ops, const Eigen::VectorXd& u) {
  const Eigen::VectorXd u2 = u.cwiseProduct(u);
  return (ops.d * u2 + u.cwiseProduct(ops.d * u)) / 3;
}

Eigen::VectorXd rhs_burgers(const Mesh1d& m, const Eigen::VectorXd& u, const BurgersScheme& scheme) {
  check_size(m, u);
  if (!(scheme.nu >= 0)) throw std::invalid_argument("Burgers viscosity must be nonnegative");
  const int n = m.n(), k = m.num_elements();
  const auto& ops = m.ops;
  const double w_end = ops.weights(0);

  // W = U; Dirichlet u = 0 enters as W* = 0 at both physical ends.
  const Eigen::VectorXd q = br1_gradient_1d(m, u, scheme.periodic, 0.0, 0.0, false);
  const Eigen::VectorXd fv = scheme.nu * q;

  Eigen::VectorXd out(u.size());
  for (int e = 0; e < k; ++e) {
    const Eigen::VectorXd ue = u.segment(e * n, n);
    const Eigen::VectorXd fve = fv.segment(e * n, n);
    Eigen::VectorXd r = scheme.volume == VolumeMode::EntropyConservative
                            ? burgers_volume_ec(ops, ue)
                            : Eigen::VectorXd(ops.d * (ue.cwiseProduct(ue) / 2));
    r = -r + ops.d * fve;

    const int prev = (e + k - 1) % k, next = (e + 1) % k;
    double fs_l, fs_r, fvs_l, fvs_r;
    if (e > 0 || scheme.periodic) {
      fs_l = burgers_ec_flux(right_value(m, u, prev), ue(0));
      fvs_l = (fve(0) + right_value(m, fv, prev)) / 2;
    } else {
      fs_l = burgers_ec_flux(-ue(0), ue(0)); // mirror state, entropy neutral
      fvs_l = fve(0);
    }
    if (e < k - 1 || scheme.periodic) {
      fs_r = burgers_ec_flux(ue(n - 1), left_value(m, u, next));
      fvs_r = (fve(n - 1) + left_value(m, fv, next)) / 2;
    } else {
      fs_r = burgers_ec_flux(ue(n - 1), -ue(n - 1));
      fvs_r = fve(n - 1);
    }
    // -(F* - F) B / w + (Fv* - Fv) B / w
    r(0) += ((fs_l - burgers_flux(ue(0))) - (fvs_l - fve(0))) / w_end;
    r(n - 1) -= ((fs_r - burgers_flux(ue(n - 1))) - (fvs_r - fve(n - 1))) / w_end;
    out.segment(e * n, n) = r * (2 / m.dx[e]);
  }
  return out;
}

double energy_norm_1d(const Mesh1d& m, const Eigen::VectorXd& u) {
  check_size(m, u);
  double sum = 0;
  const int n = m.n();
  for (int e = 0; e < m.num_elements(); ++e)
    sum += m.dx[e] / 2 * m.ops.weights.dot(u.segment(e * n, n).cwiseProduct(u.segment(e * n, n)));
  return sum;
}

double energy_rate_1d(const Mesh1d& m, const Eigen::VectorXd& u, const Eigen::VectorXd& dudt) {
  check_size(m, u);
  check_size(m, dudt);
  double sum = 0;
  const int n = m.n();
  for (int e = 0; e < m.num_elements(); ++e)
    sum += m.dx[e] / 2 * m.ops.weights.dot(u.segment(e * n, n).cwiseProduct(dudt.segment(e * n, n)));
  return sum;
}

} // namespace br1

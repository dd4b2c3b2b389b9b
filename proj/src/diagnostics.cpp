#include "br1/diagnostics.hpp"

#include <algorithm>
#include <iomanip>
#include <stdexcept>

namespace br1 {

double total_entropy(const NseOperator& op, const Field5& u) {
  op.check_admissible(u);
  double sum = 0;
  for (int g = 0; g < u.cols(); ++g) sum += op.mass()(g) * entropy<double>(u.col(g), op.gas());
  return sum;
}

double kinetic_energy(const NseOperator& op, const Field5& u) {
  double sum = 0;
  for (int g = 0; g < u.cols(); ++g) sum += op.mass()(g) * u.col(g).segment<3>(1).squaredNorm() / (2 * u(0, g));
  return sum;
}

double enstrophy(const NseOperator& op, const Field5& u) {
  const Gradient q = op.gradients(op.entropy_variables(u));
  double sum = 0;
  for (int g = 0; g < u.cols(); ++g) {
    Block grad;
    for (int d = 0; d < 3; ++d) grad.col(d) = q[d].col(g);
    const auto pg = primitive_gradients<double>(u.col(g), grad, op.gas());
    // grad_v(d, i) = dv_i/dx_d
    const Vec3 omega(pg.grad_v(1, 2) - pg.grad_v(2, 1), pg.grad_v(2, 0) - pg.grad_v(0, 2),
                     pg.grad_v(0, 1) - pg.grad_v(1, 0));
    sum += op.mass()(g) * u(0, g) * omega.squaredNorm() / 2;
  }
  return sum;
}

Vec5 conserved_totals(const NseOperator& op, const Field5& u) { return u * op.mass(); }

double entropy_rate_audit(const NseOperator& op, const Field5& u, const Field5& dudt) {
  return op.entropy_rate(u, dudt);
}

double total_mass_1d(const Mesh1d& m, const Eigen::VectorXd& u) {
  double sum = 0;
  const int n = m.n();
  for (int e = 0; e < m.num_elements(); ++e) sum += m.dx[e] / 2 * m.ops.weights.dot(u.segment(e * n, n));
  return sum;
}

void TimeSeries::add(Record r) {
  if (!records_.empty() && !(r.t > records_.back().t))
    throw std::invalid_argument("TimeSeries: samples must have strictly increasing t");
  records_.push_back(r);
}

std::vector<double> three_point_derivative(const std::vector<double>& t, const std::vector<double>& y) {
  const std::size_t n = t.size();
  if (n < 3 || y.size() != n) throw std::invalid_argument("three_point_derivative: need >= 3 matching samples");
  std::vector<double> dy(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = std::clamp<std::size_t>(i, 1, n - 2);
    const double t0 = t[c - 1], t1 = t[c], t2 = t[c + 1], x = t[i];
    // derivative of the quadratic interpolant through the three samples
    const double l0 = ((x - t1) + (x - t2)) / ((t0 - t1) * (t0 - t2));
    const double l1 = ((x - t0) + (x - t2)) / ((t1 - t0) * (t1 - t2));
    const double l2 = ((x - t0) + (x - t1)) / ((t2 - t0) * (t2 - t1));
    dy[i] = l0 * y[c - 1] + l1 * y[c] + l2 * y[c + 1];
  }
  return dy;
}

void TimeSeries::finalize() {
  std::vector<double> t, e;
  for (const auto& r : records_) {
    if (!r.kinetic) return;
    t.push_back(r.t);
    e.push_back(*r.kinetic);
  }
  if (t.size() < 3) return;
  const auto de = three_point_derivative(t, e);
  for (std::size_t i = 0; i < records_.size(); ++i) {
    auto& r = records_[i];
    r.diss = -de[i];
    r.re_num.reset();
    if (*r.diss > 0 && r.enstrophy) r.re_num = 2 * *r.enstrophy / *r.diss;
  }
}

void TimeSeries::write_csv(std::ostream& os) const {
  const auto flags = os.flags();
  const auto prec = os.precision();
  os << "t,S,Ekin,ens,diss,Re_num,mass\n";
  os << std::setprecision(17);
  auto field = [&](const std::optional<double>& v) {
    os << ',';
    if (v) os << *v;
  };
  for (const auto& r : records_) {
    os << r.t;
    field(r.entropy);
    field(r.kinetic);
    field(r.enstrophy);
    field(r.diss);
    field(r.re_num);
    field(r.mass);
    os << '\n';
  }
  os.flags(flags);
  os.precision(prec);
}

} // namespace br1

#pragma once

// Discrete functionals (entropy, kinetic energy, enstrophy, conserved
// totals), entropy-rate audits and the diagnostic time series.

#include "br1/dg1d.hpp"
#include "br1/dg3d.hpp"

#include <optional>
#include <ostream>
#include <vector>

namespace br1 {

/// sum_k <J s(U), 1>_N.
double total_entropy(const NseOperator& op, const Field5& u);
/// sum_k <J rho |v|^2 / 2, 1>_N.
double kinetic_energy(const NseOperator& op, const Field5& u);
/// sum_k <J rho |curl v|^2 / 2, 1>_N with velocity gradients recovered from
/// the BR1 entropy-variable gradients.
double enstrophy(const NseOperator& op, const Field5& u);
/// sum_k <J U, 1>_N for all five components.
Vec5 conserved_totals(const NseOperator& op, const Field5& u);
/// sum omega J W^T dU/dt; linear in dudt.
double entropy_rate_audit(const NseOperator& op, const Field5& u, const Field5& dudt);

/// sum_k (dx_k/2) <U, 1>_N.
double total_mass_1d(const Mesh1d& mesh, const Eigen::VectorXd& u);

struct Record {
  double t = 0;
  std::optional<double> entropy, kinetic, enstrophy, diss, re_num, mass;
};

class TimeSeries {
public:
  /// Samples must be added with strictly increasing t.
  void add(Record r);
  const std::vector<Record>& records() const { return records_; }
  /// Fills diss = -dE_kin/dt by three-point differences (centered in the
  /// interior, one-sided at the ends) and Re_num = 2 ens / diss where diss > 0.
  void finalize();
  /// Header t,S,Ekin,ens,diss,Re_num,mass; 17 significant digits; missing
  /// values as empty fields.
  void write_csv(std::ostream& os) const;

private:
  std::vector<Record> records_;
};

/// Three-point derivative estimate of y at each t (needs >= 3 samples).
std::vector<double> three_point_derivative(const std::vector<double>& t, const std::vector<double>& y);

} // namespace br1

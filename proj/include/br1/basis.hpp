#pragma once

// Legendre-Gauss-Lobatto nodal operators: quadrature, Lagrange
// differentiation and the summation-by-parts matrices Q = diag(w) D,
// B = diag(-1, 0, ..., 0, 1).

#include "br1/types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace br1 {

template <typename Scalar> using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar> using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Degrees above this are constructed but not covered by the invariant checks.
inline constexpr int kMaxVerifiedDegree = 32;

/// Legendre polynomial P_N and its first derivative at x (three-term recurrence).
template <typename Scalar>
std::pair<Scalar, Scalar> legendre_and_derivative(int degree, Scalar x) {
  if (degree == 0) return {Scalar(1), Scalar(0)};
  Scalar p_prev(1), p(x);
  Scalar dp_prev(0), dp(1);
  for (int k = 2; k <= degree; ++k) {
    const Scalar kk(k);
    const Scalar p_next = ((2 * kk - 1) * x * p - (kk - 1) * p_prev) / kk;
    const Scalar dp_next = dp_prev + (2 * kk - 1) * p;
    p_prev = p;
    p = p_next;
    dp_prev = dp;
    dp = dp_next;
  }
  return {p, dp};
}

/// Nodes and weights of the (N+1)-point Gauss-Lobatto rule.
template <typename Scalar> struct QuadratureRule {
  VectorX<Scalar> nodes;
  VectorX<Scalar> weights;
};

class RootFindError : public std::runtime_error {
public:
  RootFindError(const std::string& what, int index)
      : std::runtime_error(what), index_(index) {}
  int index() const { return index_; }

private:
  int index_;
};

namespace detail {

// q(x) = P'_N(x) and q'(x) = P''_N(x); interior LGL nodes are the roots of P'_N.
template <typename Scalar>
std::pair<Scalar, Scalar> lobatto_residual(int degree, Scalar x) {
  const auto [p, dp] = legendre_and_derivative(degree, x);
  const Scalar n1 = Scalar(degree) * Scalar(degree + 1);
  const Scalar d2p = (2 * x * dp - n1 * p) / (1 - x * x);
  return {dp, d2p};
}

template <typename Scalar>
Scalar bisect_lobatto_root(int degree, Scalar lo, Scalar hi, Scalar tol) {
  Scalar flo = lobatto_residual(degree, lo).first;
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const Scalar mid = (lo + hi) / 2;
    const Scalar fmid = lobatto_residual(degree, mid).first;
    if ((fmid < 0) == (flo < 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

} // namespace detail

/// Gauss-Lobatto nodes (roots of (1 - x^2) P'_N) and weights
/// w_i = 2 / (N (N+1) P_N(x_i)^2). Newton from Chebyshev-Gauss-Lobatto
/// guesses, with a bracketed bisection fallback.
template <typename Scalar = double> QuadratureRule<Scalar> lgl_rule(int degree) {
  if (degree < 1) throw std::invalid_argument("lgl_rule: degree must be >= 1");
  const int n = degree + 1;
  const Scalar tol = std::max(Scalar(1e-15), Scalar(4) * std::numeric_limits<Scalar>::epsilon());
  const Scalar pi = std::numbers::pi_v<Scalar>;

  QuadratureRule<Scalar> rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  rule.nodes(0) = Scalar(-1);
  rule.nodes(degree) = Scalar(1);

  // Only the left half is solved; the rule is symmetric about 0.
  for (int i = 1; i <= (degree - 1) / 2; ++i) {
    Scalar x = -std::cos(pi * Scalar(i) / Scalar(degree));
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      const auto [q, dq] = detail::lobatto_residual(degree, x);
      const Scalar step = q / dq;
      x -= step;
      if (!(std::abs(x) < 1)) break;
      if (std::abs(step) <= tol) {
        converged = true;
        break;
      }
    }
    // Interior roots interlace the CGL points, so (cgl_{i-1}, cgl_{i+1}) brackets root i.
    const Scalar lo = -std::cos(pi * Scalar(i - 1) / Scalar(degree));
    const Scalar hi = -std::cos(pi * Scalar(i + 1) / Scalar(degree));
    if (!converged || !(x > lo && x < hi)) {
      const Scalar flo = detail::lobatto_residual(degree, lo + tol).first;
      const Scalar fhi = detail::lobatto_residual(degree, hi - tol).first;
      if ((flo < 0) == (fhi < 0))
        throw RootFindError("lgl_rule: root solve did not converge for node " + std::to_string(i), i);
      x = detail::bisect_lobatto_root(degree, lo + tol, hi - tol, tol / 4);
    }
    rule.nodes(i) = x;
    rule.nodes(degree - i) = -x;
  }
  if (degree % 2 == 0) rule.nodes(degree / 2) = Scalar(0);

  const Scalar n1 = Scalar(degree) * Scalar(degree + 1);
  for (int i = 0; i < n; ++i) {
    const Scalar p = legendre_and_derivative(degree, rule.nodes(i)).first;
    rule.weights(i) = Scalar(2) / (n1 * p * p);
  }
  for (int i = 0; i < n / 2; ++i) {
    const Scalar w = (rule.weights(i) + rule.weights(degree - i)) / 2;
    rule.weights(i) = w;
    rule.weights(degree - i) = w;
  }
  return rule;
}

/// Barycentric weights lambda_j = 1 / prod_{k != j} (x_j - x_k).
template <typename Scalar>
VectorX<Scalar> barycentric_weights(const VectorX<Scalar>& nodes) {
  const Eigen::Index n = nodes.size();
  VectorX<Scalar> lambda = VectorX<Scalar>::Ones(n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k)
      if (k != j) {
        const Scalar diff = nodes(j) - nodes(k);
        if (diff == Scalar(0))
          throw std::invalid_argument("barycentric_weights: duplicate nodes at " + std::to_string(j) +
                                      " and " + std::to_string(k));
        lambda(j) /= diff;
      }
  return lambda;
}

/// Lagrange differentiation matrix D_ij = l'_j(x_i); diagonal by negative row sums.
template <typename Scalar>
MatrixX<Scalar> diff_matrix(const VectorX<Scalar>& nodes) {
  const Eigen::Index n = nodes.size();
  const VectorX<Scalar> lambda = barycentric_weights(nodes);
  MatrixX<Scalar> d = MatrixX<Scalar>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Scalar diag(0);
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == i) continue;
      d(i, j) = (lambda(j) / lambda(i)) / (nodes(i) - nodes(j));
      diag -= d(i, j);
    }
    d(i, i) = diag;
  }
  return d;
}

/// Lagrange interpolation matrix from `nodes` to `targets`.
template <typename Scalar>
MatrixX<Scalar> interpolation_matrix(const VectorX<Scalar>& nodes, const VectorX<Scalar>& targets) {
  const VectorX<Scalar> lambda = barycentric_weights(nodes);
  MatrixX<Scalar> m = MatrixX<Scalar>::Zero(targets.size(), nodes.size());
  for (Eigen::Index r = 0; r < targets.size(); ++r) {
    bool hit = false;
    for (Eigen::Index j = 0; j < nodes.size(); ++j)
      if (targets(r) == nodes(j)) {
        m(r, j) = Scalar(1);
        hit = true;
      }
    if (hit) continue;
    Scalar denom(0);
    for (Eigen::Index j = 0; j < nodes.size(); ++j) {
      m(r, j) = lambda(j) / (targets(r) - nodes(j));
      denom += m(r, j);
    }
    m.row(r) /= denom;
  }
  return m;
}

template <typename Scalar> struct SbpPair {
  MatrixX<Scalar> q;
  MatrixX<Scalar> b;
};

/// Q = diag(w) D and the boundary matrix B.
template <typename Scalar>
SbpPair<Scalar> sbp_matrices(const MatrixX<Scalar>& d, const VectorX<Scalar>& weights) {
  const Eigen::Index n = weights.size();
  SbpPair<Scalar> out;
  out.q = weights.asDiagonal() * d;
  out.b = MatrixX<Scalar>::Zero(n, n);
  out.b(0, 0) = Scalar(-1);
  out.b(n - 1, n - 1) = Scalar(1);
  return out;
}

/// Everything needed for one polynomial degree. Immutable after construction.
template <typename Scalar = double> struct OperatorSet {
  int degree = 0;
  VectorX<Scalar> nodes;
  VectorX<Scalar> weights;
  MatrixX<Scalar> d;
  MatrixX<Scalar> q;
  MatrixX<Scalar> b;

  int size() const { return degree + 1; }

  static OperatorSet build(int degree) {
    OperatorSet ops;
    ops.degree = degree;
    auto rule = lgl_rule<Scalar>(degree);
    ops.nodes = std::move(rule.nodes);
    ops.weights = std::move(rule.weights);
    ops.d = diff_matrix(ops.nodes);
    auto sbp = sbp_matrices(ops.d, ops.weights);
    ops.q = std::move(sbp.q);
    ops.b = std::move(sbp.b);
    return ops;
  }

  /// max |Q + Q^T - B|.
  Scalar sbp_residual() const { return (q + q.transpose() - b).cwiseAbs().maxCoeff(); }
};

using Operators = OperatorSet<double>;

/// Plain-text dump, row-major, 17 significant digits.
template <typename Scalar>
void dump_operator_set(std::ostream& os, const OperatorSet<Scalar>& ops) {
  const auto flags = os.flags();
  const auto prec = os.precision();
  os << std::setprecision(17) << std::scientific;
  os << "degree " << ops.degree << "\n";
  auto vec = [&](const char* name, const VectorX<Scalar>& v) {
    os << name << " " << v.size() << "\n";
    for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? " " : "") << static_cast<double>(v(i));
    os << "\n";
  };
  auto mat = [&](const char* name, const MatrixX<Scalar>& m) {
    os << name << " " << m.rows() << " " << m.cols() << "\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? " " : "") << static_cast<double>(m(i, j));
      os << "\n";
    }
  };
  vec("nodes", ops.nodes);
  vec("weights", ops.weights);
  mat("D", ops.d);
  mat("Q", ops.q);
  mat("B", ops.b);
  os.flags(flags);
  os.precision(prec);
}

} // namespace br1

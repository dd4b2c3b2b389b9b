#pragma once

// Lexicographic (i fastest) indexing of (N+1)^3 tensor-product nodes and
// line-wise application of the 1D differentiation matrix.

#include <Eigen/Dense>

namespace br1 {

struct TensorIndex {
  int n = 0; // nodes per direction, N + 1

  int volume() const { return n * n * n; }
  int idx(int i, int j, int k) const { return i + n * (j + n * k); }
  int stride(int dir) const { return dir == 0 ? 1 : (dir == 1 ? n : n * n); }
  int coord(int node, int dir) const { return (node / stride(dir)) % n; }
  /// Node with the coordinate along `dir` replaced by m.
  int along(int node, int dir, int m) const { return node + (m - coord(node, dir)) * stride(dir); }
};

/// Columns of f are nodal values; returns the derivative along `dir` in
/// reference coordinates.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Derived::RowsAtCompileTime, Eigen::Dynamic>
reference_derivative(const Eigen::MatrixXd& d, const Eigen::MatrixBase<Derived>& f, const TensorIndex& t, int dir) {
  using Out = Eigen::Matrix<typename Derived::Scalar, Derived::RowsAtCompileTime, Eigen::Dynamic>;
  Out out = Out::Zero(f.rows(), f.cols());
  const int s = t.stride(dir);
  for (int node = 0; node < t.volume(); ++node) {
    const int c = t.coord(node, dir);
    const int base = node - c * s;
    for (int m = 0; m < t.n; ++m) out.col(node) += d(c, m) * f.col(base + m * s);
  }
  return out;
}

} // namespace br1

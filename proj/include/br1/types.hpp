#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace br1 {

template <typename Scalar> using Vector3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar> using Vector5 = Eigen::Matrix<Scalar, 5, 1>;
template <typename Scalar> using Matrix5 = Eigen::Matrix<Scalar, 5, 5>;
template <typename Scalar> using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;

/// Conservative state (rho, rho v1, rho v2, rho v3, rho E).
template <typename Scalar> using State = Vector5<Scalar>;
/// Entropy variables w = ds/du.
template <typename Scalar> using EntropyState = Vector5<Scalar>;

/// Block vector of three state-valued components, one per Cartesian direction
/// (column d holds f_d).
template <typename Scalar> using BlockFlux = Eigen::Matrix<Scalar, 5, 3>;

using Vec3 = Vector3<double>;
using Vec5 = Vector5<double>;
using Mat5 = Matrix5<double>;
using Block = BlockFlux<double>;

/// Dense column storage of nodal 5-vectors / 3-vectors.
using Field5 = Eigen::Matrix<double, 5, Eigen::Dynamic>;
using Field3 = Eigen::Matrix<double, 3, Eigen::Dynamic>;

/// Raised when a state leaves the admissible set (rho <= 0 or p <= 0, NaN).
class PositivityError : public std::runtime_error {
public:
  PositivityError(const std::string& what, int element = -1, int node = -1)
      : std::runtime_error(what), element_(element), node_(node) {}
  int element() const { return element_; }
  int node() const { return node_; }

private:
  int element_;
  int node_;
};

class MeshError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace br1

#pragma once

// Conforming curvilinear hexahedral meshes: geometry sampled at LGL nodes,
// curl-form metric terms, and master/slave face connectivity.

#include "br1/basis.hpp"
#include "br1/tensor.hpp"
#include "br1/types.hpp"

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace br1 {

/// Nodal geometry and metric data of one element. ja[l].col(node) = Ja^l.
struct ElementGeometry {
  Field3 x;
  std::array<Field3, 3> ja;
  Eigen::VectorXd jac;
};

/// Sides 1..6 are xi = -1, xi = +1, eta = -1, eta = +1, zeta = -1, zeta = +1.
inline int side_direction(int side) { return (side - 1) / 2; }
inline bool side_is_upper(int side) { return (side - 1) % 2 == 1; }
inline double side_sign(int side) { return side_is_upper(side) ? 1.0 : -1.0; }

/// Volume node index of face-local point (a, b) on `side`. Face-local
/// coordinates are (j,k) on sides 1/2, (i,k) on 3/4 and (i,j) on 5/6.
int face_node(const TensorIndex& t, int side, int a, int b);

/// Maps master face-local (a, b) to slave face-local coordinates. Bit 2 of the
/// code swaps the coordinates, then bit 0 flips the first and bit 1 the second.
std::pair<int, int> orient_face_point(int code, int n, int a, int b);

struct Face {
  int master = -1, master_side = 0;
  int slave = -1, slave_side = 0;
  int orientation = 0;
  // Per face point p = a + n b in master-local order.
  std::vector<int> master_nodes;
  std::vector<int> slave_nodes;
  Field3 normal;          // unit normal, outward from the master
  Eigen::VectorXd s_hat;  // surface element
};

struct FaceRef {
  int face = -1;
  bool is_master = false;
};

struct Mesh {
  int degree = 0;
  Operators ops;
  TensorIndex tensor;
  std::vector<ElementGeometry> elements;
  std::vector<Face> faces;
  std::vector<std::array<FaceRef, 6>> element_faces;
  std::array<bool, 3> periodic{true, true, true};

  int num_elements() const { return static_cast<int>(elements.size()); }
  int nodes_per_element() const { return tensor.volume(); }
  int num_nodes() const { return num_elements() * nodes_per_element(); }
  int offset(int element) const { return element * nodes_per_element(); }
};

enum class MetricForm { Curl, CrossProduct };

struct BoxSpec {
  Vec3 origin = Vec3::Zero();
  Vec3 extent = Vec3::Ones();
  std::array<int, 3> elements{1, 1, 1};
  int degree = 1;
  std::string warp = "none"; // "none" or "sine"
  double amplitude = 0.0;
};

/// Metric terms and Jacobian from nodal geometry.
void compute_metrics(ElementGeometry& geo, const Operators& ops, const TensorIndex& t, MetricForm form);

/// Max over nodes and components of |sum_l d/dxi^l Ja^l_n|.
double check_metric_identities(const ElementGeometry& geo, const Operators& ops, const TensorIndex& t);

struct FaceGeometry {
  Field3 normal;
  Eigen::VectorXd s_hat;
};

/// Outward unit normal and surface element at face-local points of `side`.
FaceGeometry face_geometry(const ElementGeometry& geo, const TensorIndex& t, int side);

/// Periodic box with optional smooth sine displacement of the interior.
Mesh build_box_mesh(const BoxSpec& spec, MetricForm form = MetricForm::Curl);

struct FaceRecord {
  int master, master_side, slave, slave_side, orientation;
};

/// Assembles a mesh from nodal geometry and face records; validates J > 0,
/// conformity and the face point matching.
Mesh assemble_mesh(int degree, std::vector<Field3> geometry, const std::vector<FaceRecord>& records,
                   std::array<bool, 3> periodic, MetricForm form = MetricForm::Curl);

/// Max pointwise mismatch of master and slave unit normals and of surface
/// elements (the latter relative to the largest one on the face).
double watertightness(const Mesh& mesh);

void write_mesh(std::ostream& os, const Mesh& mesh);
Mesh read_mesh(std::istream& is);
Mesh read_mesh_file(const std::string& path);

} // namespace br1

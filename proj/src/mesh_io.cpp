#include "br1/mesh.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace br1 {

// Layout:
//   br1-mesh
//   degree N
//   elements K
//   periodic px py pz
//   nodes
//   K * (N+1)^3 lines "x y z", element-major, lexicographic (i fastest)
//   faces F
//   F lines "master master_side slave slave_side orientation"

void write_mesh(std::ostream& os, const Mesh& mesh) {
  os << "br1-mesh\n";
  os << "degree " << mesh.degree << "\n";
  os << "elements " << mesh.num_elements() << "\n";
  os << "periodic " << mesh.periodic[0] << " " << mesh.periodic[1] << " " << mesh.periodic[2] << "\n";
  os << "nodes\n";
  os << std::setprecision(17);
  for (const auto& el : mesh.elements)
    for (int node = 0; node < el.x.cols(); ++node)
      os << el.x(0, node) << " " << el.x(1, node) << " " << el.x(2, node) << "\n";
  os << "faces " << mesh.faces.size() << "\n";
  for (const auto& f : mesh.faces)
    os << f.master << " " << f.master_side << " " << f.slave << " " << f.slave_side << " " << f.orientation << "\n";
  if (!os) throw IoError("write_mesh: stream error");
}

namespace {

void expect(std::istream& is, const std::string& keyword) {
  std::string word;
  if (!(is >> word) || word != keyword) throw MeshError("mesh file: expected '" + keyword + "', got '" + word + "'");
}

template <typename T> T read_value(std::istream& is, const char* what) {
  T v{};
  if (!(is >> v)) throw MeshError(std::string("mesh file: could not read ") + what);
  return v;
}

} // namespace

Mesh read_mesh(std::istream& is) {
  expect(is, "br1-mesh");
  expect(is, "degree");
  const int degree = read_value<int>(is, "degree");
  if (degree < 1) throw MeshError("mesh file: degree must be >= 1");
  expect(is, "elements");
  const int k = read_value<int>(is, "element count");
  if (k < 1) throw MeshError("mesh file: element count must be >= 1");
  expect(is, "periodic");
  std::array<bool, 3> periodic{};
  for (auto& p : periodic) p = read_value<int>(is, "periodicity flag") != 0;
  expect(is, "nodes");
  const int n = degree + 1;
  std::vector<Field3> geometry(k, Field3(3, n * n * n));
  for (auto& x : geometry)
    for (int node = 0; node < x.cols(); ++node)
      for (int d = 0; d < 3; ++d) x(d, node) = read_value<double>(is, "node coordinate");
  expect(is, "faces");
  const int nf = read_value<int>(is, "face count");
  std::vector<FaceRecord> records(nf);
  for (auto& r : records) {
    r.master = read_value<int>(is, "face record");
    r.master_side = read_value<int>(is, "face record");
    r.slave = read_value<int>(is, "face record");
    r.slave_side = read_value<int>(is, "face record");
    r.orientation = read_value<int>(is, "face record");
  }
  return assemble_mesh(degree, std::move(geometry), records, periodic);
}

Mesh read_mesh_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open mesh file '" + path + "'");
  return read_mesh(in);
}

} // namespace br1

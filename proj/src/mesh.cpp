#include "br1/mesh.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace br1 {

int face_node(const TensorIndex& t, int side, int a, int b) {
  const int fixed = side_is_upper(side) ? t.n - 1 : 0;
  switch (side_direction(side)) {
  case 0: return t.idx(fixed, a, b);
  case 1: return t.idx(a, fixed, b);
  default: return t.idx(a, b, fixed);
  }
}

std::pair<int, int> orient_face_point(int code, int n, int a, int b) {
  if (code & 4) std::swap(a, b);
  if (code & 1) a = n - 1 - a;
  if (code & 2) b = n - 1 - b;
  return {a, b};
}

void compute_metrics(ElementGeometry& geo, const Operators& ops, const TensorIndex& t, MetricForm form) {
  const int nv = t.volume();
  if (geo.x.cols() != nv) throw MeshError("compute_metrics: geometry size does not match the degree");
  // Metrics are translation invariant; working with centred coordinates keeps
  // the round-off of the nested derivatives proportional to the element size.
  const Field3 xc = geo.x.colwise() - geo.x.rowwise().mean();
  // a[k].col(node) = dX/dxi^k
  std::array<Field3, 3> a;
  for (int k = 0; k < 3; ++k) a[k] = reference_derivative(ops.d, xc, t, k);

  for (auto& ja : geo.ja) ja.resize(3, nv);
  if (form == MetricForm::CrossProduct) {
    for (int node = 0; node < nv; ++node) {
      const Vec3 a1 = a[0].col(node), a2 = a[1].col(node), a3 = a[2].col(node);
      geo.ja[0].col(node) = a2.cross(a3);
      geo.ja[1].col(node) = a3.cross(a1);
      geo.ja[2].col(node) = a1.cross(a2);
    }
  } else {
    // Ja^i_n = -xhat_i . curl_xi( I^N(X_l grad_xi X_m) ), (n, m, l) cyclic
    for (int n = 0; n < 3; ++n) {
      const int m = (n + 1) % 3, l = (n + 2) % 3;
      Field3 v(3, nv);
      for (int k = 0; k < 3; ++k) v.row(k) = xc.row(l).cwiseProduct(a[k].row(m));
      for (int i = 0; i < 3; ++i) {
        const int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
        const Eigen::RowVectorXd c = reference_derivative(ops.d, v.row(i2), t, i1) -
                                     reference_derivative(ops.d, v.row(i1), t, i2);
        geo.ja[i].row(n) = -c;
      }
    }
  }
  geo.jac.resize(nv);
  for (int node = 0; node < nv; ++node)
    geo.jac(node) = a[0].col(node).dot(a[1].col(node).cross(a[2].col(node)));
}

double check_metric_identities(const ElementGeometry& geo, const Operators& ops, const TensorIndex& t) {
  Field3 div = Field3::Zero(3, t.volume());
  for (int l = 0; l < 3; ++l) div += reference_derivative(ops.d, geo.ja[l], t, l);
  return div.cwiseAbs().maxCoeff();
}

FaceGeometry face_geometry(const ElementGeometry& geo, const TensorIndex& t, int side) {
  if (side < 1 || side > 6) throw std::out_of_range("face_geometry: side must be in 1..6");
  const int n = t.n;
  const int dir = side_direction(side);
  const double sign = side_sign(side);
  FaceGeometry fg;
  fg.normal.resize(3, n * n);
  fg.s_hat.resize(n * n);
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a) {
      const int p = a + n * b;
      const Vec3 v = sign * geo.ja[dir].col(face_node(t, side, a, b));
      const double s = v.norm();
      if (!(s > 0)) throw MeshError("face_geometry: degenerate face point " + std::to_string(p));
      fg.s_hat(p) = s;
      fg.normal.col(p) = v / s;
    }
  return fg;
}

namespace {

void check_jacobian(const ElementGeometry& geo, int element) {
  for (int node = 0; node < geo.jac.size(); ++node)
    if (!(geo.jac(node) > 0))
      throw MeshError("nonpositive Jacobian at element " + std::to_string(element) + ", node " + std::to_string(node));
}

double geometry_scale(const std::vector<Field3>& geometry) {
  double s = 1.0;
  for (const auto& x : geometry) s = std::max(s, x.cwiseAbs().maxCoeff());
  return s;
}

} // namespace

Mesh assemble_mesh(int degree, std::vector<Field3> geometry, const std::vector<FaceRecord>& records,
                   std::array<bool, 3> periodic, MetricForm form) {
  Mesh mesh;
  mesh.degree = degree;
  mesh.ops = Operators::build(degree);
  mesh.tensor.n = degree + 1;
  mesh.periodic = periodic;
  const int n = mesh.tensor.n;
  const int k = static_cast<int>(geometry.size());
  if (k == 0) throw MeshError("mesh has no elements");

  mesh.elements.resize(k);
  for (int e = 0; e < k; ++e) {
    mesh.elements[e].x = std::move(geometry[e]);
    compute_metrics(mesh.elements[e], mesh.ops, mesh.tensor, form);
    check_jacobian(mesh.elements[e], e);
  }

  std::vector<Field3> xs;
  for (const auto& el : mesh.elements) xs.push_back(el.x);
  const double tol = 1e-9 * geometry_scale(xs);

  mesh.element_faces.assign(k, {});
  std::set<std::pair<int, int>> used;
  for (const auto& r : records) {
    if (r.master < 0 || r.master >= k || r.slave < 0 || r.slave >= k)
      throw MeshError("face record references a missing element");
    if (r.master_side < 1 || r.master_side > 6 || r.slave_side < 1 || r.slave_side > 6)
      throw MeshError("face record side outside 1..6");
    if (r.orientation < 0 || r.orientation > 7) throw MeshError("face orientation code outside 0..7");
    for (auto key : {std::pair{r.master, r.master_side}, std::pair{r.slave, r.slave_side}})
      if (!used.insert(key).second)
        throw MeshError("element " + std::to_string(key.first) + " side " + std::to_string(key.second) +
                        " appears in more than one face");

    Face f;
    f.master = r.master;
    f.master_side = r.master_side;
    f.slave = r.slave;
    f.slave_side = r.slave_side;
    f.orientation = r.orientation;
    f.master_nodes.resize(n * n);
    f.slave_nodes.resize(n * n);
    for (int b = 0; b < n; ++b)
      for (int a = 0; a < n; ++a) {
        const auto [sa, sb] = orient_face_point(r.orientation, n, a, b);
        f.master_nodes[a + n * b] = face_node(mesh.tensor, r.master_side, a, b);
        f.slave_nodes[a + n * b] = face_node(mesh.tensor, r.slave_side, sa, sb);
      }
    // Slave points must coincide with master points up to one periodic shift.
    const auto& xm = mesh.elements[f.master].x;
    const auto& xsl = mesh.elements[f.slave].x;
    const Vec3 shift = xsl.col(f.slave_nodes[0]) - xm.col(f.master_nodes[0]);
    for (int p = 0; p < n * n; ++p) {
      const Vec3 d = xsl.col(f.slave_nodes[p]) - xm.col(f.master_nodes[p]) - shift;
      if (d.cwiseAbs().maxCoeff() > tol)
        throw MeshError("face between elements " + std::to_string(f.master) + " and " + std::to_string(f.slave) +
                        " is not conforming at point " + std::to_string(p));
    }
    auto fg = face_geometry(mesh.elements[f.master], mesh.tensor, f.master_side);
    f.normal = std::move(fg.normal);
    f.s_hat = std::move(fg.s_hat);

    const int id = static_cast<int>(mesh.faces.size());
    mesh.element_faces[f.master][f.master_side - 1] = {id, true};
    mesh.element_faces[f.slave][f.slave_side - 1] = {id, false};
    mesh.faces.push_back(std::move(f));
  }
  for (int e = 0; e < k; ++e)
    for (int s = 1; s <= 6; ++s)
      if (mesh.element_faces[e][s - 1].face < 0)
        throw MeshError("element " + std::to_string(e) + " side " + std::to_string(s) +
                        " is unconnected; only periodic 3D meshes are supported");
  return mesh;
}

Mesh build_box_mesh(const BoxSpec& spec, MetricForm form) {
  if (spec.degree < 1) throw MeshError("box mesh: degree must be >= 1");
  for (int d = 0; d < 3; ++d) {
    if (spec.elements[d] < 1) throw MeshError("box mesh: need at least one element per axis");
    if (!(spec.extent(d) > 0)) throw MeshError("box mesh: extent must be positive");
  }
  if (spec.warp != "none" && spec.warp != "sine") throw MeshError("box mesh: unknown warp '" + spec.warp + "'");

  const auto rule = lgl_rule<double>(spec.degree);
  const int n = spec.degree + 1;
  const TensorIndex t{n};
  const auto& ne = spec.elements;
  const int k = ne[0] * ne[1] * ne[2];
  const double two_pi = 2 * std::numbers::pi;
  auto eid = [&](int ex, int ey, int ez) { return ex + ne[0] * (ey + ne[1] * ez); };

  std::vector<Field3> geometry(k, Field3(3, t.volume()));
  for (int ez = 0; ez < ne[2]; ++ez)
    for (int ey = 0; ey < ne[1]; ++ey)
      for (int ex = 0; ex < ne[0]; ++ex) {
        const std::array<int, 3> ec{ex, ey, ez};
        Field3& x = geometry[eid(ex, ey, ez)];
        for (int node = 0; node < t.volume(); ++node) {
          Vec3 pre, unit;
          for (int d = 0; d < 3; ++d) {
            const double xi = rule.nodes(t.coord(node, d));
            // Same expression on both sides of a face, so shared points agree bitwise.
            const double frac = (ec[d] + (xi + 1) / 2) / ne[d];
            pre(d) = spec.origin(d) + spec.extent(d) * frac;
            unit(d) = frac;
          }
          Vec3 pos = pre;
          if (spec.warp == "sine") {
            // Each component gets its own product so the map is not a rank-one shear;
            // the normal displacement vanishes on the box faces.
            const Vec3 sn = (two_pi * unit).array().sin(), cs = (two_pi * unit).array().cos();
            const Vec3 d(sn(0) * sn(1) * sn(2), sn(0) * sn(1) * cs(2), cs(0) * sn(1) * sn(2));
            pos += spec.amplitude * d.cwiseProduct(spec.extent);
          }
          x.col(node) = pos;
        }
      }

  std::vector<FaceRecord> records;
  for (int ez = 0; ez < ne[2]; ++ez)
    for (int ey = 0; ey < ne[1]; ++ey)
      for (int ex = 0; ex < ne[0]; ++ex) {
        const int e = eid(ex, ey, ez);
        for (int d = 0; d < 3; ++d) {
          std::array<int, 3> c{ex, ey, ez};
          c[d] = (c[d] + 1) % ne[d];
          const int nb = eid(c[0], c[1], c[2]);
          const int lower = 2 * d + 1, upper = 2 * d + 2;
          if (e < nb)
            records.push_back({e, upper, nb, lower, 0});
          else if (nb < e)
            records.push_back({nb, lower, e, upper, 0});
          else
            records.push_back({e, lower, e, upper, 0});
        }
      }
  return assemble_mesh(spec.degree, std::move(geometry), records, {true, true, true}, form);
}

double watertightness(const Mesh& mesh) {
  const int n = mesh.tensor.n;
  double worst = 0;
  for (const auto& f : mesh.faces) {
    const double area = f.s_hat.maxCoeff();
    const auto slave = face_geometry(mesh.elements[f.slave], mesh.tensor, f.slave_side);
    for (int b = 0; b < n; ++b)
      for (int a = 0; a < n; ++a) {
        const int p = a + n * b;
        const auto [sa, sb] = orient_face_point(f.orientation, n, a, b);
        const int q = sa + n * sb;
        worst = std::max(worst, std::abs(slave.s_hat(q) - f.s_hat(p)) / area);
        worst = std::max(worst, (slave.normal.col(q) + f.normal.col(p)).cwiseAbs().maxCoeff());
      }
  }
  return worst;
}

} // namespace br1

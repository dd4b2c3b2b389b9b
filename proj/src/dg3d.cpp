#include "br1/dg3d.hpp"

#include "br1/parallel.hpp"

#include <vector>

namespace br1 {

namespace {

// f(u) . ja for the advective flux.
Vec5 contravariant_flux(const Vec5& u, const Primitive<double>& w, const Vec3& ja) {
  const double vn = w.v.dot(ja);
  Vec5 f;
  f(0) = u(0) * vn;
  f.segment<3>(1) = u.segment<3>(1) * vn + w.p * ja;
  f(4) = (u(4) + w.p) * vn;
  return f;
}

struct SideView {
  const Face* face;
  bool is_master;
  const std::vector<int>* own;
  const std::vector<int>* other;
  int other_element;
  int dir;
  double sign;
};

SideView side_view(const Mesh& mesh, int e, int side) {
  const FaceRef ref = mesh.element_faces[e][side - 1];
  const Face& f = mesh.faces[ref.face];
  SideView v{&f, ref.is_master, nullptr, nullptr, 0, side_direction(side), side_sign(side)};
  v.own = ref.is_master ? &f.master_nodes : &f.slave_nodes;
  v.other = ref.is_master ? &f.slave_nodes : &f.master_nodes;
  v.other_element = ref.is_master ? f.slave : f.master;
  return v;
}

// Shared surface vector s_hat n, oriented outward for this side.
Vec3 outward_sn(const SideView& v, int p) {
  const Vec3 sn = v.face->s_hat(p) * v.face->normal.col(p);
  return v.is_master ? sn : Vec3(-sn);
}

} // namespace

NseOperator::NseOperator(const Mesh& mesh, Gas gas, SchemeConfig scheme)
    : mesh_(&mesh), gas_(gas), scheme_(scheme) {
  const auto& t = mesh.tensor;
  const auto& w = mesh.ops.weights;
  mass_.resize(mesh.num_nodes());
  inv_jac_.resize(mesh.num_nodes());
  for (int e = 0; e < mesh.num_elements(); ++e)
    for (int node = 0; node < t.volume(); ++node) {
      const double jac = mesh.elements[e].jac(node);
      const double omega = w(t.coord(node, 0)) * w(t.coord(node, 1)) * w(t.coord(node, 2));
      mass_(mesh.offset(e) + node) = omega * jac;
      inv_jac_(mesh.offset(e) + node) = 1.0 / jac;
    }
}

void NseOperator::check_admissible(const Field5& u) const {
  const Mesh& mesh = *mesh_;
  if (u.cols() != mesh.num_nodes()) throw std::invalid_argument("solution size does not match the mesh");
  const int nv = mesh.nodes_per_element();
  for (int g = 0; g < u.cols(); ++g)
    if (!is_admissible<double>(u.col(g), gas_))
      throw PositivityError("inadmissible state (rho or p below floor, or not finite) at element " +
                                std::to_string(g / nv) + ", node " + std::to_string(g % nv),
                            g / nv, g % nv);
}

Field5 NseOperator::entropy_variables(const Field5& u) const {
  check_admissible(u);
  Field5 w(5, u.cols());
  for (int g = 0; g < u.cols(); ++g) w.col(g) = br1::entropy_variables<double>(u.col(g), gas_);
  return w;
}

Field5 NseOperator::volume_term(const Field5& u, int e) const {
  const Mesh& mesh = *mesh_;
  const auto& t = mesh.tensor;
  const auto& d = mesh.ops.d;
  const auto& geo = mesh.elements[e];
  const int off = mesh.offset(e);
  const int nv = t.volume();

  std::vector<Primitive<double>> prim(nv);
  for (int node = 0; node < nv; ++node) prim[node] = to_primitive<double>(u.col(off + node), gas_);

  Field5 vol = Field5::Zero(5, nv);
  if (scheme_.volume == VolumeMode::Standard) {
    for (int l = 0; l < 3; ++l) {
      Field5 ft(5, nv);
      for (int node = 0; node < nv; ++node)
        ft.col(node) = contravariant_flux(u.col(off + node), prim[node], geo.ja[l].col(node));
      vol += reference_derivative(d, ft, t, l);
    }
    return vol;
  }
  // 2 sum_m D_im F^ec(U_i, U_m) . (Ja_i + Ja_m)/2, each pair evaluated once.
  for (int l = 0; l < 3; ++l)
    for (int i = 0; i < nv; ++i) {
      const int c = t.coord(i, l);
      const Vec3 ja_i = geo.ja[l].col(i);
      vol.col(i) += 2 * d(c, c) * contravariant_flux(u.col(off + i), prim[i], ja_i);
      for (int m = c + 1; m < t.n; ++m) {
        const int j = t.along(i, l, m);
        const Vec3 ja_avg = (ja_i + geo.ja[l].col(j)) / 2;
        const Vec5 f = kepec_contracted(pair_means(prim[i], prim[j]), ja_avg, gas_);
        vol.col(i) += 2 * d(c, m) * f;
        vol.col(j) += 2 * d(m, c) * f;
      }
    }
  return vol;
}

void NseOperator::add_advective(const Field5& u, Field5& out) const {
  const Mesh& mesh = *mesh_;
  const int nf = static_cast<int>(mesh.faces.size());
  const int np = mesh.tensor.n * mesh.tensor.n;
  const double w_end = mesh.ops.weights(0);

  // Phase 1: one master-outward numerical flux per face point.
  std::vector<Field5> fstar(nf);
  parallel_for(nf, scheme_.threads, [&](int fi) {
    const Face& f = mesh.faces[fi];
    Field5& fs = fstar[fi];
    fs.resize(5, np);
    for (int p = 0; p < np; ++p) {
      const Vec5 um = u.col(mesh.offset(f.master) + f.master_nodes[p]);
      const Vec5 us = u.col(mesh.offset(f.slave) + f.slave_nodes[p]);
      const Vec3 n = f.normal.col(p);
      const Vec3 sn = f.s_hat(p) * n;
      fs.col(p) = kepec_contracted(pair_means(um, us, gas_), sn, gas_);
      if (scheme_.interface == InterfaceFlux::MatrixDissipation) fs.col(p) += es_dissipation(um, us, n, f.s_hat(p), gas_);
    }
  });

  // Phase 2: each element gathers its volume term and its six faces.
  parallel_for(mesh.num_elements(), scheme_.threads, [&](int e) {
    const auto& geo = mesh.elements[e];
    const int off = mesh.offset(e);
    Field5 acc = volume_term(u, e);
    for (int side = 1; side <= 6; ++side) {
      const SideView v = side_view(mesh, e, side);
      const Field5& fs = fstar[mesh.element_faces[e][side - 1].face];
      for (int p = 0; p < np; ++p) {
        const int node = (*v.own)[p];
        const Vec5 uo = u.col(off + node);
        const Vec3 own_n = v.sign * geo.ja[v.dir].col(node);
        const Vec5 f_own = contravariant_flux(uo, to_primitive(uo, gas_), own_n);
        const Vec5 f_star = v.is_master ? Vec5(fs.col(p)) : Vec5(-fs.col(p));
        acc.col(node) += (f_star - f_own) / w_end;
      }
    }
    out.middleCols(off, acc.cols()) -= acc;
  });
}

Gradient NseOperator::gradients(const Field5& w) const {
  const Mesh& mesh = *mesh_;
  const auto& t = mesh.tensor;
  const int nv = t.volume();
  const int np = t.n * t.n;
  const double w_end = mesh.ops.weights(0);
  Gradient q;
  for (auto& qd : q) qd.resize(5, w.cols());

  parallel_for(mesh.num_elements(), scheme_.threads, [&](int e) {
    const auto& geo = mesh.elements[e];
    const int off = mesh.offset(e);
    const Field5 we = w.middleCols(off, nv);
    std::array<Field5, 3> dw;
    for (int l = 0; l < 3; ++l) dw[l] = reference_derivative(mesh.ops.d, we, t, l);
    // J Q_d = sum_l Ja^l_d dW/dxi^l
    std::array<Field5, 3> jq;
    for (int dd = 0; dd < 3; ++dd) {
      jq[dd] = Field5::Zero(5, nv);
      for (int l = 0; l < 3; ++l) jq[dd] += dw[l] * geo.ja[l].row(dd).asDiagonal();
    }
    for (int side = 1; side <= 6; ++side) {
      const SideView v = side_view(mesh, e, side);
      const int other_off = mesh.offset(v.other_element);
      for (int p = 0; p < np; ++p) {
        const int node = (*v.own)[p];
        const Vec5 w_own = we.col(node);
        const Vec5 w_star = (w_own + w.col(other_off + (*v.other)[p])) / 2;
        const Vec3 sn = outward_sn(v, p);
        const Vec3 own_n = v.sign * geo.ja[v.dir].col(node);
        for (int dd = 0; dd < 3; ++dd) jq[dd].col(node) += (w_star * sn(dd) - w_own * own_n(dd)) / w_end;
      }
    }
    for (int dd = 0; dd < 3; ++dd)
      q[dd].middleCols(off, nv) = jq[dd] * inv_jac_.segment(off, nv).asDiagonal();
  });
  return q;
}

Gradient NseOperator::viscous_fluxes(const Field5& u, const Gradient& q) const {
  Gradient fv;
  for (auto& f : fv) f.resize(5, u.cols());
  parallel_for(mesh_->num_elements(), scheme_.threads, [&](int e) {
    const int off = mesh_->offset(e);
    for (int g = off; g < off + mesh_->nodes_per_element(); ++g) {
      Block grad;
      for (int dd = 0; dd < 3; ++dd) grad.col(dd) = q[dd].col(g);
      const Block f = viscous_flux<double>(u.col(g), grad, gas_);
      for (int dd = 0; dd < 3; ++dd) fv[dd].col(g) = f.col(dd);
    }
  });
  return fv;
}

void NseOperator::add_viscous(const Field5& u, Field5& out) const {
  const Mesh& mesh = *mesh_;
  const auto& t = mesh.tensor;
  const int nv = t.volume();
  const int np = t.n * t.n;
  const double w_end = mesh.ops.weights(0);
  const double inv_re = 1.0 / gas_.reynolds;

  const Field5 w = entropy_variables(u);
  const Gradient q = gradients(w);
  const Gradient fv = viscous_fluxes(u, q);

  parallel_for(mesh.num_elements(), scheme_.threads, [&](int e) {
    const auto& geo = mesh.elements[e];
    const int off = mesh.offset(e);
    Field5 acc = Field5::Zero(5, nv);
    for (int l = 0; l < 3; ++l) {
      Field5 ft = Field5::Zero(5, nv);
      for (int dd = 0; dd < 3; ++dd) ft += fv[dd].middleCols(off, nv) * geo.ja[l].row(dd).asDiagonal();
      acc += reference_derivative(mesh.ops.d, ft, t, l);
    }
    for (int side = 1; side <= 6; ++side) {
      const SideView v = side_view(mesh, e, side);
      const int other_off = mesh.offset(v.other_element);
      for (int p = 0; p < np; ++p) {
        const int node = (*v.own)[p];
        const int g = off + node;
        const int go = other_off + (*v.other)[p];
        const Vec3 sn = outward_sn(v, p);
        const Vec3 own_n = v.sign * geo.ja[v.dir].col(node);
        Vec5 f_star = Vec5::Zero(), f_own = Vec5::Zero();
        for (int dd = 0; dd < 3; ++dd) {
          f_star += (fv[dd].col(g) + fv[dd].col(go)) / 2 * sn(dd);
          f_own += fv[dd].col(g) * own_n(dd);
        }
        acc.col(node) += (f_star - f_own) / w_end;
      }
    }
    out.middleCols(off, nv) += inv_re * acc;
  });
}

Field5 NseOperator::rhs(const Field5& u, RhsTerms terms) const {
  check_admissible(u);
  Field5 out = Field5::Zero(5, u.cols());
  if (terms.advective) add_advective(u, out);
  if (terms.viscous && gas_.viscous()) add_viscous(u, out);
  return out * inv_jac_.asDiagonal();
}

double NseOperator::entropy_rate(const Field5& u, const Field5& dudt) const {
  const Field5 w = entropy_variables(u);
  double sum = 0;
  for (int g = 0; g < u.cols(); ++g) sum += mass_(g) * w.col(g).dot(dudt.col(g));
  return sum;
}

double NseOperator::viscous_volume_dissipation(const Field5& u) const {
  if (!gas_.viscous()) return 0.0;
  const Gradient q = gradients(entropy_variables(u));
  const Gradient fv = viscous_fluxes(u, q);
  double sum = 0;
  for (int g = 0; g < u.cols(); ++g) {
    double local = 0;
    for (int dd = 0; dd < 3; ++dd) local += fv[dd].col(g).dot(q[dd].col(g));
    sum += mass_(g) * local;
  }
  return sum / gas_.reynolds;
}

} // namespace br1

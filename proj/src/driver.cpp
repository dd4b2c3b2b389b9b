#include "br1/driver.hpp"

#include "br1/initial_conditions.hpp"
#include "br1/time_integration.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace br1 {

namespace {

constexpr double kTiny = std::numeric_limits<double>::min();
constexpr double kNoTolerance = std::numeric_limits<double>::infinity();

AuditLine check(std::string name, double measured, double tol) {
  return {std::move(name), measured, tol, measured <= tol};
}

int effective_threads(const CaseConfig& cfg, const RunOptions& opts) {
  if (opts.deterministic || cfg.deterministic) return 1;
  return std::max(1, opts.threads > 0 ? opts.threads : cfg.threads);
}

Mesh make_mesh(const CaseConfig& cfg) {
  if (cfg.mesh_file) return read_mesh_file(*cfg.mesh_file);
  BoxSpec spec = cfg.box;
  spec.degree = cfg.degree;
  return build_box_mesh(spec);
}

std::pair<Vec3, Vec3> bounding_box(const Mesh& mesh) {
  Vec3 lo = Vec3::Constant(std::numeric_limits<double>::max()), hi = -lo;
  for (const auto& el : mesh.elements) {
    lo = lo.cwiseMin(el.x.rowwise().minCoeff());
    hi = hi.cwiseMax(el.x.rowwise().maxCoeff());
  }
  return {lo, hi - lo};
}

PointState initial_state(const CaseConfig& cfg, const Mesh& mesh, double t = 0) {
  const auto& ic = cfg.ic;
  if (ic.name == "taylor_green") return taylor_green(cfg.gas);
  if (ic.name == "density_wave") return density_wave(cfg.gas, ic.velocity, ic.pressure, ic.amplitude, t);
  if (ic.name == "random_smooth") {
    const auto [lo, ext] = bounding_box(mesh);
    return random_smooth(cfg.gas, lo, ext, ic.amplitude, cfg.seed);
  }
  return uniform_state(ic.rho, ic.velocity, ic.pressure, cfg.gas);
}

// Audits run on this state, not on the initial condition: a uniform or
// under-resolved start would make the relative measures meaningless. Each
// element gets its own scale factor so the probe has interface jumps.
Field5 probe_state(const CaseConfig& cfg, const Mesh& mesh) {
  const auto [lo, ext] = bounding_box(mesh);
  Field5 u = sample(mesh, random_smooth(cfg.gas, lo, ext, 0.3, cfg.seed));
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> jitter(0.95, 1.05);
  const int np = mesh.nodes_per_element();
  for (int e = 0; e < mesh.num_elements(); ++e) u.middleCols(mesh.offset(e), np) *= jitter(rng);
  return u;
}

double sine_ic(const CaseConfig& cfg, double x) {
  return cfg.ic.amplitude * std::sin(cfg.ic.wavenumber * std::numbers::pi * x);
}

AdvDiffCoefficients advdiff_coeffs(const CaseConfig& cfg) {
  const double b = cfg.line.b, w = cfg.line.b_wave, left = cfg.line.left, len = cfg.line.right - cfg.line.left;
  return linear_advdiff_coeffs(cfg.line.a, [=](double x) {
    return b * (1 + w * std::sin(2 * std::numbers::pi * (x - left) / len));
  });
}

Eigen::VectorXd sample_1d(const CaseConfig& cfg, const Mesh1d& mesh) {
  Eigen::VectorXd x = mesh.coordinates(), u(x.size());
  for (int i = 0; i < x.size(); ++i) u(i) = sine_ic(cfg, x(i));
  return u;
}

void check_finite_1d(const Mesh1d& mesh, const Eigen::VectorXd& u) {
  for (int i = 0; i < u.size(); ++i)
    if (!std::isfinite(u(i))) throw PositivityError("non-finite value in 1D solution", i / mesh.n(), i % mesh.n());
}

/// Sample times k * every (k >= 1) below t_end, then t_end.
std::vector<double> output_times(double t_end, double every) {
  std::vector<double> out;
  if (every > 0)
    for (int k = 1; k * every < t_end * (1 - 1e-12); ++k) out.push_back(k * every);
  if (t_end > 0) out.push_back(t_end);
  return out;
}

template <typename Field, typename Rhs, typename DtOf, typename Sample>
void integrate(Field& u, double t_end, double every, const RkScheme& rk, Rhs&& rhs, DtOf&& dt_of, Sample&& sample,
               RunResult& res) {
  double t = 0;
  sample(u, t);
  for (double target : output_times(t_end, every)) {
    while (t < target) {
      double dt = dt_of(u);
      if (!(dt > 0) || !std::isfinite(dt)) throw PositivityError("time step collapsed at t = " + std::to_string(t));
      if (t + dt >= target * (1 - 1e-14)) dt = target - t;
      rk_step(u, t, dt, rhs, rk);
      t = (dt == target - t) ? target : t + dt;
      ++res.steps;
      res.t_final = t;
    }
    sample(u, t);
  }
}

std::vector<AuditLine> audit_nse(const CaseConfig& cfg, const Mesh& mesh, const NseOperator& op) {
  std::vector<AuditLine> out;
  double metric = 0;
  for (const auto& el : mesh.elements) metric = std::max(metric, check_metric_identities(el, mesh.ops, mesh.tensor));
  out.push_back(check("metric_identities", metric, 1e-12));
  out.push_back(check("watertight_faces", watertightness(mesh), 1e-12));

  const Field5 u0 = sample(mesh, uniform_state(cfg.ic.rho, cfg.ic.velocity, cfg.ic.pressure, cfg.gas));
  out.push_back(check("free_stream_residual", op.rhs(u0).cwiseAbs().maxCoeff(), 1e-11));

  const Field5 u = probe_state(cfg, mesh);
  const Field5 dudt = op.rhs(u);
  const Vec5 totals = conserved_totals(op, dudt);
  const Vec5 scale = dudt.cwiseAbs() * op.mass();
  out.push_back(check("conservation_rate", (totals.cwiseAbs().array() / (scale.array() + kTiny)).maxCoeff(), 1e-12));

  const Field5 w = op.entropy_variables(u);
  auto rate_scale = [&](const Field5& r) {
    return (w.cwiseProduct(r).cwiseAbs().colwise().sum().transpose().cwiseProduct(op.mass())).sum() + kTiny;
  };
  const Field5 adv = op.rhs(u, {true, false});
  const double adv_rate = entropy_rate_audit(op, u, adv) / rate_scale(adv);
  const auto& s = op.scheme();
  if (s.volume == VolumeMode::Standard)
    out.push_back(check("advective_entropy_rate_standard_volume", adv_rate, kNoTolerance));
  else if (s.interface == InterfaceFlux::EntropyConservative)
    out.push_back(check("advective_entropy_rate_ec", std::abs(adv_rate), 1e-10));
  else
    out.push_back(check("advective_entropy_rate_dissipative", adv_rate, 1e-10));

  if (std::isfinite(cfg.gas.reynolds)) {
    const Field5 visc = op.rhs(u, {false, true});
    const double visc_rate = entropy_rate_audit(op, u, visc);
    const double vol = op.viscous_volume_dissipation(u);
    out.push_back(check("viscous_entropy_rate", visc_rate / rate_scale(visc), 1e-10));
    out.push_back(check("br1_interface_entropy", std::abs(visc_rate + vol) / (std::abs(vol) + kTiny), 1e-12));
  }
  return out;
}

std::vector<AuditLine> audit_1d(const CaseConfig& cfg, const Mesh1d& mesh, const Eigen::VectorXd& u) {
  std::vector<AuditLine> out;
  Eigen::VectorXd dudt;
  if (cfg.equation == Equation::AdvDiff1d) {
    const auto coeffs = advdiff_coeffs(cfg);
    const Eigen::VectorXd x = mesh.coordinates();
    coeffs.validate(std::span<const double>(x.data(), x.size()));
    dudt = rhs_linear_advdiff(mesh, u, coeffs, {cfg.sigma, cfg.line.periodic});
  } else {
    dudt = rhs_burgers(mesh, u, {cfg.line.nu, cfg.line.periodic, cfg.scheme.volume});
  }
  const double scale = energy_rate_1d(mesh, u.cwiseAbs(), dudt.cwiseAbs()) + kTiny;
  out.push_back(check("energy_rate", energy_rate_1d(mesh, u, dudt) / scale, 1e-12));
  if (cfg.line.periodic) {
    const double mscale = total_mass_1d(mesh, dudt.cwiseAbs()) + kTiny;
    out.push_back(check("conservation_rate", std::abs(total_mass_1d(mesh, dudt)) / mscale, 1e-12));
  }
  return out;
}

std::filesystem::path prepare_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir + "': " + ec.message());
  return dir;
}

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream os(p);
  if (!os) throw IoError("cannot write '" + p.string() + "'");
  os << std::setprecision(17);
  return os;
}

void write_report(const std::filesystem::path& dir, const CaseConfig& cfg, const RunResult& res, const std::string& mode) {
  auto os = open_out(dir / "report.txt");
  os << "# br1dg " << mode << " report\n";
  os << "# config-hash " << content_hash(cfg.text) << "\n";
  os << "# equation " << equation_name(cfg.equation) << "\n";
  os << "# --- config ---\n";
  std::istringstream in(cfg.text);
  for (std::string line; std::getline(in, line);) os << "#   " << line << "\n";
  os << "# --- audits ---\n";
  for (const auto& a : res.audits)
    os << "audit " << a.name << " measured=" << a.measured << " tol=" << a.tolerance << ' '
       << (a.pass ? "PASS" : "FAIL") << "\n";
  os << "run steps=" << res.steps << " t_final=" << res.t_final << " exit=" << res.exit_code;
  if (!res.message.empty()) os << " message=\"" << res.message << "\"";
  os << "\n";
  if (!os) throw IoError("write failed for report.txt");
}

void write_series(const std::filesystem::path& dir, const TimeSeries& series) {
  auto os = open_out(dir / "series.csv");
  series.write_csv(os);
  if (!os) throw IoError("write failed for series.csv");
}

// Per-element nodal dump mirroring the mesh file node block.
void write_snapshot_nse(const std::filesystem::path& file, const Mesh& mesh, const Field5& u, double t) {
  auto os = open_out(file);
  os << "br1-snapshot\ndegree " << mesh.degree << "\nelements " << mesh.num_elements() << "\nt " << t
     << "\nfields x y z rho rho_u rho_v rho_w rho_E\nnodes\n";
  for (int e = 0; e < mesh.num_elements(); ++e)
    for (int i = 0; i < mesh.nodes_per_element(); ++i) {
      const auto x = mesh.elements[e].x.col(i);
      const auto q = u.col(mesh.offset(e) + i);
      os << x(0) << ' ' << x(1) << ' ' << x(2);
      for (int c = 0; c < 5; ++c) os << ' ' << q(c);
      os << '\n';
    }
  if (!os) throw IoError("write failed for " + file.string());
}

void write_snapshot_1d(const std::filesystem::path& file, const Mesh1d& mesh, const Eigen::VectorXd& u, double t) {
  auto os = open_out(file);
  os << "br1-snapshot\ndegree " << mesh.ops.degree << "\nelements " << mesh.num_elements() << "\nt " << t
     << "\nfields x u\nnodes\n";
  const Eigen::VectorXd x = mesh.coordinates();
  for (int i = 0; i < u.size(); ++i) os << x(i) << ' ' << u(i) << '\n';
  if (!os) throw IoError("write failed for " + file.string());
}

void write_index(const std::filesystem::path& dir, const std::vector<std::pair<std::string, double>>& snaps) {
  auto os = open_out(dir / "snapshots.idx");
  os << "file t\n";
  for (const auto& [name, t] : snaps) os << name << ' ' << t << '\n';
}

void run_nse(const CaseConfig& cfg, const RunOptions& opts, std::ostream& log,
             std::vector<std::pair<std::string, double>>& snaps, const std::filesystem::path& dir, RunResult& res) {
  const Mesh mesh = make_mesh(cfg);
  SchemeConfig scheme = cfg.scheme;
  scheme.threads = effective_threads(cfg, opts);
  const NseOperator op(mesh, cfg.gas, scheme);
  Field5 u = sample(mesh, initial_state(cfg, mesh));
  op.check_admissible(u);
  log << "mesh: " << mesh.num_elements() << " elements, N = " << mesh.degree << ", " << mesh.num_nodes()
      << " nodes, threads = " << scheme.threads << "\n";

  res.audits = audit_nse(cfg, mesh, op);
  for (const auto& a : res.audits)
    log << "audit " << a.name << " = " << a.measured << (a.pass ? " PASS" : " FAIL") << "\n";

  auto snapshot = [&](const Field5& state, double t) {
    if (!opts.write_files) return;
    std::ostringstream name;
    name << "snapshot_" << std::setw(4) << std::setfill('0') << snaps.size() << ".dat";
    write_snapshot_nse(dir / name.str(), mesh, state, t);
    snaps.emplace_back(name.str(), t);
  };
  snapshot(u, 0);

  const RkScheme rk = RkScheme::by_name(cfg.rk);
  auto rhs = [&](const Field5& state, double) { return op.rhs(state); };
  auto dt_of = [&](const Field5& state) { return estimate_dt(mesh, state, cfg.cfl, cfg.gas); };
  auto record = [&](const Field5& state, double t) {
    Record r;
    r.t = t;
    r.entropy = total_entropy(op, state);
    r.kinetic = kinetic_energy(op, state);
    r.enstrophy = enstrophy(op, state);
    r.mass = conserved_totals(op, state)(0);
    res.series.add(r);
    log << "t = " << t << "  S = " << *r.entropy << "  Ekin = " << *r.kinetic << "\n";
  };
  integrate(u, cfg.t_end, cfg.output_every, rk, rhs, dt_of, record, res);
  if (cfg.t_end > 0) snapshot(u, res.t_final);
}

void run_1d(const CaseConfig& cfg, const RunOptions& opts, std::ostream& log,
            std::vector<std::pair<std::string, double>>& snaps, const std::filesystem::path& dir, RunResult& res) {
  const Mesh1d mesh = build_line_mesh(cfg.line.left, cfg.line.right, cfg.line.elements, cfg.degree);
  Eigen::VectorXd u = sample_1d(cfg, mesh);
  res.audits = audit_1d(cfg, mesh, u);
  for (const auto& a : res.audits)
    log << "audit " << a.name << " = " << a.measured << (a.pass ? " PASS" : " FAIL") << "\n";

  auto snapshot = [&](const Eigen::VectorXd& state, double t) {
    if (!opts.write_files) return;
    std::ostringstream name;
    name << "snapshot_" << std::setw(4) << std::setfill('0') << snaps.size() << ".dat";
    write_snapshot_1d(dir / name.str(), mesh, state, t);
    snaps.emplace_back(name.str(), t);
  };
  snapshot(u, 0);

  const RkScheme rk = RkScheme::by_name(cfg.rk);
  const auto coeffs = advdiff_coeffs(cfg);
  const bool advdiff = cfg.equation == Equation::AdvDiff1d;
  auto rhs = [&](const Eigen::VectorXd& state, double) -> Eigen::VectorXd {
    check_finite_1d(mesh, state);
    if (advdiff) return rhs_linear_advdiff(mesh, state, coeffs, {cfg.sigma, cfg.line.periodic});
    return rhs_burgers(mesh, state, {cfg.line.nu, cfg.line.periodic, cfg.scheme.volume});
  };
  auto dt_of = [&](const Eigen::VectorXd& state) {
    return advdiff ? estimate_dt_advdiff(mesh, coeffs, cfg.cfl) : estimate_dt_burgers(mesh, state, cfg.line.nu, cfg.cfl);
  };
  // S is the quadratic entropy (1/2) ||U||_N^2 for both model problems.
  auto record = [&](const Eigen::VectorXd& state, double t) {
    check_finite_1d(mesh, state);
    Record r;
    r.t = t;
    r.entropy = energy_norm_1d(mesh, state) / 2;
    r.mass = total_mass_1d(mesh, state);
    res.series.add(r);
    log << "t = " << t << "  S = " << *r.entropy << "\n";
  };
  integrate(u, cfg.t_end, cfg.output_every, rk, rhs, dt_of, record, res);
  if (cfg.t_end > 0) snapshot(u, res.t_final);
}

} // namespace

std::vector<AuditLine> audit_checks(const CaseConfig& cfg) {
  if (cfg.equation == Equation::Nse3d) {
    const Mesh mesh = make_mesh(cfg);
    const NseOperator op(mesh, cfg.gas, cfg.scheme);
    return audit_nse(cfg, mesh, op);
  }
  const Mesh1d mesh = build_line_mesh(cfg.line.left, cfg.line.right, cfg.line.elements, cfg.degree);
  return audit_1d(cfg, mesh, sample_1d(cfg, mesh));
}

RunResult run_case(const CaseConfig& cfg, const RunOptions& opts, std::ostream& log) {
  RunResult res;
  std::filesystem::path dir;
  std::vector<std::pair<std::string, double>> snaps;
  const std::string mode = cfg.t_end > 0 ? "run" : "audit";
  try {
    if (opts.write_files) dir = prepare_dir(opts.out_dir);
    if (cfg.equation == Equation::Nse3d) run_nse(cfg, opts, log, snaps, dir, res);
    else run_1d(cfg, opts, log, snaps, dir, res);
    const bool ok = std::all_of(res.audits.begin(), res.audits.end(), [](const AuditLine& a) { return a.pass; });
    res.exit_code = ok ? kExitOk : kExitFailure;
    if (!ok) res.message = "audit failure";
  } catch (const PositivityError& e) {
    res.exit_code = kExitPositivity;
    res.message = e.what();
    if (e.element() >= 0) res.message += " (element " + std::to_string(e.element()) + ", node " + std::to_string(e.node()) + ")";
  } catch (const ConfigError& e) {
    res.exit_code = kExitConfig;
    res.message = e.what();
  } catch (const MeshError& e) {
    res.exit_code = kExitConfig;
    res.message = e.what();
  } catch (const std::invalid_argument& e) {
    res.exit_code = kExitConfig;
    res.message = e.what();
  } catch (const IoError& e) {
    res.exit_code = kExitIo;
    res.message = e.what();
  }
  res.series.finalize();
  if (opts.write_files && res.exit_code != kExitIo && !dir.empty()) {
    try {
      write_series(dir, res.series);
      write_index(dir, snaps);
      write_report(dir, cfg, res, mode);
    } catch (const IoError& e) {
      res.exit_code = kExitIo;
      res.message = e.what();
    }
  }
  if (!res.message.empty()) log << "error: " << res.message << "\n";
  return res;
}

SweepParam parse_sweep_param(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos) throw ConfigError("sweep parameter must look like N=2..7 or elements=2,4,8");
  SweepParam p;
  p.name = spec.substr(0, eq);
  if (p.name != "N" && p.name != "elements") throw ConfigError("sweep parameter must be N or elements");
  const std::string list = spec.substr(eq + 1);
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() || v < 1) throw ConfigError("bad sweep value '" + s + "'");
    return v;
  };
  if (const auto dots = list.find(".."); dots != std::string::npos) {
    const int lo = to_int(list.substr(0, dots)), hi = to_int(list.substr(dots + 2));
    if (hi < lo) throw ConfigError("empty sweep range");
    for (int v = lo; v <= hi; ++v) p.values.push_back(v);
  } else {
    std::istringstream is(list);
    for (std::string tok; std::getline(is, tok, ',');) p.values.push_back(to_int(tok));
  }
  if (p.values.empty()) throw ConfigError("empty sweep");
  return p;
}

std::vector<SweepRow> convergence_sweep(const CaseConfig& base, const SweepParam& param) {
  std::vector<SweepRow> rows;
  const RkScheme rk = RkScheme::by_name(base.rk);
  if (base.equation == Equation::Nse3d) {
    if (base.ic.name != "density_wave") throw ConfigError("3D sweeps need ic.name = density_wave");
    if (std::isfinite(base.gas.reynolds)) throw ConfigError("the density wave is exact only for gas.reynolds = inf");
    if (base.mesh_file) throw ConfigError("sweeps need a box mesh");
  } else {
    if (base.equation != Equation::AdvDiff1d) throw ConfigError("1D sweeps support advdiff1d only");
    const double periods = base.ic.wavenumber * (base.line.right - base.line.left) / 2;
    if (!base.line.periodic || base.line.b_wave != 0 || std::abs(periods - std::round(periods)) > 1e-12)
      throw ConfigError("1D sweeps need a periodic, constant-b case with whole sine periods");
  }

  for (int value : param.values) {
    CaseConfig cfg = base;
    if (param.name == "N") cfg.degree = value;
    else if (cfg.equation == Equation::Nse3d) cfg.box.elements = {value, value, value};
    else cfg.line.elements = value;

    SweepRow row;
    row.param = param.name;
    row.value = value;
    RunResult dummy;
    auto ignore = [](const auto&, double) {};
    if (cfg.equation == Equation::Nse3d) {
      cfg.box.degree = cfg.degree;
      const Mesh mesh = build_box_mesh(cfg.box);
      const NseOperator op(mesh, cfg.gas, cfg.scheme);
      Field5 u = sample(mesh, initial_state(cfg, mesh));
      integrate(u, cfg.t_end, 0.0, rk, [&](const Field5& s, double) { return op.rhs(s); },
                [&](const Field5& s) { return estimate_dt(mesh, s, cfg.cfl, cfg.gas); }, ignore, dummy);
      const Field5 diff = u - sample(mesh, initial_state(cfg, mesh, dummy.t_final));
      row.error = std::sqrt(diff.cwiseAbs2().colwise().sum().dot(op.mass().transpose()));
      row.dofs = mesh.num_nodes();
      row.h = cfg.box.extent(0) / cfg.box.elements[0];
    } else {
      const Mesh1d mesh = build_line_mesh(cfg.line.left, cfg.line.right, cfg.line.elements, cfg.degree);
      const auto coeffs = advdiff_coeffs(cfg);
      Eigen::VectorXd u = sample_1d(cfg, mesh);
      integrate(u, cfg.t_end, 0.0, rk,
                [&](const Eigen::VectorXd& s, double) { return rhs_linear_advdiff(mesh, s, coeffs, {cfg.sigma, true}); },
                [&](const Eigen::VectorXd&) { return estimate_dt_advdiff(mesh, coeffs, cfg.cfl); }, ignore, dummy);
      const double k = cfg.ic.wavenumber * std::numbers::pi, t = dummy.t_final;
      const Eigen::VectorXd x = mesh.coordinates();
      Eigen::VectorXd diff(x.size());
      for (int i = 0; i < x.size(); ++i)
        diff(i) = u(i) - std::exp(-cfg.line.b * k * k * t) * sine_ic(cfg, x(i) - cfg.line.a * t);
      row.error = std::sqrt(energy_norm_1d(mesh, diff));
      row.dofs = mesh.size();
      row.h = (cfg.line.right - cfg.line.left) / cfg.line.elements;
    }
    if (param.name == "elements" && !rows.empty() && rows.back().error > 0 && row.error > 0)
      row.order = std::log(rows.back().error / row.error) / std::log(rows.back().h / row.h);
    rows.push_back(row);
  }
  return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  const auto prec = os.precision();
  os << std::setprecision(17) << "param,value,dofs,h,l2_error,observed_order\n";
  for (const auto& r : rows) {
    os << r.param << ',' << r.value << ',' << r.dofs << ',' << r.h << ',' << r.error << ',';
    if (r.order) os << *r.order;
    os << '\n';
  }
  os.precision(prec);
}

int run_sweep(const CaseConfig& base, const SweepParam& param, const RunOptions& opts, std::ostream& log) {
  RunResult res;
  try {
    CaseConfig cfg = base;
    cfg.scheme.threads = effective_threads(base, opts);
    const auto rows = convergence_sweep(cfg, param);
    for (const auto& r : rows)
      log << r.param << " = " << r.value << "  dofs = " << r.dofs << "  L2 error = " << r.error
          << (r.order ? "  order = " + std::to_string(*r.order) : "") << "\n";
    if (opts.write_files) {
      const auto dir = prepare_dir(opts.out_dir);
      auto os = open_out(dir / "sweep.csv");
      write_sweep_csv(os, rows);
      if (!os) throw IoError("write failed for sweep.csv");
      write_report(dir, base, res, "sweep");
    }
    return kExitOk;
  } catch (const PositivityError& e) {
    log << "error: " << e.what() << "\n";
    return kExitPositivity;
  } catch (const ConfigError& e) {
    log << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const MeshError& e) {
    log << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const IoError& e) {
    log << "error: " << e.what() << "\n";
    return kExitIo;
  }
}

} // namespace br1

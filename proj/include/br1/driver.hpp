#pragma once

// Batch front end: audits, time integration with diagnostics, convergence
// sweeps. Artifacts land in RunOptions::out_dir.

#include "br1/config.hpp"
#include "br1/diagnostics.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace br1 {

enum ExitCode { kExitOk = 0, kExitFailure = 1, kExitConfig = 2, kExitPositivity = 3, kExitIo = 4 };

struct RunOptions {
  std::string out_dir = "out";
  int threads = 0; // 0: keep the case file value
  bool deterministic = false;
  bool write_files = true;
};

struct AuditLine {
  std::string name;
  double measured = 0;
  double tolerance = 0;
  bool pass = false;
};

struct RunResult {
  int exit_code = kExitOk;
  std::string message;
  double t_final = 0;
  int steps = 0;
  std::vector<AuditLine> audits;
  TimeSeries series;
};

/// Semi-discrete checks on the initial state of the case.
std::vector<AuditLine> audit_checks(const CaseConfig& cfg);

/// Audits, then integrates to t_end. Writes report.txt, series.csv and the
/// final snapshot. Positivity or NaN failures keep the partial series.
RunResult run_case(const CaseConfig& cfg, const RunOptions& opts, std::ostream& log);

struct SweepRow {
  std::string param;
  int value = 0;
  long dofs = 0;
  double h = 0;
  double error = 0;
  std::optional<double> order; // observed order, mesh sweeps only
};

/// "N=2..7" or "elements=2,4,8".
struct SweepParam {
  std::string name;
  std::vector<int> values;
};
SweepParam parse_sweep_param(const std::string& spec);

/// L2 error against the exact solution of the case (3D density wave or
/// periodic 1D advection-diffusion sine) at t_end for each parameter value.
std::vector<SweepRow> convergence_sweep(const CaseConfig& base, const SweepParam& param);
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

/// Runs the sweep and writes sweep.csv plus report.txt.
int run_sweep(const CaseConfig& base, const SweepParam& param, const RunOptions& opts, std::ostream& log);

} // namespace br1

// br1dg: run, audit or sweep a case file.
//
//   br1dg run examples_cases/taylor_green.case --out out/tgv --threads 4
//   br1dg audit examples_cases/free_stream.case
//   br1dg sweep examples_cases/density_wave.case --param N=2..7

#include "br1/driver.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Entropy stable DGSEM solver with BR1 viscous terms"};
  app.require_subcommand(1);

  std::string case_file, out_dir = "out", sweep_spec;
  int threads = 0;
  bool deterministic = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("case", case_file, "Case file")->required();
    sub->add_option("--out", out_dir, "Output directory")->capture_default_str();
    sub->add_option("--threads", threads, "Worker threads for the DG operator")->check(CLI::PositiveNumber);
    sub->add_flag("--deterministic", deterministic, "Single thread, bitwise reproducible output");
  };
  auto* run = app.add_subcommand("run", "Run the semi-discrete audits, then integrate to t_end");
  add_common(run);
  auto* audit = app.add_subcommand("audit", "Semi-discrete checks only (t_end forced to 0)");
  add_common(audit);
  auto* sweep = app.add_subcommand("sweep", "Convergence sweep against the exact solution");
  add_common(sweep);
  sweep->add_option("--param", sweep_spec, "N=2..7 or elements=2,4,8")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : br1::kExitConfig;
  }

  br1::RunOptions opts;
  opts.out_dir = out_dir;
  opts.threads = threads;
  opts.deterministic = deterministic;

  br1::CaseConfig cfg;
  try {
    cfg = br1::load_config(case_file);
    if (sweep->parsed()) return br1::run_sweep(cfg, br1::parse_sweep_param(sweep_spec), opts, std::cout);
  } catch (const br1::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return br1::kExitConfig;
  } catch (const br1::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return br1::kExitIo;
  }
  if (audit->parsed()) cfg.t_end = 0;
  const auto res = br1::run_case(cfg, opts, std::cout);
  return res.exit_code;
}

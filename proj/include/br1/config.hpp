#pragma once

// Case files: `key = value` lines grouped under [section] headers, with
// '#' comments. Unknown sections or keys are rejected. Numbers may carry a
// trailing "pi" factor ("2pi", "0.5pi"); "inf" is accepted for reynolds.

#include "br1/dg1d.hpp"
#include "br1/dg3d.hpp"
#include "br1/mesh.hpp"
#include "br1/physics.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace br1 {

enum class Equation { AdvDiff1d, Burgers1d, Nse3d };

struct InitialCondition {
  std::string name = "uniform"; // uniform, taylor_green, density_wave, random_smooth, sine
  double rho = 1.0;
  Vec3 velocity = Vec3::Zero();
  double pressure = 1.0;
  double amplitude = 0.1;
  double wavenumber = 1.0; // 1D sine: u = amplitude sin(wavenumber pi x)
};

struct Line1d {
  double left = 0.0;
  double right = 1.0;
  int elements = 8;
  double a = 1.0;
  double b = 0.01;       // constant diffusion for advdiff1d
  double b_wave = 0.0;   // b(x) = b (1 + b_wave sin(2 pi x / L))
  double nu = 0.01;      // Burgers viscosity
  bool periodic = false;
};

struct CaseConfig {
  Equation equation = Equation::Nse3d;
  double t_end = 0.0;
  double cfl = 0.5;
  std::string rk = "lserk54";
  double output_every = 0.0; // 0: only initial and final samples
  std::uint64_t seed = 1;
  int threads = 1;
  bool deterministic = false; // forces a single thread

  int degree = 3;
  std::optional<std::string> mesh_file;
  BoxSpec box;

  SchemeConfig scheme;
  double sigma = 1.0;

  Gas gas;
  InitialCondition ic;
  Line1d line;

  std::string text; // verbatim source, for the report header
};

CaseConfig parse_config(const std::string& text);
CaseConfig load_config(const std::string& path);

/// Applies one `section.key=value` override (used by sweeps).
void apply_override(CaseConfig& cfg, const std::string& section, const std::string& key, const std::string& value);

/// Git-style object hash: SHA-1 of "blob <len>\0" + text, lower-case hex.
std::string content_hash(const std::string& text);

const char* equation_name(Equation e);

} // namespace br1

#include "br1/config.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

namespace br1 {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, std::string v) {
  v = trim(v);
  if (v == "inf" || v == "infinity") return std::numeric_limits<double>::infinity();
  double factor = 1.0;
  if (v.size() >= 2 && v.compare(v.size() - 2, 2, "pi") == 0) {
    factor = std::numbers::pi;
    v = trim(v.substr(0, v.size() - 2));
    if (v.empty()) return factor;
  }
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    throw ConfigError("'" + key + "': not a number: '" + v + "'");
  }
  if (used != v.size()) throw ConfigError("'" + key + "': trailing characters in '" + v + "'");
  return x * factor;
}

int parse_int(const std::string& key, const std::string& v) {
  const double x = parse_number(key, v);
  if (!(std::abs(x) < 1e9) || std::floor(x) != x) throw ConfigError("'" + key + "': expected an integer, got '" + v + "'");
  return static_cast<int>(x);
}

bool parse_bool(const std::string& key, const std::string& v) {
  const std::string t = trim(v);
  if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
  if (t == "false" || t == "0" || t == "no" || t == "off") return false;
  throw ConfigError("'" + key + "': expected a boolean, got '" + v + "'");
}

std::vector<double> parse_list(const std::string& key, const std::string& v, std::size_t n) {
  std::istringstream is(v);
  std::vector<double> out;
  std::string tok;
  while (is >> tok) out.push_back(parse_number(key, tok));
  if (out.size() == 1 && n > 1) out.assign(n, out[0]);
  if (out.size() != n) throw ConfigError("'" + key + "': expected " + std::to_string(n) + " values");
  return out;
}

Vec3 parse_vec3(const std::string& key, const std::string& v) {
  const auto l = parse_list(key, v, 3);
  return Vec3(l[0], l[1], l[2]);
}

void validate(const CaseConfig& c) {
  if (c.degree < 1) throw ConfigError("mesh.degree must be >= 1");
  if (!(c.t_end >= 0)) throw ConfigError("case.t_end must be >= 0");
  if (!(c.cfl > 0)) throw ConfigError("case.cfl must be positive");
  if (!(c.output_every >= 0)) throw ConfigError("case.output_every must be >= 0");
  if (c.threads < 1) throw ConfigError("case.threads must be >= 1");
  if (!(c.gas.gamma > 1)) throw ConfigError("gas.gamma must exceed 1");
  if (!(c.gas.reynolds > 0) || !(c.gas.prandtl > 0) || !(c.gas.mach > 0) || !(c.gas.mu > 0))
    throw ConfigError("gas.reynolds, prandtl, mach and mu must be positive");
  if (c.sigma < 0 || c.sigma > 1) throw ConfigError("scheme.sigma must lie in [0, 1]");
  if (c.equation == Equation::Nse3d) {
    for (int d = 0; d < 3; ++d) {
      if (c.box.elements[d] < 1) throw ConfigError("mesh.elements must be >= 1 per axis");
      if (!(c.box.extent(d) > 0)) throw ConfigError("mesh.extent must be positive");
    }
    if (c.box.warp != "none" && c.box.warp != "sine") throw ConfigError("mesh.warp must be none or sine");
    const auto& n = c.ic.name;
    if (n != "uniform" && n != "taylor_green" && n != "density_wave" && n != "random_smooth")
      throw ConfigError("ic.name '" + n + "' is not available for nse3d");
    if (!(c.ic.rho > 0) || !(c.ic.pressure > 0)) throw ConfigError("ic.rho and ic.pressure must be positive");
  } else {
    if (c.line.elements < 1) throw ConfigError("1d.elements must be >= 1");
    if (!(c.line.right > c.line.left)) throw ConfigError("1d.right must exceed 1d.left");
    if (c.ic.name != "sine") throw ConfigError("ic.name must be sine for 1D equations");
    if (c.equation == Equation::AdvDiff1d && !(c.line.b > 0)) throw ConfigError("1d.b must be positive");
    if (c.equation == Equation::AdvDiff1d && !(std::abs(c.line.b_wave) < 1)) throw ConfigError("|1d.b_wave| must be < 1");
    if (c.equation == Equation::Burgers1d && !(c.line.nu >= 0)) throw ConfigError("1d.nu must be >= 0");
  }
}

} // namespace

const char* equation_name(Equation e) {
  switch (e) {
  case Equation::AdvDiff1d: return "advdiff1d";
  case Equation::Burgers1d: return "burgers1d";
  default: return "nse3d";
  }
}

void apply_override(CaseConfig& c, const std::string& section, const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  const std::string full = section + "." + key;
  auto unknown = [&] { throw ConfigError("unknown key '" + full + "'"); };

  if (section == "case") {
    if (key == "equation") {
      if (v == "advdiff1d") c.equation = Equation::AdvDiff1d;
      else if (v == "burgers1d") c.equation = Equation::Burgers1d;
      else if (v == "nse3d") c.equation = Equation::Nse3d;
      else throw ConfigError("case.equation must be advdiff1d, burgers1d or nse3d");
    } else if (key == "t_end") c.t_end = parse_number(full, v);
    else if (key == "cfl") c.cfl = parse_number(full, v);
    else if (key == "rk") {
      if (v != "lserk54" && v != "williamson3") throw ConfigError("case.rk must be lserk54 or williamson3");
      c.rk = v;
    } else if (key == "output_every") c.output_every = parse_number(full, v);
    else if (key == "seed") c.seed = static_cast<std::uint64_t>(parse_int(full, v));
    else if (key == "threads") c.threads = parse_int(full, v);
    else if (key == "deterministic") c.deterministic = parse_bool(full, v);
    else unknown();
  } else if (section == "mesh") {
    if (key == "degree" || key == "N") c.degree = parse_int(full, v);
    else if (key == "file") c.mesh_file = v;
    else if (key == "elements") {
      const auto l = parse_list(full, v, 3);
      for (int d = 0; d < 3; ++d) c.box.elements[d] = parse_int(full, std::to_string(l[d]));
    } else if (key == "extent") c.box.extent = parse_vec3(full, v);
    else if (key == "origin") c.box.origin = parse_vec3(full, v);
    else if (key == "warp") c.box.warp = v;
    else if (key == "amplitude") c.box.amplitude = parse_number(full, v);
    else unknown();
  } else if (section == "scheme") {
    if (key == "volume") {
      if (v == "ec" || v == "entropy_conservative") c.scheme.volume = VolumeMode::EntropyConservative;
      else if (v == "standard") c.scheme.volume = VolumeMode::Standard;
      else throw ConfigError("scheme.volume must be ec or standard");
    } else if (key == "interface") {
      if (v == "ec") c.scheme.interface = InterfaceFlux::EntropyConservative;
      else if (v == "ec_dissipation" || v == "es") c.scheme.interface = InterfaceFlux::MatrixDissipation;
      else throw ConfigError("scheme.interface must be ec or ec_dissipation");
    } else if (key == "sigma") c.sigma = parse_number(full, v);
    else unknown();
  } else if (section == "gas") {
    if (key == "gamma") c.gas.gamma = parse_number(full, v);
    else if (key == "reynolds") c.gas.reynolds = parse_number(full, v);
    else if (key == "prandtl") c.gas.prandtl = parse_number(full, v);
    else if (key == "mach") c.gas.mach = parse_number(full, v);
    else if (key == "mu") c.gas.mu = parse_number(full, v);
    else unknown();
  } else if (section == "ic") {
    if (key == "name") c.ic.name = v;
    else if (key == "rho") c.ic.rho = parse_number(full, v);
    else if (key == "velocity") c.ic.velocity = parse_vec3(full, v);
    else if (key == "pressure") c.ic.pressure = parse_number(full, v);
    else if (key == "amplitude") c.ic.amplitude = parse_number(full, v);
    else if (key == "wavenumber") c.ic.wavenumber = parse_number(full, v);
    else unknown();
  } else if (section == "1d") {
    if (key == "left") c.line.left = parse_number(full, v);
    else if (key == "right") c.line.right = parse_number(full, v);
    else if (key == "elements") c.line.elements = parse_int(full, v);
    else if (key == "a") c.line.a = parse_number(full, v);
    else if (key == "b") c.line.b = parse_number(full, v);
    else if (key == "b_wave") c.line.b_wave = parse_number(full, v);
    else if (key == "nu") c.line.nu = parse_number(full, v);
    else if (key == "periodic") c.line.periodic = parse_bool(full, v);
    else unknown();
  } else {
    throw ConfigError("unknown section '[" + section + "]'");
  }
}

CaseConfig parse_config(const std::string& text) {
  CaseConfig c;
  c.text = text;
  std::istringstream is(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("line " + std::to_string(lineno) + ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    if (section.empty()) throw ConfigError("line " + std::to_string(lineno) + ": key outside any section");
    apply_override(c, section, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  c.box.degree = c.degree;
  validate(c);
  return c;
}

CaseConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open case file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string content_hash(const std::string& text) {
  const std::string header = "blob " + std::to_string(text.size());
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (!ctx) throw std::runtime_error("content_hash: EVP context allocation failed");
  const bool ok = EVP_DigestInit_ex(ctx, EVP_sha1(), nullptr) == 1 &&
                  EVP_DigestUpdate(ctx, header.data(), header.size()) == 1 &&
                  EVP_DigestUpdate(ctx, "\0", 1) == 1 && EVP_DigestUpdate(ctx, text.data(), text.size()) == 1 &&
                  EVP_DigestFinal_ex(ctx, digest, &len) == 1;
  EVP_MD_CTX_free(ctx);
  if (!ok) throw std::runtime_error("content_hash: SHA-1 failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return hex.str();
}

} // namespace br1

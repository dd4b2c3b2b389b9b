#pragma once

// Initial states sampled at the mesh nodes.

#include "br1/dg1d.hpp"
#include "br1/mesh.hpp"
#include "br1/physics.hpp"

#include <cstdint>
#include <functional>

namespace br1 {

using PointState = std::function<Vec5(const Vec3&)>;

Field5 sample(const Mesh& mesh, const PointState& f);

/// Uniform state (rho, v, p).
PointState uniform_state(double rho, const Vec3& v, double p, const Gas& gas);

/// Taylor-Green vortex on [0, 2 pi]^3 with background pressure 1/(gamma M^2)
/// and isothermal density rho = p / p0 (see docs/taylor_green.md).
PointState taylor_green(const Gas& gas);

/// rho = 1 + amp sin(pi (x + y + z - (v1 + v2 + v3) t)), constant v and p.
PointState density_wave(const Gas& gas, const Vec3& v, double p, double amplitude, double t);

/// Smooth periodic perturbation of a uniform state: a few random Fourier
/// modes on the box [origin, origin + extent] in rho, v and p.
PointState random_smooth(const Gas& gas, const Vec3& origin, const Vec3& extent, double amplitude, std::uint64_t seed);

} // namespace br1

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "nlsdp/model.hpp"

namespace nlsdp {

struct PhasePoint {
  double phi = 0.0;
  double dphi = 0.0;
};

/// Phi_omega(x, y) = y^2 + omega x^2 + 2 alpha |x|^{p+1} + beta |x|^{2p}.
double hamiltonian(const ModelParams& params, double omega, PhasePoint pt);

/// (phi, phi') -> (phi, phi' - Z phi): the slope jump imposed at x = 0.
PhasePoint jump_map(PhasePoint pt, double Z);

struct OrbitOptions {
  /// RK4 step in the ODE variable x, shortened where the phase speed exceeds 1.
  double step = 1e-3;
  /// Stop once phi crosses this level (the last point lands on it).
  std::optional<double> stop_phi;
  /// Optional cap on the ODE variable, in addition to the arclength cap.
  std::optional<double> x_span;
};

struct Orbit {
  /// ODE variable, starting at 0.
  std::vector<double> x;
  std::vector<PhasePoint> points;
  double arclength = 0.0;
};

/// Integrates (phi, phi')' = (phi', -omega phi - lambda1 phi^p - lambda2 phi^{2p-1})
/// from `start` until the accumulated phase-plane arclength reaches
/// `arclength` (or an option stops it first). Throws NumericalError when the
/// orbit leaves the ball of radius 1e3 c0.
Orbit trace_orbit(const ModelParams& params, double omega, PhasePoint start, double arclength,
                  const OrbitOptions& opts = {});

/// Start of the unstable branch. For omega < 0: (eps, sqrt(-omega) eps) with
/// eps = 1e-8 c0. For omega = 0 the origin is degenerate and the point is
/// the closed-form equilibrium profile at x = -x_far.
struct Seed {
  PhasePoint point;
  /// Position on the real line of the seed (negative), when known in closed
  /// form; NaN otherwise.
  double x;
};
Seed unstable_seed(const ModelParams& params, double omega, double x_far = 50.0);

enum class Branch { Unstable, Jump, Stable };
std::string_view to_string(Branch b);

struct PortraitSample {
  double x;
  PhasePoint point;
  Branch branch;
};

/// Unstable branch from the seed up to phi = c0 (placed at x = 0), the jump
/// segment, and the stable branch from (c0, -Z c0/2) out to x = x_tail. The
/// stable branch is the reflection (phi, -phi') of the unstable one, which is
/// backward integration along it. For omega < 0 the seed is shrunk below
/// unstable_seed's when needed so the branch spans x_tail.
std::vector<PortraitSample> composite_path(const ModelParams& params, double omega,
                                           double step = 1e-3, double x_tail = 20.0);

}  // namespace nlsdp

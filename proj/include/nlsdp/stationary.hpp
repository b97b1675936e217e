#pragma once

#include <vector>

#include "nlsdp/grid.hpp"
#include "nlsdp/model.hpp"
#include "nlsdp/profiles.hpp"

namespace nlsdp {

/// Pointwise values of some residual together with the node abscissae.
struct NodeValues {
  std::vector<double> x;
  std::vector<double> value;
  double max_abs = 0.0;
};

struct ResidualReport {
  double max_interior_residual = 0.0;
  double jump_residual = 0.0;
  double first_integral_max = 0.0;
  Grid grid;
};

/// phi'' implied by the stationary ODE away from x = 0, for phi >= 0:
/// -omega phi - lambda1 phi^p - lambda2 phi^{2p-1}.
double second_derivative_from_ode(const ModelParams& params, double omega, double phi);

/// phi'' + omega phi + lambda1 phi^p + lambda2 phi^{2p-1} at nodes with
/// |x| >= 2h, phi'' from a 5-point stencil on closed-form samples.
NodeValues interior_residual(const Profile& profile, const Grid& grid, double scale = 1.0);

/// |phi'(0+) - phi'(0-) + Z phi(0)|.
double jump_residual(const Profile& profile);

/// |phi'|^2 + omega phi^2 + 2 alpha phi^{p+1} + beta phi^{2p} at every node.
NodeValues first_integral_residual(const Profile& profile, const Grid& grid);

ResidualReport verify_profile(const Profile& profile, const Grid& grid);

/// F(c) = int_0^c (omega t + f(t^2) t) dt, in closed form.
double primitive_F(const ModelParams& params, double omega, double c);

/// P(c) = 1/2 (Z^2/4 + omega) c^2 + lambda1/(p+1) c^{p+1} + lambda2/(2p) c^{2p}.
double peak_polynomial(const ModelParams& params, double omega, double c);
double peak_polynomial_derivative(const ModelParams& params, double omega, double c);

/// The unique critical point a > 0 of P, from the quadratic in r = c^{p-1}.
double peak_polynomial_critical_point(const ModelParams& params, double omega);

/// The unique positive root c0 > a of P. Valid in the standing-wave and the
/// equilibrium regimes; throws RegimeError otherwise.
double find_c0(const ModelParams& params, double omega);

struct HalfProfile {
  std::vector<double> x;
  std::vector<double> psi;
  std::vector<double> dpsi;
};

/// Integrates -psi'' = omega psi + lambda1 psi^p + lambda2 psi^{2p-1} outward
/// on [0, x_max] with classical RK4 from psi(0) = c0, psi'(0) = -Z c0 / 2.
/// Throws NumericalError if psi leaves (0, 2 c0].
HalfProfile shoot_ivp(const ModelParams& params, double omega, double x_max, double h_ode);

}  // namespace nlsdp

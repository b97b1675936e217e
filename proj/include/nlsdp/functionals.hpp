#pragma once

#include <optional>

#include "nlsdp/grid.hpp"
#include "nlsdp/model.hpp"

namespace nlsdp {

// Discrete quadratures. Point values use trapezoid weights; the gradient
// term sums squared forward differences edge by edge, which integrates the
// two smooth halves [-L, 0] and [0, L] separately (x = 0 is always a node).

/// (h sum_j w_j |v_j|^q)^{1/q}. Throws std::invalid_argument for q < 1.
double lp_norm(const ComplexField& v, double q);

/// h sum_j w_j |v_j|^q, i.e. lp_norm^q without the root.
double lp_power(const ComplexField& v, double q);

/// ||v||_{L^2}^2.
double charge(const ComplexField& v);

/// ||v_x||_{L^2}^2 = sum over edges |v_{j+1} - v_j|^2 / h.
double gradient_norm_sq(const ComplexField& v);

/// Pointwise derivative: centered differences inside, second-order one-sided
/// at both endpoints. At x = 0 this is the centered difference across the kink.
ComplexField h1_deriv(const ComplexField& v);

/// ||v_x||^2 - Z |v(0)|^2.
double delta_form(const ComplexField& v, double Z);

double energy(const ComplexField& v, const ModelParams& params);
/// E(v) - omega/2 ||v||^2.
double action_G(const ComplexField& v, const ModelParams& params, double omega);
/// E(v) + lambda1/(p+1) ||v||_{p+1}^{p+1}.
double functional_R(const ComplexField& v, const ModelParams& params);
/// E(v) + lambda2/(2p) ||v||_{2p}^{2p}.
double functional_Rtilde(const ComplexField& v, const ModelParams& params);
/// 1/2 ||v_x||^2 - omega/2 ||v||^2.
double functional_I(const ComplexField& v, double omega);
/// (||v||_{p+1}^{p+1} + ||v||_{2p}^{2p} + ||v_x||^2)^{1/2}.
double x_space_norm(const ComplexField& v, const ModelParams& params);

/// Complex H^1 pairing sum(u conj(v)) h w + sum(du conj(dv)) / h.
cplx h1_inner(const ComplexField& u, const ComplexField& v);
double h1_norm(const ComplexField& v);

struct OrbitalDistance {
  double distance;
  double theta;
};

/// inf over theta of ||u - e^{i theta} phi||_{H^1}, in closed form.
OrbitalDistance orbital_distance(const ComplexField& u, const ComplexField& phi);

/// Normalized bound state sqrt(Z/2) exp(-Z|x|/2) of -d^2/dx^2 - Z delta.
ComplexField delta_eigenfunction(double Z, const Grid& grid);

/// Constant C with (Z/2)|v(0)|^2 <= R(v) + C for every v (Z > 0, lambda2 < 0),
/// from the Sobolev/Hoelder/Young chain with an explicit averaged point bound.
double coercivity_constant(const ModelParams& params);

/// Same bound for Rtilde (uses lambda1 < 0 instead of lambda2).
double coercivity_constant_tilde(const ModelParams& params);

struct Diagnostics {
  double t = 0.0;
  double charge = 0.0;
  double energy = 0.0;
  double action = 0.0;
  /// NaN when no reference profile was supplied.
  double orbital_dist = 0.0;
};

Diagnostics diagnose(const ComplexField& u, const ModelParams& params, double omega, double t,
                     const ComplexField* reference = nullptr);

}  // namespace nlsdp

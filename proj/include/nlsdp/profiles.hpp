#pragma once

#include <utility>

#include "nlsdp/model.hpp"

namespace nlsdp {

enum class ProfileKind { StandingWave, Equilibrium };

/// Which one-sided limit to take for the derivative at the kink x = 0.
enum class Side { Left, Right };

/// (lambda1/(p+1), lambda2/p).
std::pair<double, double> alpha_beta(const ModelParams& params);

/// Blow-up abscissa of the Z = 0 half-profile, l_omega <= 0.
double l_omega(const ModelParams& params, double omega);

/// Decreasing diffeomorphism (-l_omega, inf) -> (1, inf) whose inverse at
/// Z/(2 sqrt(-omega)) is the matching shift of the standing wave.
double R1_eval(const ModelParams& params, double omega, double d);
double R1_derivative(const ModelParams& params, double omega, double d);
double R1_inverse(const ModelParams& params, double omega, double y);

/// Blow-up abscissa of the omega = 0 half-profile, l0 < 0. Requires lambda1 < 0.
double l0(const ModelParams& params);

/// Decreasing diffeomorphism (-l0, inf) -> (0, inf); R2^{-1}(Z/4) is the
/// matching shift of the equilibrium profile.
double R2_eval(const ModelParams& params, double d);
double R2_inverse(const ModelParams& params, double y);

/// Explicit profile for lambda1 = 0, lambda2 = -1 and nonlinearity |u|^{r-1}u.
/// Used as an independent check of the general standing-wave formula.
double kaminaga_ohta_profile(double r, double omega, double Z, double x);

/// Closed-form even, positive stationary wave: phi_omega for omega < 0 or
/// phi_0 for omega = 0. Immutable after construction.
class Profile {
public:
  /// Builds phi_omega; throws RegimeError unless classify_regime says
  /// StandingWaveExists.
  static Profile standing_wave(const ModelParams& params, double omega);
  /// Builds phi_0; throws RegimeError unless classify_regime says EquilibriumExists.
  static Profile equilibrium(const ModelParams& params);
  /// Dispatches on omega (omega == 0 gives the equilibrium).
  static Profile make(const ModelParams& params, double omega);

  double eval(double x) const;
  double operator()(double x) const { return eval(x); }

  /// phi'(x). At x == 0 the one-sided limit selected by `side` is returned;
  /// elsewhere `side` is ignored.
  double derivative(double x, Side side = Side::Right) const;

  double peak() const { return eval(0.0); }

  const ModelParams& params() const { return params_; }
  double omega() const { return omega_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double shift() const { return shift_; }
  ProfileKind kind() const { return kind_; }

private:
  Profile() = default;
  void check_peak() const;

  ModelParams params_{};
  double omega_ = 0.0;
  double alpha_ = 0.0;
  double beta_ = 0.0;
  double shift_ = 0.0;
  ProfileKind kind_ = ProfileKind::StandingWave;

  // Standing wave: phi = [A + C sinh(k(|x|+d))]^{-1/(p-1)}.
  double A_ = 0.0, C_ = 0.0, k_ = 0.0;
  // Equilibrium: phi = [N / (M (|x|+d)^2 + Q)]^{1/(p-1)}.
  double N_ = 0.0, M_ = 0.0, Q_ = 0.0;
};

}  // namespace nlsdp

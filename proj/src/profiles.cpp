#include "nlsdp/profiles.hpp"

#include <cmath>
#include <sstream>

#include "nlsdp/errors.hpp"
#include "nlsdp/roots.hpp"
#include "nlsdp/stationary.hpp"

namespace nlsdp {

namespace {

// Beyond this argument sinh/cosh are evaluated in log form.
constexpr double kLargeArg = 30.0;

struct WaveConstants {
  double alpha, beta, s, k;
};

WaveConstants wave_constants(const ModelParams& params, double omega) {
  require_valid(params);
  if (!(omega < 0.0)) throw RegimeError("standing-wave quantities need omega < 0");
  const auto [alpha, beta] = alpha_beta(params);
  const double disc = omega * beta - alpha * alpha;
  if (!(disc > 0.0)) {
    std::ostringstream os;
    os << "omega*beta - alpha^2 = " << disc << " must be positive";
    throw RegimeError(os.str());
  }
  return {alpha, beta, std::sqrt(disc), (params.p - 1.0) * std::sqrt(-omega)};
}

// cosh(u) / (sinh(u) + a) for u > 0, stable for large u.
double cosh_over_shifted_sinh(double u, double a) {
  if (u < kLargeArg) return std::cosh(u) / (std::sinh(u) + a);
  const double e = std::exp(-u);
  return (1.0 + e * e) / (1.0 - e * e + 2.0 * a * e);
}

}  // namespace

std::pair<double, double> alpha_beta(const ModelParams& params) {
  return {params.lambda1 / (params.p + 1.0), params.lambda2 / params.p};
}

double l_omega(const ModelParams& params, double omega) {
  const auto c = wave_constants(params, omega);
  return std::asinh(c.alpha / c.s) / c.k;
}

double R1_eval(const ModelParams& params, double omega, double d) {
  const auto c = wave_constants(params, omega);
  const double lw = std::asinh(c.alpha / c.s) / c.k;
  if (!(d > -lw)) {
    std::ostringstream os;
    os << "R1 evaluated at d = " << d << " outside (" << -lw << ", inf)";
    throw RegimeError(os.str());
  }
  return cosh_over_shifted_sinh(c.k * d, c.alpha / c.s);
}

double R1_derivative(const ModelParams& params, double omega, double d) {
  const auto c = wave_constants(params, omega);
  const double u = c.k * d;
  const double a = c.alpha / c.s;
  if (u < kLargeArg) {
    const double den = std::sinh(u) + a;
    return c.k * (a * std::sinh(u) - 1.0) / (den * den);
  }
  // (a sinh u - 1)/(sinh u + a)^2 ~ 2 a e^{-u} - 4 e^{-2u}(1 + a^2) + ...
  const double e = std::exp(-u);
  const double den = 1.0 - e * e + 2.0 * a * e;
  return c.k * (2.0 * a * e * (1.0 - e * e) - 4.0 * e * e) / (den * den);
}

double R1_inverse(const ModelParams& params, double omega, double y) {
  if (!(y > 1.0)) {
    std::ostringstream os;
    os << "R1 has range (1, inf); cannot invert y = " << y;
    throw RegimeError(os.str());
  }
  const double lw = l_omega(params, omega);
  const double left = -lw + 1e-9 * std::max(1.0, std::abs(lw));
  return invert_decreasing([&](double d) { return R1_eval(params, omega, d); },
                           [&](double d) { return R1_derivative(params, omega, d); }, left, y);
}

double l0(const ModelParams& params) {
  require_valid(params);
  if (!(params.lambda1 < 0.0) || !(params.lambda2 < 0.0)) {
    throw RegimeError("l0 needs lambda1 < 0 and lambda2 < 0");
  }
  const double p = params.p;
  return std::sqrt(std::abs(params.lambda2)) * (p + 1.0) /
         (std::sqrt(p) * (p - 1.0) * params.lambda1);
}

double R2_eval(const ModelParams& params, double d) {
  const double l = l0(params);
  if (!(d > -l)) {
    std::ostringstream os;
    os << "R2 evaluated at d = " << d << " outside (" << -l << ", inf)";
    throw RegimeError(os.str());
  }
  return d / ((params.p - 1.0) * (d - l) * (d + l));
}

double R2_inverse(const ModelParams& params, double y) {
  if (!(y > 0.0)) {
    std::ostringstream os;
    os << "R2 has range (0, inf); cannot invert y = " << y;
    throw RegimeError(os.str());
  }
  const double l = l0(params);
  const double pm1 = params.p - 1.0;
  const double left = -l + 1e-9 * std::max(1.0, std::abs(l));
  return invert_decreasing(
      [&](double d) { return d / (pm1 * (d - l) * (d + l)); },
      [&](double d) {
        const double q = (d - l) * (d + l);
        return -(d * d + l * l) / (pm1 * q * q);
      },
      left, y);
}

double kaminaga_ohta_profile(double r, double omega, double Z, double x) {
  if (!(r > 1.0)) throw RegimeError("kaminaga_ohta_profile needs r > 1");
  if (!(Z > 0.0) || !(omega < 0.0) || !(-omega < Z * Z / 4.0)) {
    throw RegimeError("kaminaga_ohta_profile needs Z > 0 and 0 < -omega < Z^2/4");
  }
  const double mu = std::sqrt(-omega);
  const double amp = std::pow(-omega * (r + 1.0) / 2.0, 1.0 / (r - 1.0));
  const double arg = (r - 1.0) * mu / 2.0 * std::abs(x) + std::atanh(2.0 * mu / Z);
  if (arg < kLargeArg) return amp * std::pow(std::sinh(arg), -2.0 / (r - 1.0));
  const double log_sinh = arg - std::log(2.0) + std::log1p(-std::exp(-2.0 * arg));
  return amp * std::exp(-2.0 / (r - 1.0) * log_sinh);
}

Profile Profile::standing_wave(const ModelParams& params, double omega) {
  const auto verdict = classify_regime(params, omega);
  if (verdict.tag != RegimeTag::StandingWaveExists) {
    throw RegimeError(std::string("no standing wave: ") + std::string(to_string(verdict.tag)) +
                      " (" + verdict.detail + ")");
  }
  const auto c = wave_constants(params, omega);
  Profile prof;
  prof.params_ = params;
  prof.omega_ = omega;
  prof.alpha_ = c.alpha;
  prof.beta_ = c.beta;
  prof.kind_ = ProfileKind::StandingWave;
  prof.shift_ = R1_inverse(params, omega, params.Z / (2.0 * std::sqrt(-omega)));
  prof.A_ = c.alpha / (-omega);
  prof.C_ = c.s / (-omega);
  prof.k_ = c.k;
  prof.check_peak();
  return prof;
}

Profile Profile::equilibrium(const ModelParams& params) {
  const auto verdict = classify_regime(params, 0.0);
  if (verdict.tag != RegimeTag::EquilibriumExists) {
    throw RegimeError(std::string("no equilibrium: ") + std::string(to_string(verdict.tag)) +
                      " (" + verdict.detail + ")");
  }
  const double p = params.p;
  const auto [alpha, beta] = alpha_beta(params);
  Profile prof;
  prof.params_ = params;
  prof.omega_ = 0.0;
  prof.alpha_ = alpha;
  prof.beta_ = beta;
  prof.kind_ = ProfileKind::Equilibrium;
  prof.shift_ = R2_inverse(params, params.Z / 4.0);
  prof.N_ = -2.0 * p * (p + 1.0) * params.lambda1;
  prof.M_ = p * (p - 1.0) * (p - 1.0) * params.lambda1 * params.lambda1;
  prof.Q_ = (p + 1.0) * (p + 1.0) * params.lambda2;
  prof.check_peak();
  return prof;
}

Profile Profile::make(const ModelParams& params, double omega) {
  return omega == 0.0 ? equilibrium(params) : standing_wave(params, omega);
}

void Profile::check_peak() const {
  const double c0 = find_c0(params_, omega_);
  const double peak = eval(0.0);
  if (!(std::abs(c0 - peak) <= 1e-9 * std::max(1.0, c0))) {
    std::ostringstream os;
    os.precision(17);
    os << "closed-form peak " << peak << " disagrees with root of the peak polynomial " << c0;
    throw NumericalError(os.str());
  }
}

double Profile::eval(double x) const {
  const double ax = std::abs(x);
  const double inv = 1.0 / (params_.p - 1.0);
  if (kind_ == ProfileKind::Equilibrium) {
    const double y = ax + shift_;
    return std::pow(N_ / (M_ * y * y + Q_), inv);
  }
  const double a = k_ * (ax + shift_);
  if (a < kLargeArg) return std::pow(A_ + C_ * std::sinh(a), -inv);
  const double e = std::exp(-a);
  const double log_bracket = a + std::log(0.5 * C_) + std::log1p(-e * e + 2.0 * A_ / C_ * e);
  return std::exp(-inv * log_bracket);
}

double Profile::derivative(double x, Side side) const {
  const double sign = (x > 0.0 || (x == 0.0 && side == Side::Right)) ? 1.0 : -1.0;
  const double ax = std::abs(x);
  const double inv = 1.0 / (params_.p - 1.0);
  const double phi = eval(x);
  double log_slope = 0.0;  // d/d|x| of log(phi)
  if (kind_ == ProfileKind::Equilibrium) {
    const double y = ax + shift_;
    log_slope = -inv * 2.0 * M_ * y / (M_ * y * y + Q_);
  } else {
    const double a = k_ * (ax + shift_);
    // d/d|x| log(A + C sinh a) = k cosh(a) / (sinh(a) + A/C)
    log_slope = -inv * k_ * cosh_over_shifted_sinh(a, A_ / C_);
  }
  return sign * phi * log_slope;
}

}  // namespace nlsdp

#include "nlsdp/stationary.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "nlsdp/errors.hpp"

namespace nlsdp {

double second_derivative_from_ode(const ModelParams& params, double omega, double phi) {
  const double phi2 = phi * phi;
  return -omega * phi - params.lambda1 * phi * abs_pow(phi2, params.p - 1.0) -
         params.lambda2 * phi * abs_pow(phi2, 2.0 * params.p - 2.0);
}

NodeValues interior_residual(const Profile& profile, const Grid& grid, double scale) {
  const double h = grid.spacing();
  const auto& params = profile.params();
  const double omega = profile.omega();
  NodeValues out;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double x = grid.x(j);
    if (std::abs(x) < 2.0 * h * (1.0 - 1e-12)) continue;
    const double fm2 = scale * profile.eval(x - 2.0 * h);
    const double fm1 = scale * profile.eval(x - h);
    const double f0 = scale * profile.eval(x);
    const double fp1 = scale * profile.eval(x + h);
    const double fp2 = scale * profile.eval(x + 2.0 * h);
    const double d2 = (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
    const double r = d2 - second_derivative_from_ode(params, omega, f0);
    out.x.push_back(x);
    out.value.push_back(r);
    out.max_abs = std::max(out.max_abs, std::abs(r));
  }
  return out;
}

double jump_residual(const Profile& profile) {
  return std::abs(profile.derivative(0.0, Side::Right) - profile.derivative(0.0, Side::Left) +
                  profile.params().Z * profile.eval(0.0));
}

NodeValues first_integral_residual(const Profile& profile, const Grid& grid) {
  const double omega = profile.omega();
  const double alpha = profile.alpha();
  const double beta = profile.beta();
  const double p = profile.params().p;
  NodeValues out;
  out.x.reserve(grid.size());
  out.value.reserve(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double x = grid.x(j);
    const double phi = profile.eval(x);
    const double dphi = profile.derivative(x, Side::Right);
    const double phi2 = phi * phi;
    const double r = dphi * dphi + omega * phi2 + 2.0 * alpha * phi2 * abs_pow(phi2, p - 1.0) +
                     beta * abs_pow(phi2, 2.0 * p);
    out.x.push_back(x);
    out.value.push_back(r);
    out.max_abs = std::max(out.max_abs, std::abs(r));
  }
  return out;
}

ResidualReport verify_profile(const Profile& profile, const Grid& grid) {
  ResidualReport rep{0.0, 0.0, 0.0, grid};
  rep.max_interior_residual = interior_residual(profile, grid).max_abs;
  rep.jump_residual = jump_residual(profile);
  rep.first_integral_max = first_integral_residual(profile, grid).max_abs;
  return rep;
}

double primitive_F(const ModelParams& params, double omega, double c) {
  const double p = params.p;
  const double c2 = c * c;
  return 0.5 * omega * c2 + params.lambda1 / (p + 1.0) * c2 * abs_pow(c2, p - 1.0) +
         params.lambda2 / (2.0 * p) * abs_pow(c2, 2.0 * p);
}

double peak_polynomial(const ModelParams& params, double omega, double c) {
  const double p = params.p;
  const double q = params.Z * params.Z / 4.0 + omega;
  const double c2 = c * c;
  return 0.5 * q * c2 + params.lambda1 / (p + 1.0) * c2 * abs_pow(c2, p - 1.0) +
         params.lambda2 / (2.0 * p) * abs_pow(c2, 2.0 * p);
}

double peak_polynomial_derivative(const ModelParams& params, double omega, double c) {
  const double p = params.p;
  const double q = params.Z * params.Z / 4.0 + omega;
  const double c2 = c * c;
  return q * c + params.lambda1 * c * abs_pow(c2, p - 1.0) +
         params.lambda2 * c * abs_pow(c2, 2.0 * p - 2.0);
}

double peak_polynomial_critical_point(const ModelParams& params, double omega) {
  const double q = params.Z * params.Z / 4.0 + omega;
  const double l1 = params.lambda1;
  const double l2 = params.lambda2;
  if (!(q > 0.0) || l1 > 0.0 || !(l2 < 0.0)) {
    throw RegimeError("peak polynomial needs Z^2/4 + omega > 0, lambda1 <= 0, lambda2 < 0");
  }
  // Positive root of l2 r^2 + l1 r + q, written without cancellation.
  const double r0 = 2.0 * q / (-l1 + std::sqrt(l1 * l1 - 4.0 * l2 * q));
  return std::pow(r0, 1.0 / (params.p - 1.0));
}

double find_c0(const ModelParams& params, double omega) {
  const auto verdict = classify_regime(params, omega);
  if (!verdict.exists()) {
    throw RegimeError(std::string("peak value undefined: ") + std::string(to_string(verdict.tag)));
  }
  const double a = peak_polynomial_critical_point(params, omega);
  auto P = [&](double c) { return peak_polynomial(params, omega, c); };
  if (!(P(a) > 0.0)) throw NumericalError("peak polynomial is not positive at its critical point");
  double lo = a;
  double hi = 2.0 * a;
  for (int k = 0; P(hi) >= 0.0; ++k) {
    if (k > 200) throw NumericalError("find_c0: could not bracket the root");
    lo = hi;
    hi *= 2.0;
  }
  for (int it = 0; it < 400 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (P(mid) > 0.0) lo = mid; else hi = mid;
  }
  double c = 0.5 * (lo + hi);
  for (int it = 0; it < 3; ++it) {
    const double slope = peak_polynomial_derivative(params, omega, c);
    if (!(slope < 0.0)) break;
    const double next = c - P(c) / slope;
    if (!(next > a) || !(std::abs(P(next)) < std::abs(P(c)))) break;
    c = next;
  }
  return c;
}

HalfProfile shoot_ivp(const ModelParams& params, double omega, double x_max, double h_ode) {
  if (!(x_max > 0.0) || !(h_ode > 0.0)) throw std::invalid_argument("shoot_ivp: bad interval or step");
  const double c0 = find_c0(params, omega);
  const auto steps = static_cast<std::size_t>(std::ceil(x_max / h_ode - 1e-9));
  const double h = x_max / static_cast<double>(steps);

  using State = std::array<double, 2>;
  auto rhs = [&](const State& s) -> State {
    return {s[1], second_derivative_from_ode(params, omega, s[0])};
  };

  HalfProfile out;
  out.x.reserve(steps + 1);
  out.psi.reserve(steps + 1);
  out.dpsi.reserve(steps + 1);
  State s{c0, -0.5 * params.Z * c0};
  out.x.push_back(0.0);
  out.psi.push_back(s[0]);
  out.dpsi.push_back(s[1]);
  for (std::size_t i = 1; i <= steps; ++i) {
    const State k1 = rhs(s);
    const State k2 = rhs({s[0] + 0.5 * h * k1[0], s[1] + 0.5 * h * k1[1]});
    const State k3 = rhs({s[0] + 0.5 * h * k2[0], s[1] + 0.5 * h * k2[1]});
    const State k4 = rhs({s[0] + h * k3[0], s[1] + h * k3[1]});
    s[0] += h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
    s[1] += h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
    if (!(s[0] > 0.0) || s[0] > 2.0 * c0) {
      std::ostringstream os;
      os << "shoot_ivp: trajectory left (0, 2 c0] at x = " << static_cast<double>(i) * h;
      throw NumericalError(os.str());
    }
    out.x.push_back(static_cast<double>(i) * h);
    out.psi.push_back(s[0]);
    out.dpsi.push_back(s[1]);
  }
  return out;
}

}  // namespace nlsdp

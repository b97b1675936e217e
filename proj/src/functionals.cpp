#include "nlsdp/functionals.hpp"

#include <limits>
#include <stdexcept>

#include "nlsdp/errors.hpp"

namespace nlsdp {

namespace {

void require_same_grid(const ComplexField& a, const ComplexField& b) {
  if (!(a.grid == b.grid)) throw std::invalid_argument("fields live on different grids");
}

}  // namespace

double lp_power(const ComplexField& v, double q) {
  if (!(q >= 1.0)) throw std::invalid_argument("L^q norm needs q >= 1");
  const Grid& g = v.grid;
  double sum = 0.0;
  for (std::size_t j = 0; j < v.size(); ++j) sum += g.weight(j) * abs_pow(std::norm(v[j]), q);
  return g.spacing() * sum;
}

double lp_norm(const ComplexField& v, double q) { return std::pow(lp_power(v, q), 1.0 / q); }

double charge(const ComplexField& v) { return lp_power(v, 2.0); }

double gradient_norm_sq(const ComplexField& v) {
  double sum = 0.0;
  for (std::size_t j = 0; j + 1 < v.size(); ++j) sum += std::norm(v[j + 1] - v[j]);
  return sum / v.grid.spacing();
}

ComplexField h1_deriv(const ComplexField& v) {
  const std::size_t n = v.size();
  const double h = v.grid.spacing();
  ComplexField d(v.grid);
  for (std::size_t j = 1; j + 1 < n; ++j) d[j] = (v[j + 1] - v[j - 1]) / (2.0 * h);
  d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
  d[n - 1] = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * h);
  return d;
}

double delta_form(const ComplexField& v, double Z) {
  return gradient_norm_sq(v) - Z * std::norm(v.at_origin());
}

double energy(const ComplexField& v, const ModelParams& params) {
  const double p = params.p;
  return 0.5 * delta_form(v, params.Z) - params.lambda1 / (p + 1.0) * lp_power(v, p + 1.0) -
         params.lambda2 / (2.0 * p) * lp_power(v, 2.0 * p);
}

double action_G(const ComplexField& v, const ModelParams& params, double omega) {
  return energy(v, params) - 0.5 * omega * charge(v);
}

double functional_R(const ComplexField& v, const ModelParams& params) {
  const double p = params.p;
  return 0.5 * delta_form(v, params.Z) - params.lambda2 / (2.0 * p) * lp_power(v, 2.0 * p);
}

double functional_Rtilde(const ComplexField& v, const ModelParams& params) {
  const double p = params.p;
  return 0.5 * delta_form(v, params.Z) - params.lambda1 / (p + 1.0) * lp_power(v, p + 1.0);
}

double functional_I(const ComplexField& v, double omega) {
  return 0.5 * gradient_norm_sq(v) - 0.5 * omega * charge(v);
}

double x_space_norm(const ComplexField& v, const ModelParams& params) {
  const double p = params.p;
  return std::sqrt(lp_power(v, p + 1.0) + lp_power(v, 2.0 * p) + gradient_norm_sq(v));
}

cplx h1_inner(const ComplexField& u, const ComplexField& v) {
  require_same_grid(u, v);
  const Grid& g = u.grid;
  const double h = g.spacing();
  cplx mass{0.0, 0.0};
  for (std::size_t j = 0; j < u.size(); ++j) mass += g.weight(j) * u[j] * std::conj(v[j]);
  cplx stiff{0.0, 0.0};
  for (std::size_t j = 0; j + 1 < u.size(); ++j) {
    stiff += (u[j + 1] - u[j]) * std::conj(v[j + 1] - v[j]);
  }
  return h * mass + stiff / h;
}

double h1_norm(const ComplexField& v) { return std::sqrt(charge(v) + gradient_norm_sq(v)); }

OrbitalDistance orbital_distance(const ComplexField& u, const ComplexField& phi) {
  require_same_grid(u, phi);
  const cplx pairing = h1_inner(u, phi);
  const double theta = std::abs(pairing) > 0.0 ? std::arg(pairing) : 0.0;
  const cplx rot = std::polar(1.0, theta);
  ComplexField diff(u.grid);
  for (std::size_t j = 0; j < u.size(); ++j) diff[j] = u[j] - rot * phi[j];
  return {h1_norm(diff), theta};
}

ComplexField delta_eigenfunction(double Z, const Grid& grid) {
  if (!(Z > 0.0)) throw RegimeError("the point interaction has a bound state only for Z > 0");
  const double amp = std::sqrt(Z / 2.0);
  return ComplexField::sample_real(grid, [&](double x) { return amp * std::exp(-0.5 * Z * std::abs(x)); });
}

namespace {

// Z |v(0)|^2 <= 1/2 ||v_x||^2 + c1 ||v||^2_{L^2(-1,1)}, from
// |v(0)|^2 <= 1/2 ||v||^2_{L^2(-1,1)} + 2 ||v||_{L^2(-1,1)} ||v_x||_{L^2(-1,1)}.
double point_constant(double Z) { return 0.5 * Z + 2.0 * Z * Z; }

}  // namespace

double coercivity_constant(const ModelParams& params) {
  require_valid(params);
  if (!(params.Z > 0.0) || !(params.lambda2 < 0.0)) {
    throw RegimeError("coercivity bound needs Z > 0 and lambda2 < 0");
  }
  const double p = params.p;
  const double c1 = point_constant(params.Z);
  const double delta = -params.lambda2 / (2.0 * p * c1);
  // ||v||^2_{L^2(-1,1)} <= delta ||v||_{2p}^{2p} + k
  const double k = 2.0 * (p - 1.0) / p * std::pow(delta * p, -1.0 / (p - 1.0));
  return c1 * k;
}

double coercivity_constant_tilde(const ModelParams& params) {
  require_valid(params);
  if (!(params.Z > 0.0) || !(params.lambda1 < 0.0)) {
    throw RegimeError("coercivity bound for Rtilde needs Z > 0 and lambda1 < 0");
  }
  const double p = params.p;
  const double c1 = point_constant(params.Z);
  const double delta = -params.lambda1 / ((p + 1.0) * c1);
  // ||v||^2_{L^2(-1,1)} <= delta ||v||_{p+1}^{p+1} + k
  const double k =
      2.0 * (p - 1.0) / (p + 1.0) * std::pow(delta * (p + 1.0) / 2.0, -2.0 / (p - 1.0));
  return c1 * k;
}

Diagnostics diagnose(const ComplexField& u, const ModelParams& params, double omega, double t,
                     const ComplexField* reference) {
  Diagnostics d;
  d.t = t;
  d.charge = charge(u);
  d.energy = energy(u, params);
  d.action = d.energy - 0.5 * omega * d.charge;
  d.orbital_dist = reference ? orbital_distance(u, *reference).distance
                             : std::numeric_limits<double>::quiet_NaN();
  return d;
}

}  // namespace nlsdp

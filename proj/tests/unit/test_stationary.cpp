#include "doctest.h"

#include <cmath>
#include <random>

#include "nlsdp/errors.hpp"
#include "nlsdp/profiles.hpp"
#include "nlsdp/stationary.hpp"
#include "support.hpp"

using namespace nlsdp;
using namespace nlsdp::testing;

namespace {

const ModelParams kCubicQuintic{3.0, 0.0, -1.0, 2.0};

double sup_gap(const HalfProfile& hp, const Profile& prof, double x_max) {
  double e = 0.0;
  for (std::size_t i = 0; i < hp.x.size() && hp.x[i] <= x_max + 1e-12; ++i) {
    e = std::max(e, std::abs(hp.psi[i] - prof(hp.x[i])));
  }
  return e;
}

}  // namespace

TEST_CASE("interior residual") {
  const Profile prof = Profile::standing_wave(figure_params(), kFigureOmega);
  const Grid g = Grid::with_spacing(20.0, 1e-3);
  const NodeValues r = interior_residual(prof, g);
  CHECK(r.max_abs <= 1e-6);
  for (double x : r.x) CHECK(std::abs(x) >= 2e-3 * (1 - 1e-9));

  const Profile eq = Profile::equilibrium(equilibrium_params());
  CHECK(interior_residual(eq, g).max_abs <= 1e-6);

  CHECK(interior_residual(prof, g, 1.01).max_abs > 1e-3);
}

TEST_CASE("jump residual") {
  const Profile prof = Profile::standing_wave(figure_params(), kFigureOmega);
  const Profile eq = Profile::equilibrium(equilibrium_params());
  CHECK(jump_residual(prof) <= 1e-11 * 2.0 * prof.peak());
  CHECK(jump_residual(eq) <= 1e-11 * 1.25 * eq.peak());

  const double Zp = 1.01 * 2.0;
  const double wrong = std::abs(prof.derivative(0.0, Side::Right) - prof.derivative(0.0, Side::Left) + Zp * prof.peak());
  CHECK(wrong == doctest::Approx(0.01 * 2.0 * prof.peak()).epsilon(1e-9));
}

TEST_CASE("first integral") {
  const Grid g = Grid::with_spacing(40.0, 0.01);
  for (const Profile& prof : {Profile::standing_wave(figure_params(), kFigureOmega),
                              Profile::equilibrium(equilibrium_params())}) {
    const NodeValues fi = first_integral_residual(prof, g);
    const double scale = prof.peak() * prof.peak();
    CHECK(fi.max_abs <= 1e-10 * scale);
    // |phi'|^2 = -omega phi^2 - 2 alpha phi^{p+1} - beta phi^{2p} >= 0.
    const double p = prof.params().p;
    for (std::size_t j = 0; j < g.size(); j += 97) {
      const double phi = prof(g.x(j));
      const double rhs = -prof.omega() * phi * phi - 2.0 * prof.alpha() * std::pow(phi, p + 1) -
                         prof.beta() * std::pow(phi, 2 * p);
      CHECK(rhs >= 0.0);
    }
  }
  const Profile prof = Profile::standing_wave(figure_params(), kFigureOmega);
  CHECK(std::abs(first_integral_residual(prof, Grid(400.0, 3)).value.back()) < 1e-100);
}

TEST_CASE("peak polynomial") {
  const ModelParams P = figure_params();
  CHECK(peak_polynomial(P, kFigureOmega, 1e-6) > 0.0);
  CHECK(peak_polynomial(P, kFigureOmega, 1e3) < 0.0);

  const double c0q = std::pow(3.0 * (1.0 - 0.25) / 1.0, 1.0 / 4.0);
  CHECK(c0q == doctest::Approx(std::pow(2.25, 0.25)).epsilon(1e-15));
  CHECK(std::abs(peak_polynomial(kCubicQuintic, -0.25, c0q)) <= 1e-12);
  CHECK(find_c0(kCubicQuintic, -0.25) == doctest::Approx(c0q).epsilon(1e-13));

  const double c0 = find_c0(P, kFigureOmega);
  CHECK(c0 == doctest::Approx(0.962834868045836).epsilon(1e-13));
  CHECK(c0 > peak_polynomial_critical_point(P, kFigureOmega));
  CHECK(std::abs(c0 - Profile::standing_wave(P, kFigureOmega).peak()) <= 1e-9);
  CHECK_THROWS_AS(find_c0(P, -0.1), RegimeError);
  CHECK_THROWS_AS(find_c0({3, -1, -1, 1}, 0.5), RegimeError);
}

TEST_CASE("peak root properties on random tuples") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 50; ++t) {
    const Tuple tp = random_admissible(rng);
    const ModelParams& P = tp.params;
    const double c0 = find_c0(P, tp.omega);
    const double a = peak_polynomial_critical_point(P, tp.omega);
    CHECK(c0 > a);
    CHECK(peak_polynomial(P, tp.omega, a) > 0.0);
    CHECK(std::abs(peak_polynomial_derivative(P, tp.omega, a)) <= 1e-12 * std::max(1.0, a));
    CHECK(std::abs(peak_polynomial(P, tp.omega, c0)) <= 1e-13 * std::max(1.0, c0 * c0));
    CHECK(peak_polynomial_derivative(P, tp.omega, c0) < 0.0);

    // P(c) = (Z^2/8) c^2 + F(c), and the value condition at the kink.
    for (double c : {0.3 * c0, c0, 1.7 * c0}) {
      const double lhs = peak_polynomial(P, tp.omega, c);
      const double rhs = 0.125 * P.Z * P.Z * c * c + primitive_F(P, tp.omega, c);
      CHECK(std::abs(lhs - rhs) <= 1e-13 * std::max(1.0, c * c));
    }
    const Profile prof = Profile::standing_wave(P, tp.omega);
    const double d0 = prof.derivative(0.0, Side::Right);
    CHECK(std::abs(0.5 * d0 * d0 + primitive_F(P, tp.omega, prof.peak())) <= 1e-10 * std::max(1.0, c0 * c0));
    CHECK(std::abs(d0) == doctest::Approx(std::abs(prof.derivative(0.0, Side::Left))).epsilon(1e-15));
  }
}

TEST_CASE("shooting oracle") {
  const Profile prof = Profile::standing_wave(figure_params(), kFigureOmega);
  const HalfProfile hp = shoot_ivp(figure_params(), kFigureOmega, 30.0, 1e-4);
  CHECK(hp.x.front() == 0.0);
  CHECK(hp.x.back() == doctest::Approx(30.0).epsilon(1e-14));
  CHECK(sup_gap(hp, prof, 10.0) <= 1e-8);
  // psi(30) is about 2e-7 for these parameters (phi ~ e^{-x/2}).
  CHECK(hp.psi.back() < 1e-6);
  // The growing mode e^{x/2} amplifies rounding in the start value, so only
  // an absolute bound holds this far out.
  CHECK(std::abs(hp.psi.back() - prof(30.0)) <= 1e-7);

  // Even extension: the one-sided slope from samples gives the jump.
  const double h = hp.x[1];
  const auto& s = hp.psi;
  const double d0 = (-25 * s[0] + 48 * s[1] - 36 * s[2] + 16 * s[3] - 3 * s[4]) / (12 * h);
  CHECK(std::abs(2.0 * d0 + 2.0 * s[0]) <= 1e-8);

  CHECK_THROWS_AS(shoot_ivp(figure_params(), -0.1, 10.0, 1e-3), RegimeError);
  CHECK_THROWS_AS(shoot_ivp(figure_params(), kFigureOmega, -1.0, 1e-3), std::invalid_argument);
}

TEST_CASE("shooting matches the closed form on random tuples") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 10; ++t) {
    const Tuple tp = random_admissible(rng);
    const Profile prof = Profile::standing_wave(tp.params, tp.omega);
    const HalfProfile hp = shoot_ivp(tp.params, tp.omega, 10.0, 1e-4);
    CHECK(sup_gap(hp, prof, 10.0) <= 1e-7);
  }
}

TEST_CASE("only the exact peak gives a decaying orbit") {
  // psi'' > 0 for psi > 0: below c0 the orbit crosses zero, above c0 it turns
  // back and grows without bound.
  const ModelParams P = figure_params();
  const double c0 = find_c0(P, kFigureOmega);
  enum class Fate { CrossesZero, Escapes, Decays };
  auto fate = [&](double c, double& tail) {
    auto f = [&](double u) { return second_derivative_from_ode(P, kFigureOmega, std::abs(u)) * (u < 0 ? -1 : 1); };
    double y = c, dy = -0.5 * P.Z * c;
    const double h = 1e-3;
    tail = 1e300;
    for (int i = 1; i <= 20000; ++i) {
      const double k1y = dy, k1d = f(y);
      const double k2y = dy + 0.5 * h * k1d, k2d = f(y + 0.5 * h * k1y);
      const double k3y = dy + 0.5 * h * k2d, k3d = f(y + 0.5 * h * k2y);
      const double k4y = dy + h * k3d, k4d = f(y + h * k3y);
      y += h / 6 * (k1y + 2 * k2y + 2 * k3y + k4y);
      dy += h / 6 * (k1d + 2 * k2d + 2 * k3d + k4d);
      if (y < 0.0) return Fate::CrossesZero;
      if (y > 2.0 * c) return Fate::Escapes;
      if (i >= 10000) tail = std::min(tail, y);
    }
    return Fate::Decays;
  };
  double tail = 0.0;
  for (double s : {0.9, 0.99}) CHECK(fate(s * c0, tail) == Fate::CrossesZero);
  for (double s : {1.01, 1.1}) CHECK(fate(s * c0, tail) == Fate::Escapes);
  CHECK(fate(c0, tail) == Fate::Decays);
  CHECK(tail > 0.0);
  CHECK(tail < 1e-3);
}

#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "nlsdp/functionals.hpp"
#include "nlsdp/profiles.hpp"
#include "nlsdp/stability.hpp"
#include "support.hpp"

using namespace nlsdp;
using namespace nlsdp::testing;

namespace {

StabilityConfig cheap() {
  StabilityConfig c;
  c.half_width = 20.0;
  c.h = 0.05;
  c.dt = 5e-3;
  c.horizon = 2.0;
  c.record_every = 4;
  return c;
}

}  // namespace

TEST_CASE("perturbation kinds") {
  CHECK(parse_perturbation_kind("bump") == PerturbationKind::Bump);
  CHECK(parse_perturbation_kind("phase-ramp") == PerturbationKind::PhaseRamp);
  CHECK(parse_perturbation_kind("noise") == PerturbationKind::Noise);
  CHECK_THROWS_AS(parse_perturbation_kind("Bump"), std::invalid_argument);
  for (auto k : {PerturbationKind::Bump, PerturbationKind::PhaseRamp, PerturbationKind::Noise}) {
    CHECK(parse_perturbation_kind(to_string(k)) == k);
  }
}

TEST_CASE("perturbation directions") {
  const Profile prof = Profile::standing_wave(figure_params(), kFigureOmega);
  const Grid g = cheap().grid();
  const ComplexField phi = reference_field(prof, g);
  for (auto k : {PerturbationKind::Bump, PerturbationKind::PhaseRamp, PerturbationKind::Noise}) {
    const ComplexField w = make_perturbation(phi, k, 9);
    CHECK(h1_norm(w) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(w.values.front() == cplx{});
    CHECK(w.values.back() == cplx{});
  }
  const ComplexField bump = make_perturbation(phi, PerturbationKind::Bump, 0);
  for (std::size_t j = 0; j < g.size(); ++j) {
    CHECK(bump[j] == bump[g.size() - 1 - j]);
    if (std::abs(g.x(j)) >= 3.0) CHECK(bump[j] == cplx{});
  }
  const ComplexField ramp = make_perturbation(phi, PerturbationKind::PhaseRamp, 0);
  CHECK(ramp[g.center() + 10] == -ramp[g.center() - 10]);
  CHECK(make_perturbation(phi, PerturbationKind::Noise, 1).values == make_perturbation(phi, PerturbationKind::Noise, 1).values);
  CHECK(make_perturbation(phi, PerturbationKind::Noise, 1).values != make_perturbation(phi, PerturbationKind::Noise, 2).values);
}

TEST_CASE("initial data") {
  const Profile prof = Profile::standing_wave(figure_params(), kFigureOmega);
  const ComplexField phi = reference_field(prof, cheap().grid());
  CHECK(perturbed_initial_data(phi, 0.0, PerturbationKind::Bump, 1).values.at(phi.grid.center()) == phi.at_origin());
  const ComplexField u = perturbed_initial_data(phi, 1e-2, PerturbationKind::Bump, 1);
  CHECK(h1_norm(u - phi) == doctest::Approx(1e-2).epsilon(1e-10));
  // The exact ramp preserves the modulus.
  const ComplexField r = perturbed_initial_data(phi, 0.3, PerturbationKind::PhaseRamp, 1);
  for (std::size_t j = 1; j + 1 < phi.size(); ++j) CHECK(std::abs(r[j]) == doctest::Approx(std::abs(phi[j])).epsilon(1e-14));
  CHECK_THROWS_AS(perturbed_initial_data(phi, -1.0, PerturbationKind::Bump, 1), std::invalid_argument);

  const ComplexField tapered = reference_field(prof, cheap().grid(), 5.0);
  CHECK(tapered.values.back() == cplx{});
  CHECK(tapered.at_origin() == phi.at_origin());
}

TEST_CASE("experiments") {
  const ModelParams P = figure_params();
  const StabilityConfig cfg = cheap();
  const StabilityReport floor = standing_wave_check(P, kFigureOmega, cfg);
  CHECK(floor.eps == 0.0);
  CHECK(floor.initial_dist <= 1e-15);
  CHECK(floor.max_orbital_dist < 1e-2);
  CHECK(floor.max_charge_drift <= 1e-11);
  CHECK(floor.horizon == cfg.horizon);

  const StabilityReport zero = perturbation_experiment(P, kFigureOmega, 0.0, PerturbationKind::Bump, 0, cfg);
  CHECK(zero.max_orbital_dist == floor.max_orbital_dist);

  const StabilityReport a = perturbation_experiment(P, kFigureOmega, 0.05, PerturbationKind::Noise, 4, cfg);
  const StabilityReport b = perturbation_experiment(P, kFigureOmega, 0.05, PerturbationKind::Noise, 4, cfg);
  CHECK(a.max_orbital_dist == b.max_orbital_dist);
  CHECK(a.initial_dist == doctest::Approx(0.05).epsilon(1e-10));
  CHECK(a.max_charge_drift <= 1e-11);
  CHECK(a.max_orbital_dist <= 5.0 * 0.05 + floor.max_orbital_dist);

  const StabilityReport ramp = perturbation_experiment(P, kFigureOmega, 0.05, PerturbationKind::PhaseRamp, 0, cfg);
  CHECK(ramp.max_orbital_dist <= 5.0 * ramp.initial_dist + floor.max_orbital_dist);
}

TEST_CASE("curve ordering, reproducibility and the epsilon-delta scan") {
  const ModelParams P = figure_params();
  const StabilityConfig cfg = cheap();
  const std::vector<double> eps{1e-3, 1e-2, 1e-1};
  const std::vector<PerturbationKind> kinds{PerturbationKind::Bump, PerturbationKind::PhaseRamp};
  const auto curve = stability_curve(P, kFigureOmega, eps, kinds, 3, cfg);
  REQUIRE(curve.size() == 6);
  CHECK(curve[0].kind == PerturbationKind::Bump);
  CHECK(curve[3].kind == PerturbationKind::PhaseRamp);
  for (std::size_t i = 0; i < 6; ++i) CHECK(curve[i].eps == eps[i % 3]);
  const double floor = standing_wave_check(P, kFigureOmega, cfg).max_orbital_dist;
  for (std::size_t k = 0; k < 2; ++k) {
    for (std::size_t i = 1; i < 3; ++i) {
      CHECK(curve[3 * k + i].max_orbital_dist + floor >= curve[3 * k + i - 1].max_orbital_dist);
    }
  }
  const auto again = stability_curve(P, kFigureOmega, eps, kinds, 3, cfg);
  for (std::size_t i = 0; i < 6; ++i) CHECK(again[i].max_orbital_dist == curve[i].max_orbital_dist);

  const auto d = epsilon_delta(curve, 0.1);
  REQUIRE(d);
  CHECK(*d >= 1e-2 * 0.99);
  CHECK_FALSE(epsilon_delta(curve, 0.0));

  std::vector<StabilityReport> synthetic(3);
  synthetic[0].initial_dist = 0.01;
  synthetic[0].max_orbital_dist = 0.02;
  synthetic[1].initial_dist = 0.05;
  synthetic[1].max_orbital_dist = 0.2;
  synthetic[2].initial_dist = 0.03;
  synthetic[2].max_orbital_dist = 0.04;
  CHECK(*epsilon_delta(synthetic, 0.1) == 0.03);
  CHECK(*epsilon_delta(synthetic, 0.03) == 0.01);
}

TEST_CASE("equilibrium experiment") {
  StabilityConfig cfg = cheap();
  cfg.half_width = 100.0;
  cfg.h = 0.1;
  cfg.dt = 1e-2;
  cfg.boundary_taper = 20.0;
  const StabilityReport r = perturbation_experiment(equilibrium_params(), 0.0, 1e-2, PerturbationKind::Bump, 0, cfg);
  CHECK(r.max_charge_drift <= 1e-11);
  CHECK(std::isfinite(r.max_orbital_dist));
  CHECK(r.max_orbital_dist <= 5.0 * 1e-2 + standing_wave_check(equilibrium_params(), 0.0, cfg).max_orbital_dist);
}

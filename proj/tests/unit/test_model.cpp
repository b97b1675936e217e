#include "doctest.h"

#include <random>
#include <stdexcept>

#include "nlsdp/errors.hpp"
#include "nlsdp/model.hpp"
#include "support.hpp"

using namespace nlsdp;
using nlsdp::testing::figure_params;

namespace {

RegimeTag tag(const ModelParams& p, double w) { return classify_regime(p, w).tag; }

bool is_empty(RegimeTag t) { return t != RegimeTag::StandingWaveExists && t != RegimeTag::EquilibriumExists; }

}  // namespace

TEST_CASE("figure tuples") {
  CHECK(tag(figure_params(), -0.25) == RegimeTag::StandingWaveExists);
  CHECK(tag(figure_params(), -2.0) == RegimeTag::EmptyOmegaPlusZSquaredOver4Nonpositive);
  CHECK(tag({3, -1, -1, 1}, 0.5) == RegimeTag::EmptyOmegaPositive);
  CHECK(tag({3, -1, -1, 1.25}, 0.0) == RegimeTag::EquilibriumExists);
  CHECK(classify_regime(figure_params(), -0.25).exists());
  CHECK_FALSE(classify_regime(figure_params(), 0.5).detail.empty());
}

TEST_CASE("threshold and admissible interval") {
  CHECK(frequency_threshold(figure_params()) == doctest::Approx(3.0 / 16.0).epsilon(1e-15));

  auto iv = admissible_omega_interval(figure_params());
  REQUIRE(iv);
  CHECK(iv->first == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(iv->second == doctest::Approx(-3.0 / 16.0).epsilon(1e-15));

  auto cubic = admissible_omega_interval({3, 0, -1, 2});
  REQUIRE(cubic);
  CHECK(cubic->first == -1.0);
  CHECK(cubic->second == 0.0);

  CHECK_FALSE(admissible_omega_interval({3, -1, -1, 0.5}));
  CHECK_FALSE(admissible_omega_interval({3, -1, -1, -1}));
  CHECK_FALSE(admissible_omega_interval({3, -1, 1, 2}));
}

TEST_CASE("p <= 1 is a domain error") {
  CHECK_THROWS_AS(classify_regime({1.0, -1, -1, 2}, -0.25), RegimeError);
  CHECK_THROWS_AS(classify_regime({0.5, -1, -1, 2}, -0.25), std::domain_error);
  CHECK_THROWS_AS(admissible_omega_interval({1.0, -1, -1, 2}), RegimeError);
}

TEST_CASE("precedence among empty cases") {
  // omega > 0 wins over Z <= 0.
  CHECK(tag({3, -1, -1, -1}, 0.5) == RegimeTag::EmptyOmegaPositive);
  // Z <= 0 wins over omega + Z^2/4 <= 0.
  CHECK(tag({3, -1, -1, 0}, -1.0) == RegimeTag::EmptyZNonpositive);
  CHECK(tag({3, -1, -1, -2}, -0.25) == RegimeTag::EmptyZNonpositive);
  // omega = 0 with p >= 5.
  CHECK(tag({5, -1, -1, 1}, 0.0) == RegimeTag::EmptyNotSquareIntegrable);
  CHECK(tag({7, -1, -1, 1}, 0.0) == RegimeTag::EmptyNotSquareIntegrable);
  CHECK(tag({7, -1, -1, 0}, 0.0) == RegimeTag::EmptyZNonpositive);
  // Everything else.
  CHECK(tag({3, -1, -1, 2}, -0.1) == RegimeTag::EmptyOmegaBelowThreshold);
  CHECK(tag({3, 1, -1, 2}, -0.5) == RegimeTag::EmptyOmegaBelowThreshold);
  CHECK(tag({3, -1, 1, 2}, -0.5) == RegimeTag::EmptyOmegaBelowThreshold);
  CHECK(tag({3, 0, -1, 2}, 0.0) == RegimeTag::EmptyOmegaBelowThreshold);
}

TEST_CASE("interval endpoints are excluded") {
  const ModelParams P = figure_params();
  CHECK(tag(P, -1.0) == RegimeTag::EmptyOmegaPlusZSquaredOver4Nonpositive);
  CHECK(tag(P, -3.0 / 16.0) == RegimeTag::EmptyOmegaBelowThreshold);
  CHECK(tag(P, std::nextafter(-1.0, 0.0)) == RegimeTag::StandingWaveExists);
  CHECK(tag(P, std::nextafter(-3.0 / 16.0, -1.0)) == RegimeTag::StandingWaveExists);
}

TEST_CASE("omega sweep agrees with the admissible interval") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> up(1.2, 6.0), ul1(-2.0, 0.0), ul2(-2.0, -0.05), uz(0.1, 3.0);
  for (int i = 0; i < 200; ++i) {
    const ModelParams P{up(rng), ul1(rng), ul2(rng), uz(rng)};
    const auto iv = admissible_omega_interval(P);
    for (int k = 0; k <= 100; ++k) {
      const double w = -0.3 * P.Z * P.Z * k / 100.0 - 1e-9;
      const bool inside = iv && w > iv->first && w < iv->second;
      CHECK(classify_regime(P, w).exists() == inside);
      if (!inside) CHECK(is_empty(tag(P, w)));
    }
  }
}

TEST_CASE("classification is a pure function") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 500; ++i) {
    const ModelParams P{1.0 + std::abs(u(rng)) + 1e-3, u(rng), u(rng), u(rng)};
    const double w = u(rng);
    const RegimeVerdict a = classify_regime(P, w);
    const RegimeVerdict b = classify_regime(P, w);
    CHECK(a.tag == b.tag);
    CHECK(a.detail == b.detail);
  }
}

TEST_CASE("tag names") {
  CHECK(to_string(RegimeTag::EmptyOmegaPositive) == "EmptyOmegaPositive");
  CHECK(to_string(RegimeTag::EmptyOmegaPlusZSquaredOver4Nonpositive) == "EmptyOmegaPlusZSquaredOver4Nonpositive");
}

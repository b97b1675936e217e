#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "nlsdp/grid.hpp"
#include "nlsdp/model.hpp"

namespace nlsdp::testing {

// Parameters of the figure examples: standing wave and equilibrium.
inline ModelParams figure_params() { return {3.0, -1.0, -1.0, 2.0}; }
constexpr double kFigureOmega = -0.25;
inline ModelParams equilibrium_params() { return {3.0, -1.0, -1.0, 1.25}; }

struct Tuple {
  ModelParams params;
  double omega;
};

// Random tuple strictly inside the standing-wave region, away from both ends
// of the admissible frequency interval.
inline Tuple random_admissible(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> up(1.5, 5.0), ul1(-2.0, 0.0), ul2(-2.0, -0.2), uz(0.5, 3.0), u01(0.1, 0.9);
  for (;;) {
    ModelParams P{up(rng), ul1(rng), ul2(rng), uz(rng)};
    const double lo = -P.p * P.lambda1 * P.lambda1 / ((P.p + 1) * (P.p + 1) * P.lambda2);
    const double hi = 0.25 * P.Z * P.Z;
    if (lo > 0.8 * hi) continue;
    const double s = u01(rng);
    return {P, -(lo + s * (hi - lo))};
  }
}

inline double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace nlsdp::testing

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace nlsdp {

/// Static coefficients of
///   i u_t + u_xx + Z delta(x) u + lambda1 |u|^{p-1} u + lambda2 |u|^{2p-2} u = 0.
struct ModelParams {
  double p = 3.0;
  double lambda1 = -1.0;
  double lambda2 = -1.0;
  double Z = 2.0;
};

enum class RegimeTag {
  StandingWaveExists,
  EquilibriumExists,
  EmptyOmegaPlusZSquaredOver4Nonpositive,
  EmptyOmegaPositive,
  EmptyZNonpositive,
  EmptyOmegaBelowThreshold,
  EmptyNotSquareIntegrable,
};

struct RegimeVerdict {
  RegimeTag tag;
  std::string detail;

  bool exists() const {
    return tag == RegimeTag::StandingWaveExists || tag == RegimeTag::EquilibriumExists;
  }
};

std::string_view to_string(RegimeTag tag);

/// Throws RegimeError when p <= 1.
void require_valid(const ModelParams& params);

/// -p lambda1^2 / ((p+1)^2 lambda2): lower bound on -omega for standing waves.
/// Requires lambda2 < 0.
double frequency_threshold(const ModelParams& params);

/// Classifies (params, omega) into existence or one of the nonexistence cases.
/// Precedence among overlapping empty cases: omega > 0, then Z <= 0, then
/// omega + Z^2/4 <= 0, then (omega == 0, p >= 5), then everything else.
RegimeVerdict classify_regime(const ModelParams& params, double omega);

/// Open interval of admissible omega, (-Z^2/4, p lambda1^2/((p+1)^2 lambda2)).
/// Empty when the sign conditions fail or the interval is degenerate.
std::optional<std::pair<double, double>> admissible_omega_interval(const ModelParams& params);

}  // namespace nlsdp

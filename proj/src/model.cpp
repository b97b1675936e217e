#include "nlsdp/model.hpp"

#include <cmath>
#include <sstream>

#include "nlsdp/errors.hpp"

namespace nlsdp {

std::string_view to_string(RegimeTag tag) {
  switch (tag) {
    case RegimeTag::StandingWaveExists: return "StandingWaveExists";
    case RegimeTag::EquilibriumExists: return "EquilibriumExists";
    case RegimeTag::EmptyOmegaPlusZSquaredOver4Nonpositive:
      return "EmptyOmegaPlusZSquaredOver4Nonpositive";
    case RegimeTag::EmptyOmegaPositive: return "EmptyOmegaPositive";
    case RegimeTag::EmptyZNonpositive: return "EmptyZNonpositive";
    case RegimeTag::EmptyOmegaBelowThreshold: return "EmptyOmegaBelowThreshold";
    case RegimeTag::EmptyNotSquareIntegrable: return "EmptyNotSquareIntegrable";
  }
  return "Unknown";
}

void require_valid(const ModelParams& params) {
  if (!(params.p > 1.0) || !std::isfinite(params.p)) {
    std::ostringstream os;
    os << "exponent p must satisfy p > 1 (got " << params.p << ")";
    throw RegimeError(os.str());
  }
  if (!std::isfinite(params.lambda1) || !std::isfinite(params.lambda2) ||
      !std::isfinite(params.Z)) {
    throw RegimeError("model coefficients must be finite");
  }
}

double frequency_threshold(const ModelParams& params) {
  if (!(params.lambda2 < 0.0)) throw RegimeError("frequency threshold needs lambda2 < 0");
  const double p = params.p;
  return -p * params.lambda1 * params.lambda1 / ((p + 1.0) * (p + 1.0) * params.lambda2);
}

namespace {

RegimeVerdict verdict(RegimeTag tag, const std::string& detail) { return {tag, detail}; }

}  // namespace

RegimeVerdict classify_regime(const ModelParams& params, double omega) {
  require_valid(params);
  if (!std::isfinite(omega)) throw RegimeError("omega must be finite");

  const double Z = params.Z;
  const double zz4 = Z * Z / 4.0;

  if (omega > 0.0) {
    return verdict(RegimeTag::EmptyOmegaPositive,
                   "omega > 0: no nontrivial H^1 solution of the stationary equation");
  }
  if (Z <= 0.0) {
    return verdict(RegimeTag::EmptyZNonpositive,
                   "Z <= 0: no attractive point interaction to trap a profile");
  }
  if (omega + zz4 <= 0.0) {
    return verdict(RegimeTag::EmptyOmegaPlusZSquaredOver4Nonpositive,
                   "omega + Z^2/4 <= 0: frequency at or below the bound state -Z^2/4");
  }

  const bool repulsive = params.lambda1 <= 0.0 && params.lambda2 < 0.0;

  if (omega == 0.0) {
    if (params.p >= 5.0) {
      return verdict(RegimeTag::EmptyNotSquareIntegrable,
                     "omega = 0 with p >= 5: the rational profile is not in L^2");
    }
    if (params.lambda1 < 0.0 && params.lambda2 < 0.0) {
      return verdict(RegimeTag::EquilibriumExists, "omega = 0, Z > 0, lambda1 < 0, lambda2 < 0, 1 < p < 5");
    }
    return verdict(RegimeTag::EmptyOmegaBelowThreshold,
                   "omega = 0 requires lambda1 < 0 and lambda2 < 0");
  }

  // omega < 0 from here on.
  if (!repulsive) {
    return verdict(RegimeTag::EmptyOmegaBelowThreshold,
                   "standing waves require lambda1 <= 0 and lambda2 < 0");
  }
  const double threshold = frequency_threshold(params);
  if (-omega <= threshold) {
    std::ostringstream os;
    os << "-omega = " << -omega << " does not exceed -p lambda1^2/((p+1)^2 lambda2) = "
       << threshold;
    return verdict(RegimeTag::EmptyOmegaBelowThreshold, os.str());
  }
  std::ostringstream os;
  os << threshold << " < -omega = " << -omega << " < Z^2/4 = " << zz4;
  return verdict(RegimeTag::StandingWaveExists, os.str());
}

std::optional<std::pair<double, double>> admissible_omega_interval(const ModelParams& params) {
  require_valid(params);
  if (!(params.Z > 0.0) || params.lambda1 > 0.0 || !(params.lambda2 < 0.0)) return std::nullopt;
  const double threshold = frequency_threshold(params);
  const double zz4 = params.Z * params.Z / 4.0;
  if (threshold >= zz4) return std::nullopt;
  return std::make_pair(-zz4, -threshold);
}

}  // namespace nlsdp

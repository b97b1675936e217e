#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nlsdp/grid.hpp"
#include "nlsdp/model.hpp"
#include "nlsdp/profiles.hpp"

namespace nlsdp {

enum class PerturbationKind { Bump, PhaseRamp, Noise };

std::string_view to_string(PerturbationKind kind);
/// Accepts "bump", "phase-ramp" and "noise"; throws std::invalid_argument otherwise.
PerturbationKind parse_perturbation_kind(std::string_view name);

struct StabilityConfig {
  double half_width = 40.0;
  double h = 0.01;
  double dt = 1e-3;
  double horizon = 10.0;
  std::size_t record_every = 10;
  /// Width of a smooth cutoff applied to the reference near x = +-L so that
  /// it vanishes at the Dirichlet boundary. 0 samples the profile unchanged.
  double boundary_taper = 0.0;

  Grid grid() const { return Grid::with_spacing(half_width, h); }
};

struct StabilityReport {
  double eps = 0.0;
  /// Max over recorded times of the orbital distance to the reference.
  double max_orbital_dist = 0.0;
  double horizon = 0.0;
  PerturbationKind kind = PerturbationKind::Bump;
  std::uint64_t seed = 0;
  /// ||u0 - phi||_{H^1}.
  double initial_dist = 0.0;
  /// Max relative charge deviation over the run.
  double max_charge_drift = 0.0;
};

/// Samples the profile with zero end nodes; an optional smooth cutoff of width
/// `taper` brings it to zero near x = +-L.
ComplexField reference_field(const Profile& profile, const Grid& grid, double taper = 0.0);

/// Unit-H^1 direction w for Bump (even compact C-infinity bump of radius 3),
/// PhaseRamp (i x phi, the tangent of e^{i eps x} phi) or Noise (seeded
/// complex white noise, Gaussian-smoothed and windowed).
ComplexField make_perturbation(const ComplexField& phi, PerturbationKind kind, std::uint64_t seed);

/// Initial data of a perturbation experiment: phi + eps w, except for the
/// phase ramp, which uses e^{i eps x} phi exactly.
ComplexField perturbed_initial_data(const ComplexField& phi, double eps, PerturbationKind kind,
                                    std::uint64_t seed);

/// Evolves the unperturbed reference; the result is the scheme floor.
StabilityReport standing_wave_check(const ModelParams& params, double omega, const StabilityConfig& config);

StabilityReport perturbation_experiment(const ModelParams& params, double omega, double eps,
                                        PerturbationKind kind, std::uint64_t seed,
                                        const StabilityConfig& config);

/// One report per (kind, eps), ordered kind-major. Runs concurrently.
std::vector<StabilityReport> stability_curve(const ModelParams& params, double omega,
                                             const std::vector<double>& eps_list,
                                             const std::vector<PerturbationKind>& kinds,
                                             std::uint64_t seed, const StabilityConfig& config);

/// Largest tested initial distance delta such that every report with
/// initial_dist <= delta stayed below `target`. Empty if none qualifies.
std::optional<double> epsilon_delta(const std::vector<StabilityReport>& reports, double target);

}  // namespace nlsdp

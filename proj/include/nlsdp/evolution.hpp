#pragma once

#include <cstddef>
#include <vector>

#include "nlsdp/functionals.hpp"
#include "nlsdp/grid.hpp"
#include "nlsdp/model.hpp"
#include "nlsdp/profiles.hpp"
#include "nlsdp/tridiagonal.hpp"

namespace nlsdp {

struct EvolutionConfig {
  Grid grid;
  double dt = 1e-3;
  double t_final = 10.0;
  /// Diagnostics every `record_every` steps (and at the final step).
  std::size_t record_every = 10;
  /// Snapshots every `snapshot_every` steps; 0 keeps only the initial and final states.
  std::size_t snapshot_every = 0;
  /// Frequency used for the action diagnostic when no reference profile is given.
  double omega = 0.0;

  /// Throws std::invalid_argument unless dt > 0, t_final >= 0, record_every >= 1.
  void validate() const;
};

struct Snapshot {
  double t;
  ComplexField u;
};

struct Trajectory {
  std::vector<Snapshot> snapshots;
  std::vector<Diagnostics> diagnostics;
  /// Effective step (t_final divided by the number of steps).
  double dt = 0.0;
};

/// Discrete A_Z on the interior nodes (homogeneous Dirichlet at x = +-L):
/// off-diagonal -1/h^2, diagonal 2/h^2, and the node x = 0 lowered by Z/h.
SymTridiagonal linear_half_generator(const Grid& grid, double Z);

/// Exact flow of i u_t = -(lambda1 |u|^{p-1} + lambda2 |u|^{2p-2}) u over
/// time tau: a pointwise phase rotation, |u| unchanged.
void nonlinear_substep(std::vector<cplx>& u, const ModelParams& params, double tau);

/// Strang splitting: exact nonlinear phase rotation for dt/2, Crank-Nicolson
/// for the linear flow over dt, nonlinear rotation for dt/2. The boundary
/// nodes are held at zero. A negative dt runs the scheme backward.
class StrangStepper {
public:
  StrangStepper(const Grid& grid, const ModelParams& params, double dt);

  void step(std::vector<cplx>& u) const;
  double dt() const { return dt_; }

private:
  Grid grid_;
  ModelParams params_;
  double dt_;
  SymTridiagonal generator_;
  TridiagonalLU implicit_;
  mutable std::vector<cplx> work_;
};

/// One Strang step of size dt (may be negative).
ComplexField step_strang(const ComplexField& u, double dt, const ModelParams& params);

/// Runs StrangStepper to t_final. Diagnostics include the orbital distance to
/// `reference` (sampled on the grid, end nodes zeroed) when one is given; the action uses the
/// reference's omega, otherwise config.omega. Throws NumericalError on NaN.
Trajectory evolve(const ComplexField& u0, const EvolutionConfig& config, const ModelParams& params,
                  const Profile* reference = nullptr);

/// Same, with an explicit reference field for the orbital distance; the
/// action uses config.omega.
Trajectory evolve(const ComplexField& u0, const EvolutionConfig& config, const ModelParams& params,
                  const ComplexField& reference);

}  // namespace nlsdp

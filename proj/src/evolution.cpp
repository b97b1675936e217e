#include "nlsdp/evolution.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "nlsdp/errors.hpp"

namespace nlsdp {

void EvolutionConfig::validate() const {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (!(t_final >= 0.0)) throw std::invalid_argument("t_final must be nonnegative");
  if (record_every < 1) throw std::invalid_argument("record_every must be at least 1");
}

SymTridiagonal linear_half_generator(const Grid& grid, double Z) {
  const std::size_t m = grid.size() - 2;
  const double h = grid.spacing();
  SymTridiagonal H;
  H.diag.assign(m, 2.0 / (h * h));
  H.off.assign(m - 1, -1.0 / (h * h));
  H.diag[grid.center() - 1] -= Z / h;
  return H;
}

namespace {

TridiagonalLU crank_nicolson_lhs(const SymTridiagonal& H, double dt) {
  const cplx itau{0.0, 0.5 * dt};
  std::vector<cplx> lower(H.off.size()), diag(H.diag.size()), upper(H.off.size());
  for (std::size_t i = 0; i < H.diag.size(); ++i) diag[i] = 1.0 + itau * H.diag[i];
  for (std::size_t i = 0; i < H.off.size(); ++i) lower[i] = upper[i] = itau * H.off[i];
  return TridiagonalLU(std::move(lower), std::move(diag), std::move(upper));
}

}  // namespace

StrangStepper::StrangStepper(const Grid& grid, const ModelParams& params, double dt)
    : grid_(grid),
      params_(params),
      dt_(dt),
      generator_(linear_half_generator(grid, params.Z)),
      implicit_(crank_nicolson_lhs(generator_, dt)),
      work_(grid.size() - 2) {
  require_valid(params);
}

void nonlinear_substep(std::vector<cplx>& u, const ModelParams& params, double tau) {
  const double q1 = params.p - 1.0;
  const double q2 = 2.0 * params.p - 2.0;
  for (auto& z : u) {
    const double r = std::norm(z);
    const double theta = (params.lambda1 * abs_pow(r, q1) + params.lambda2 * abs_pow(r, q2)) * tau;
    z *= cplx{std::cos(theta), std::sin(theta)};
  }
}

void StrangStepper::step(std::vector<cplx>& u) const {
  const std::size_t n = u.size();
  if (n != grid_.size()) throw std::invalid_argument("state size does not match the stepper grid");
  u.front() = 0.0;
  u.back() = 0.0;
  nonlinear_substep(u, params_, 0.5 * dt_);

  // (I + i dt/2 H) u+ = (I - i dt/2 H) u on the interior nodes 1..n-2.
  const cplx itau{0.0, 0.5 * dt_};
  const std::size_t m = n - 2;
  for (std::size_t i = 0; i < m; ++i) {
    cplx Hu = generator_.diag[i] * u[i + 1];
    if (i > 0) Hu += generator_.off[i - 1] * u[i];
    if (i + 1 < m) Hu += generator_.off[i] * u[i + 2];
    work_[i] = u[i + 1] - itau * Hu;
  }
  implicit_.solve(work_.data());
  for (std::size_t i = 0; i < m; ++i) u[i + 1] = work_[i];

  nonlinear_substep(u, params_, 0.5 * dt_);
}

ComplexField step_strang(const ComplexField& u, double dt, const ModelParams& params) {
  StrangStepper stepper(u.grid, params, dt);
  ComplexField out = u;
  stepper.step(out.values);
  return out;
}

namespace {

Trajectory run(const ComplexField& u0, const EvolutionConfig& config, const ModelParams& params,
               double omega, const ComplexField* ref) {
  config.validate();
  if (!(u0.grid == config.grid)) throw std::invalid_argument("initial data is not on the configured grid");
  if (!u0.all_finite()) throw NumericalError("initial data has non-finite entries");
  if (ref && !(ref->grid == config.grid)) throw std::invalid_argument("reference is not on the configured grid");

  const auto steps = static_cast<std::size_t>(std::max(0.0, std::ceil(config.t_final / config.dt - 1e-9)));
  const double dt = steps > 0 ? config.t_final / static_cast<double>(steps) : config.dt;

  Trajectory traj;
  traj.dt = dt;
  traj.snapshots.push_back({0.0, u0});
  traj.diagnostics.push_back(diagnose(u0, params, omega, 0.0, ref));

  StrangStepper stepper(config.grid, params, dt);
  ComplexField u = u0;
  for (std::size_t k = 1; k <= steps; ++k) {
    stepper.step(u.values);
    const double t = static_cast<double>(k) * dt;
    const bool last = k == steps;
    if (k % config.record_every == 0 || last) {
      if (!u.all_finite()) {
        std::ostringstream os;
        os << "evolution produced non-finite values at t = " << t;
        throw NumericalError(os.str());
      }
      traj.diagnostics.push_back(diagnose(u, params, omega, t, ref));
    }
    if (last || (config.snapshot_every > 0 && k % config.snapshot_every == 0)) {
      traj.snapshots.push_back({t, u});
    }
  }
  return traj;
}

}  // namespace

Trajectory evolve(const ComplexField& u0, const EvolutionConfig& config, const ModelParams& params,
                  const Profile* reference) {
  if (!reference) return run(u0, config, params, config.omega, nullptr);
  ComplexField ref = ComplexField::sample_real(config.grid, [&](double x) { return reference->eval(x); });
  ref.values.front() = ref.values.back() = 0.0;
  return run(u0, config, params, reference->omega(), &ref);
}

Trajectory evolve(const ComplexField& u0, const EvolutionConfig& config, const ModelParams& params,
                  const ComplexField& reference) {
  return run(u0, config, params, config.omega, &reference);
}

}  // namespace nlsdp

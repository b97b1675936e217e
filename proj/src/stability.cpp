#include "nlsdp/stability.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <stdexcept>

#include "nlsdp/evolution.hpp"
#include "nlsdp/functionals.hpp"

namespace nlsdp {

std::string_view to_string(PerturbationKind kind) {
  switch (kind) {
    case PerturbationKind::Bump: return "bump";
    case PerturbationKind::PhaseRamp: return "phase-ramp";
    case PerturbationKind::Noise: return "noise";
  }
  return "?";
}

PerturbationKind parse_perturbation_kind(std::string_view name) {
  if (name == "bump") return PerturbationKind::Bump;
  if (name == "phase-ramp") return PerturbationKind::PhaseRamp;
  if (name == "noise") return PerturbationKind::Noise;
  throw std::invalid_argument("unknown perturbation kind '" + std::string(name) + "'");
}

namespace {

// exp(-1/s) / (exp(-1/s) + exp(-1/(1-s))): 0 for s <= 0, 1 for s >= 1, smooth.
double smooth_step(double s) {
  if (s <= 0.0) return 0.0;
  if (s >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / s);
  const double b = std::exp(-1.0 / (1.0 - s));
  return a / (a + b);
}

void normalize_h1(ComplexField& w) {
  w.values.front() = 0.0;
  w.values.back() = 0.0;
  const double n = h1_norm(w);
  if (!(n > 0.0)) throw std::invalid_argument("perturbation direction vanishes on this grid");
  w *= 1.0 / n;
}

ComplexField smoothed_noise(const Grid& grid, std::uint64_t seed) {
  constexpr double kSmoothing = 0.5;
  constexpr double kWindow = 5.0;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  const std::size_t n = grid.size();
  std::vector<cplx> raw(n);
  for (auto& z : raw) {
    const double re = normal(rng);
    const double im = normal(rng);
    z = {re, im};
  }

  const double h = grid.spacing();
  const auto reach = static_cast<std::ptrdiff_t>(std::ceil(4.0 * kSmoothing / h));
  std::vector<double> kernel(static_cast<std::size_t>(2 * reach + 1));
  for (std::ptrdiff_t k = -reach; k <= reach; ++k) {
    const double s = static_cast<double>(k) * h / kSmoothing;
    kernel[static_cast<std::size_t>(k + reach)] = std::exp(-0.5 * s * s);
  }

  ComplexField w(grid);
  for (std::size_t j = 0; j < n; ++j) {
    cplx acc{};
    const auto jj = static_cast<std::ptrdiff_t>(j);
    const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, jj - reach);
    const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(n) - 1, jj + reach);
    for (std::ptrdiff_t i = lo; i <= hi; ++i) acc += kernel[static_cast<std::size_t>(i - jj + reach)] * raw[i];
    const double s = grid.x(j) / kWindow;
    w[j] = acc * std::exp(-0.5 * s * s);
  }
  return w;
}

}  // namespace

ComplexField reference_field(const Profile& profile, const Grid& grid, double taper) {
  const double L = grid.half_width();
  ComplexField f = ComplexField::sample_real(grid, [&](double x) {
    const double cut = taper > 0.0 ? smooth_step((L - std::abs(x)) / taper) : 1.0;
    return cut * profile.eval(x);
  });
  // Dirichlet nodes, as in the evolution.
  f.values.front() = f.values.back() = 0.0;
  return f;
}

ComplexField make_perturbation(const ComplexField& phi, PerturbationKind kind, std::uint64_t seed) {
  const Grid& grid = phi.grid;
  ComplexField w(grid);
  switch (kind) {
    case PerturbationKind::Bump: {
      constexpr double radius = 3.0;
      w = ComplexField::sample_real(grid, [](double x) {
        const double s = x / radius;
        return std::abs(s) < 1.0 ? std::exp(-1.0 / (1.0 - s * s)) : 0.0;
      });
      break;
    }
    case PerturbationKind::PhaseRamp:
      for (std::size_t j = 0; j < grid.size(); ++j) w[j] = cplx{0.0, grid.x(j)} * phi[j];
      break;
    case PerturbationKind::Noise:
      w = smoothed_noise(grid, seed);
      break;
  }
  normalize_h1(w);
  return w;
}

ComplexField perturbed_initial_data(const ComplexField& phi, double eps, PerturbationKind kind,
                                    std::uint64_t seed) {
  if (!(eps >= 0.0)) throw std::invalid_argument("perturbation amplitude must be nonnegative");
  ComplexField u0 = phi;
  if (kind == PerturbationKind::PhaseRamp) {
    for (std::size_t j = 0; j < u0.size(); ++j) u0[j] *= std::polar(1.0, eps * phi.grid.x(j));
  } else if (eps > 0.0) {
    const ComplexField w = make_perturbation(phi, kind, seed);
    for (std::size_t j = 0; j < u0.size(); ++j) u0[j] += eps * w[j];
  }
  u0.values.front() = 0.0;
  u0.values.back() = 0.0;
  return u0;
}

StabilityReport perturbation_experiment(const ModelParams& params, double omega, double eps,
                                        PerturbationKind kind, std::uint64_t seed,
                                        const StabilityConfig& config) {
  const Profile profile = Profile::make(params, omega);
  const Grid grid = config.grid();
  const ComplexField phi = reference_field(profile, grid, config.boundary_taper);
  const ComplexField u0 = perturbed_initial_data(phi, eps, kind, seed);

  EvolutionConfig ec{grid};
  ec.dt = config.dt;
  ec.t_final = config.horizon;
  ec.record_every = config.record_every;
  ec.omega = omega;
  const Trajectory traj = evolve(u0, ec, params, phi);

  StabilityReport rep;
  rep.eps = eps;
  rep.horizon = config.horizon;
  rep.kind = kind;
  rep.seed = seed;
  rep.initial_dist = h1_norm(u0 - phi);
  const double q0 = traj.diagnostics.front().charge;
  for (const auto& d : traj.diagnostics) {
    rep.max_orbital_dist = std::max(rep.max_orbital_dist, d.orbital_dist);
    rep.max_charge_drift = std::max(rep.max_charge_drift, std::abs(d.charge - q0) / q0);
  }
  return rep;
}

StabilityReport standing_wave_check(const ModelParams& params, double omega, const StabilityConfig& config) {
  return perturbation_experiment(params, omega, 0.0, PerturbationKind::Bump, 0, config);
}

std::vector<StabilityReport> stability_curve(const ModelParams& params, double omega,
                                             const std::vector<double>& eps_list,
                                             const std::vector<PerturbationKind>& kinds,
                                             std::uint64_t seed, const StabilityConfig& config) {
  std::vector<std::future<StabilityReport>> jobs;
  for (PerturbationKind kind : kinds) {
    for (double eps : eps_list) {
      jobs.push_back(std::async(std::launch::async, [=, &params, &config] {
        return perturbation_experiment(params, omega, eps, kind, seed, config);
      }));
    }
  }
  std::vector<StabilityReport> out;
  out.reserve(jobs.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

std::optional<double> epsilon_delta(const std::vector<StabilityReport>& reports, double target) {
  std::vector<const StabilityReport*> sorted;
  for (const auto& r : reports) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(),
            [](const StabilityReport* a, const StabilityReport* b) { return a->initial_dist < b->initial_dist; });
  std::optional<double> best;
  for (const StabilityReport* r : sorted) {
    if (!(r->max_orbital_dist < target)) break;
    best = r->initial_dist;
  }
  return best;
}

}  // namespace nlsdp

#include "nlsdp/minimize.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <random>

#include "nlsdp/errors.hpp"
#include "nlsdp/evolution.hpp"
#include "nlsdp/functionals.hpp"
#include "nlsdp/profiles.hpp"
#include "nlsdp/tridiagonal.hpp"

namespace nlsdp {

ComplexField action_gradient(const ComplexField& v, const ModelParams& params, double omega) {
  const Grid& grid = v.grid;
  const std::size_t n = grid.size();
  const double h = grid.spacing();
  const double inv_h2 = 1.0 / (h * h);
  const double q1 = params.p - 1.0;
  const double q2 = 2.0 * params.p - 2.0;
  const std::size_t c = grid.center();

  ComplexField g(grid);
  for (std::size_t j = 1; j + 1 < n; ++j) {
    // Boundary nodes act as homogeneous Dirichlet data.
    const cplx left = j == 1 ? cplx{} : v[j - 1];
    const cplx right = j + 2 == n ? cplx{} : v[j + 1];
    cplx Hv = (2.0 * v[j] - left - right) * inv_h2;
    if (j == c) Hv -= params.Z / h * v[j];
    const double r = std::norm(v[j]);
    const double f = params.lambda1 * abs_pow(r, q1) + params.lambda2 * abs_pow(r, q2);
    g[j] = Hv - omega * v[j] - f * v[j];
  }
  return g;
}

namespace {

// Below this relative size the monotonicity test is dominated by rounding
// in the functional itself.
constexpr double kResolvableDecrease = 1e-13;

double real_pairing(const ComplexField& a, const ComplexField& b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a.grid.weight(j) * std::real(a[j] * std::conj(b[j]));
  return a.grid.spacing() * s;
}

}  // namespace

FlowResult gradient_flow(const ComplexField& v0, const ModelParams& params, double omega,
                         const FlowOptions& opts) {
  require_valid(params);
  const Grid& grid = v0.grid;
  const double h = grid.spacing();
  const bool sobolev = opts.preconditioner == Preconditioner::Sobolev;
  const double step0 = opts.step > 0.0 ? opts.step : (sobolev ? 0.5 : 0.1 * h * h);

  std::optional<TridiagonalLU> precond;
  if (sobolev) {
    const double sigma = opts.shift > 0.0 ? opts.shift : std::max(-omega, 0.05);
    const SymTridiagonal H0 = linear_half_generator(grid, 0.0);
    std::vector<cplx> lower(H0.off.begin(), H0.off.end());
    std::vector<cplx> upper(H0.off.begin(), H0.off.end());
    std::vector<cplx> diag(H0.diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) diag[i] = H0.diag[i] + sigma;
    precond.emplace(std::move(lower), std::move(diag), std::move(upper));
  }

  auto direction = [&](const ComplexField& g) {
    if (!precond) return g;
    ComplexField d = g;
    precond->solve(d.values.data() + 1);
    d.values.front() = 0.0;
    d.values.back() = 0.0;
    return d;
  };

  FlowResult res{v0, 0.0, 0, 0.0, false, {}};
  ComplexField& v = res.minimizer;
  v.values.front() = 0.0;
  v.values.back() = 0.0;
  if (!v.all_finite()) throw NumericalError("gradient_flow: non-finite initial data");

  double G = action_G(v, params, omega);
  ComplexField g = action_gradient(v, params, omega);
  double gnorm = lp_norm(g, 2.0);
  double tau = step0;

  auto record = [&](std::size_t it) {
    if (opts.history_every > 0 && it % opts.history_every == 0) res.history.push_back({it, G, gnorm});
  };

  std::size_t it = 0;
  record(0);
  for (; it < opts.max_iter; ++it) {
    if (gnorm <= opts.tol) {
      res.converged = true;
      break;
    }
    const ComplexField d = direction(g);
    const double slope = real_pairing(g, d);
    bool accepted = false;
    std::optional<ComplexField> g_trial;
    while (tau > 1e-30 * step0) {
      ComplexField trial = v;
      for (std::size_t j = 0; j < v.size(); ++j) trial[j] -= tau * d[j];
      const double Gt = action_G(trial, params, omega);
      const double noise = kResolvableDecrease * std::max(1.0, std::abs(G));
      bool ok = Gt <= G;
      if (tau * slope < noise) {
        // G cannot resolve the decrease; require that the slope along d does
        // not reverse by more than it started, which rejects overshooting steps.
        ok = false;
        if (Gt <= G + noise) {
          g_trial = action_gradient(trial, params, omega);
          ok = std::abs(real_pairing(*g_trial, d)) <= slope;
        }
      } else {
        g_trial.reset();
      }
      if (ok) {
        v = std::move(trial);
        G = Gt;
        accepted = true;
        break;
      }
      tau *= 0.5;
    }
    if (!accepted) break;
    g = g_trial ? std::move(*g_trial) : action_gradient(v, params, omega);
    gnorm = lp_norm(g, 2.0);
    if (!std::isfinite(G) || !std::isfinite(gnorm)) throw NumericalError("gradient_flow: non-finite iterate");
    tau = std::min(1.25 * tau, step0);
    record(it + 1);
  }
  res.iterations = it;
  res.value = G;
  res.final_gradient_norm = gnorm;
  if (gnorm <= opts.tol) res.converged = true;
  if (opts.history_every > 0 && (res.history.empty() || res.history.back().iter != it)) {
    res.history.push_back({it, G, gnorm});
  }
  return res;
}

ComplexField random_bump(const Grid& grid, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> centre(-3.0, 3.0);
  std::uniform_real_distribution<double> width(0.5, 3.0);
  const double c = centre(rng);
  const double w = width(rng);
  ComplexField v = ComplexField::sample_real(grid, [&](double x) {
    const double s = (x - c) / w;
    return std::exp(-0.5 * s * s);
  });
  v.values.front() = 0.0;
  v.values.back() = 0.0;
  v *= 1.0 / h1_norm(v);
  return v;
}

MinimumEstimate estimate_m(const ModelParams& params, double omega, const Grid& grid,
                           std::size_t restarts, std::uint64_t seed, const FlowOptions& opts) {
  const Profile profile = Profile::make(params, omega);
  const ComplexField phi = ComplexField::sample_real(grid, [&](double x) { return profile.eval(x); });

  MinimumEstimate est;
  est.seed = seed;
  est.profile_value = action_G(phi, params, omega);
  est.best_value = std::numeric_limits<double>::infinity();
  std::vector<std::uint64_t> seeds(restarts);
  {
    std::mt19937_64 rng(seed);
    for (auto& s : seeds) s = rng();
  }
  for (std::size_t r = 0; r < restarts; ++r) {
    FlowResult run = gradient_flow(random_bump(grid, seeds[r]), params, omega, opts);
    est.best_value = std::min(est.best_value, run.value);
    est.runs.push_back(std::move(run));
  }
  return est;
}

}  // namespace nlsdp

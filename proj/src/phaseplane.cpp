#include "nlsdp/phaseplane.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "nlsdp/errors.hpp"
#include "nlsdp/grid.hpp"
#include "nlsdp/profiles.hpp"
#include "nlsdp/stationary.hpp"

namespace nlsdp {

double hamiltonian(const ModelParams& params, double omega, PhasePoint pt) {
  const auto [alpha, beta] = alpha_beta(params);
  const double x2 = pt.phi * pt.phi;
  const double p = params.p;
  return pt.dphi * pt.dphi + omega * x2 + 2.0 * alpha * x2 * abs_pow(x2, p - 1.0) +
         beta * abs_pow(x2, 2.0 * p);
}

PhasePoint jump_map(PhasePoint pt, double Z) { return {pt.phi, pt.dphi - Z * pt.phi}; }

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::Unstable: return "unstable";
    case Branch::Jump: return "jump";
    case Branch::Stable: return "stable";
  }
  return "unknown";
}

namespace {

PhasePoint field(const ModelParams& params, double omega, PhasePoint s) {
  // The ODE is odd in phi; evaluate the force on |phi| and restore the sign.
  const double sgn = s.phi < 0.0 ? -1.0 : 1.0;
  return {s.dphi, sgn * second_derivative_from_ode(params, omega, std::abs(s.phi))};
}

PhasePoint rk4(const ModelParams& params, double omega, PhasePoint s, double h) {
  const PhasePoint k1 = field(params, omega, s);
  const PhasePoint k2 =
      field(params, omega, {s.phi + 0.5 * h * k1.phi, s.dphi + 0.5 * h * k1.dphi});
  const PhasePoint k3 =
      field(params, omega, {s.phi + 0.5 * h * k2.phi, s.dphi + 0.5 * h * k2.dphi});
  const PhasePoint k4 = field(params, omega, {s.phi + h * k3.phi, s.dphi + h * k3.dphi});
  return {s.phi + h / 6.0 * (k1.phi + 2.0 * k2.phi + 2.0 * k3.phi + k4.phi),
          s.dphi + h / 6.0 * (k1.dphi + 2.0 * k2.dphi + 2.0 * k3.dphi + k4.dphi)};
}

double dist(PhasePoint a, PhasePoint b) { return std::hypot(a.phi - b.phi, a.dphi - b.dphi); }

}  // namespace

Orbit trace_orbit(const ModelParams& params, double omega, PhasePoint start, double arclength,
                  const OrbitOptions& opts) {
  if (!(opts.step > 0.0)) throw std::invalid_argument("trace_orbit: step must be positive");
  const double c0 = find_c0(params, omega);
  const double guard = 1e3 * c0;

  Orbit orbit;
  orbit.x.push_back(0.0);
  orbit.points.push_back(start);
  PhasePoint s = start;
  double x = 0.0;
  while (orbit.arclength < arclength) {
    if (opts.x_span && x >= *opts.x_span) break;
    // Phase-space displacement per step is at most opts.step.
    const PhasePoint v = field(params, omega, s);
    double h = opts.step / std::max(1.0, std::hypot(v.phi, v.dphi));
    if (opts.x_span) h = std::min(h, *opts.x_span - x);
    PhasePoint next = rk4(params, omega, s, h);
    if (!std::isfinite(next.phi) || !std::isfinite(next.dphi) || std::hypot(next.phi, next.dphi) > guard) {
      std::ostringstream os;
      os << "trace_orbit: orbit diverged near x = " << x;
      throw NumericalError(os.str());
    }
    if (opts.stop_phi) {
      const double level = *opts.stop_phi;
      if ((s.phi - level) * (next.phi - level) <= 0.0 && next.phi != s.phi) {
        // Bisect on the partial step length so the final point lands on the level.
        double lo = 0.0, hi = h;
        for (int it = 0; it < 80; ++it) {
          const double mid = 0.5 * (lo + hi);
          const PhasePoint trial = rk4(params, omega, s, mid);
          if ((s.phi - level) * (trial.phi - level) <= 0.0) hi = mid; else lo = mid;
        }
        next = rk4(params, omega, s, hi);
        orbit.arclength += dist(s, next);
        x += hi;
        orbit.x.push_back(x);
        orbit.points.push_back(next);
        return orbit;
      }
    }
    orbit.arclength += dist(s, next);
    x += h;
    s = next;
    orbit.x.push_back(x);
    orbit.points.push_back(s);
  }
  return orbit;
}

Seed unstable_seed(const ModelParams& params, double omega, double x_far) {
  if (omega < 0.0) {
    const double eps = 1e-8 * find_c0(params, omega);
    return {{eps, std::sqrt(-omega) * eps}, std::numeric_limits<double>::quiet_NaN()};
  }
  const Profile phi0 = Profile::equilibrium(params);
  return {{phi0.eval(-x_far), phi0.derivative(-x_far)}, -x_far};
}

std::vector<PortraitSample> composite_path(const ModelParams& params, double omega, double step,
                                           double x_tail) {
  if (!(x_tail >= 0.0)) throw std::invalid_argument("composite_path: x_tail must be nonnegative");
  const double c0 = find_c0(params, omega);
  OrbitOptions up;
  up.step = step;
  up.stop_phi = c0;

  // The unstable branch must span at least x_tail so that its mirror image
  // covers [0, x_tail].
  Seed seed = unstable_seed(params, omega, std::max(50.0, x_tail + 1.0));
  Orbit rising;
  for (;;) {
    rising = trace_orbit(params, omega, seed.point, std::numeric_limits<double>::infinity(), up);
    if (rising.x.back() >= x_tail || omega == 0.0 || seed.point.phi < 1e-280) break;
    seed.point.phi *= 1e-4;
    seed.point.dphi *= 1e-4;
  }
  const double x_end = rising.x.back();
  if (x_end < x_tail) throw NumericalError("composite_path: unstable branch too short for x_tail");

  std::vector<PortraitSample> out;
  out.reserve(2 * rising.points.size() + 4);
  for (std::size_t i = 0; i < rising.points.size(); ++i) {
    out.push_back({rising.x[i] - x_end, rising.points[i], Branch::Unstable});
  }

  const PhasePoint before{c0, 0.5 * params.Z * c0};
  const PhasePoint after = jump_map(before, params.Z);
  out.push_back({0.0, before, Branch::Jump});
  out.push_back({0.0, after, Branch::Jump});

  // The stable manifold is the mirror (phi, -phi') of the unstable one.
  // Integrating it forward in x would amplify rounding like e^{sqrt(-omega) x}.
  const auto mirror = [](PhasePoint q) { return PhasePoint{q.phi, -q.dphi}; };
  const double x_cut = x_end - x_tail;
  std::size_t i = rising.points.size();
  while (i-- > 0) {
    if (rising.x[i] < x_cut) break;
    out.push_back({x_end - rising.x[i], mirror(rising.points[i]), Branch::Stable});
  }
  if (out.back().x < x_tail) {
    // Land the last sample exactly on x_tail.
    const std::size_t k = i + 1 < rising.points.size() ? i : 0;
    const PhasePoint q = rk4(params, omega, rising.points[k], x_cut - rising.x[k]);
    out.push_back({x_tail, mirror(q), Branch::Stable});
  }
  return out;
}

}  // namespace nlsdp

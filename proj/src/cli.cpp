#include "nlsdp/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "nlsdp/errors.hpp"
#include "nlsdp/evolution.hpp"
#include "nlsdp/io.hpp"
#include "nlsdp/minimize.hpp"
#include "nlsdp/phaseplane.hpp"
#include "nlsdp/profiles.hpp"
#include "nlsdp/stability.hpp"
#include "nlsdp/stationary.hpp"

namespace nlsdp::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Common {
  ModelParams params;
  double omega = -0.25;
  std::string out_dir;
  std::uint64_t seed = 1;
};

struct Perturb {
  PerturbationKind kind = PerturbationKind::Bump;
  double amplitude = 0.0;
};

Perturb parse_perturb(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw CLI::ValidationError("--perturb", "expected <kind:amplitude>");
  Perturb p;
  try {
    p.kind = parse_perturbation_kind(spec.substr(0, colon));
    std::size_t used = 0;
    p.amplitude = std::stod(spec.substr(colon + 1), &used);
    if (used != spec.size() - colon - 1 || !(p.amplitude >= 0.0)) throw std::invalid_argument("amplitude");
  } catch (const std::exception&) {
    throw CLI::ValidationError("--perturb", "expected <kind:amplitude> with kind in {bump, phase-ramp, noise}");
  }
  return p;
}

void add_model_flags(CLI::App* sub, Common& c) {
  sub->add_option("--p", c.params.p, "Nonlinearity exponent (> 1)")->capture_default_str();
  sub->add_option("--lambda1", c.params.lambda1, "Coefficient of |u|^{p-1} u")->capture_default_str();
  sub->add_option("--lambda2", c.params.lambda2, "Coefficient of |u|^{2p-2} u")->capture_default_str();
  sub->add_option("--Z", c.params.Z, "Point interaction strength")->capture_default_str();
  sub->add_option("--omega", c.omega, "Frequency")->capture_default_str();
}

struct GridFlags {
  std::optional<double> L;
  double h = 0.01;

  Grid grid(double omega) const {
    const double half = L ? *L : (omega == 0.0 ? 400.0 : 40.0);
    return Grid::with_spacing(half, h);
  }
};

void add_grid_flags(CLI::App* sub, GridFlags& g, double default_h) {
  g.h = default_h;
  sub->add_option("--L", g.L, "Half width of the domain (default 40, or 400 when omega = 0)");
  sub->add_option("--h", g.h, "Grid spacing")->capture_default_str()->check(CLI::PositiveNumber);
}

json grid_json(const Grid& g) {
  return {{"L", json_number(g.half_width())}, {"n_points", g.size()}, {"h", json_number(g.spacing())}};
}

class Session {
public:
  Session(const Common& c, std::string sub, std::vector<std::string> args, std::ostream& out)
      : common_(c), out_(out) {
    manifest_.subcommand = std::move(sub);
    manifest_.params = c.params;
    manifest_.omega = c.omega;
    manifest_.seed = c.seed;
    manifest_.args = std::move(args);
    fs::create_directories(c.out_dir);
  }

  fs::path file(const std::string& name) {
    if (std::find(manifest_.outputs.begin(), manifest_.outputs.end(), name) == manifest_.outputs.end()) {
      manifest_.outputs.push_back(name);
    }
    return fs::path(common_.out_dir) / name;
  }

  json& config() { return manifest_.config; }
  std::ostream& out() { return out_; }

  void finish() {
    manifest_.outputs.push_back("manifest.json");
    write_json(fs::path(common_.out_dir) / "manifest.json", manifest_.to_json());
  }

private:
  const Common& common_;
  std::ostream& out_;
  RunManifest manifest_;
};

int cmd_regime(Session& s, const Common& c) {
  const RegimeVerdict v = classify_regime(c.params, c.omega);
  s.out() << to_string(v.tag) << '\n' << v.detail << '\n';
  json j = to_json(v);
  if (auto iv = admissible_omega_interval(c.params)) {
    j["admissible_omega"] = {json_number(iv->first), json_number(iv->second)};
  } else {
    j["admissible_omega"] = nullptr;
  }
  write_json(s.file("regime.json"), j);
  s.finish();
  return v.exists() ? kOk : kRegimeError;
}

int cmd_profile(Session& s, const Common& c, const GridFlags& gf) {
  const Profile profile = Profile::make(c.params, c.omega);
  const Grid grid = gf.grid(c.omega);
  s.config()["grid"] = grid_json(grid);
  write_profile_csv(s.file("profile.csv"), profile, grid);
  s.out() << "peak " << format_double(profile.peak()) << "\nshift " << format_double(profile.shift()) << '\n';
  s.finish();
  return kOk;
}

int cmd_verify(Session& s, const Common& c, const GridFlags& gf) {
  const Profile profile = Profile::make(c.params, c.omega);
  const Grid grid = gf.grid(c.omega);
  s.config()["grid"] = grid_json(grid);
  const json j = to_json(verify_profile(profile, grid));
  write_json(s.file("verify.json"), j);
  s.out() << j.dump(2) << '\n';
  s.finish();
  return kOk;
}

int cmd_phaseplane(Session& s, const Common& c, double step, double x_tail) {
  s.config()["step"] = json_number(step);
  s.config()["x_tail"] = json_number(x_tail);
  const auto path = composite_path(c.params, c.omega, step, x_tail);
  write_phaseplane_csv(s.file("phaseplane.csv"), c.params, c.omega, path);
  s.out() << path.size() << " samples\n";
  s.finish();
  return kOk;
}

struct EvolveFlags {
  GridFlags grid;
  double dt = 1e-3;
  double T = 10.0;
  std::size_t record_every = 10;
  std::size_t snapshot_every = 0;
  std::string perturb;
};

int cmd_evolve(Session& s, const Common& c, const EvolveFlags& f) {
  const Profile profile = Profile::make(c.params, c.omega);
  const Perturb pert = f.perturb.empty() ? Perturb{} : parse_perturb(f.perturb);
  EvolutionConfig ec{f.grid.grid(c.omega)};
  ec.dt = f.dt;
  ec.t_final = f.T;
  ec.record_every = f.record_every;
  ec.snapshot_every = f.snapshot_every;
  ec.omega = c.omega;
  ec.validate();
  s.config() = {{"grid", grid_json(ec.grid)},
                {"dt", json_number(ec.dt)},
                {"T", json_number(ec.t_final)},
                {"record_every", ec.record_every},
                {"snapshot_every", ec.snapshot_every},
                {"perturb", {{"kind", std::string(to_string(pert.kind))}, {"amplitude", json_number(pert.amplitude)}}}};

  const ComplexField phi = reference_field(profile, ec.grid);
  const ComplexField u0 = perturbed_initial_data(phi, pert.amplitude, pert.kind, c.seed);
  const Trajectory traj = evolve(u0, ec, c.params, phi);
  write_diagnostics_csv(s.file("diagnostics.csv"), c.params, c.omega, traj.diagnostics);
  if (f.snapshot_every > 0) write_snapshots_csv(s.file("snapshots.csv"), c.params, c.omega, traj.snapshots);

  const Diagnostics& first = traj.diagnostics.front();
  const Diagnostics& last = traj.diagnostics.back();
  double max_dist = 0.0;
  for (const auto& d : traj.diagnostics) max_dist = std::max(max_dist, d.orbital_dist);
  s.out() << "charge drift " << format_double(std::abs(last.charge - first.charge) / first.charge) << '\n'
          << "energy drift " << format_double(std::abs(last.energy - first.energy)) << '\n'
          << "max orbital distance " << format_double(max_dist) << '\n';
  s.finish();
  return kOk;
}

struct MinimizeFlags {
  GridFlags grid;
  std::string start = "perturbed";
  double amplitude = 0.1;
  std::string preconditioner = "sobolev";
  double step = 0.0;
  double tol = 1e-8;
  std::size_t max_iter = 200000;
  std::size_t restarts = 0;
};

int cmd_minimize(Session& s, const Common& c, const MinimizeFlags& f) {
  const Profile profile = Profile::make(c.params, c.omega);
  const Grid grid = f.grid.grid(c.omega);
  FlowOptions opts;
  opts.preconditioner = f.preconditioner == "l2" ? Preconditioner::None : Preconditioner::Sobolev;
  opts.step = f.step;
  opts.tol = f.tol;
  opts.max_iter = f.max_iter;
  s.config() = {{"grid", grid_json(grid)},
                {"start", f.start},
                {"amplitude", json_number(f.amplitude)},
                {"preconditioner", f.preconditioner},
                {"step", json_number(f.step)},
                {"tol", json_number(f.tol)},
                {"max_iter", f.max_iter},
                {"restarts", f.restarts}};

  const ComplexField phi = reference_field(profile, grid);
  ComplexField v0(grid);
  if (f.start == "perturbed") {
    v0 = perturbed_initial_data(phi, f.amplitude, PerturbationKind::Bump, c.seed);
  } else if (f.start == "delta") {
    v0 = f.amplitude * delta_eigenfunction(c.params.Z, grid);
  } else {
    v0 = random_bump(grid, c.seed);
  }

  const FlowResult res = gradient_flow(v0, c.params, c.omega, opts);
  json j = to_json(res);
  j["functional"] = c.omega == 0.0 ? "energy" : "action";
  j["profile_value"] = json_number(action_G(phi, c.params, c.omega));
  j["orbital_distance_to_profile"] = json_number(orbital_distance(res.minimizer, phi).distance);
  if (f.restarts > 0) {
    const MinimumEstimate est = estimate_m(c.params, c.omega, grid, f.restarts, c.seed, opts);
    j["estimate_m"] = {{"best_value", json_number(est.best_value)},
                       {"profile_value", json_number(est.profile_value)},
                       {"restarts", f.restarts},
                       {"seed", est.seed}};
  }
  write_json(s.file("flow.json"), j);
  write_descent_csv(s.file("descent.csv"), c.params, c.omega, res.history);
  write_field_csv(s.file("minimizer.csv"), c.params, c.omega, res.minimizer);
  s.out() << j.dump(2) << '\n';
  s.finish();
  return kOk;
}

struct StabilityFlags {
  GridFlags grid;
  double dt = 1e-3;
  double T = 20.0;
  std::size_t record_every = 10;
  double taper = 0.0;
  std::vector<double> eps{1e-3, 1e-2, 1e-1};
  std::vector<std::string> kinds{"bump"};
  std::vector<double> targets{0.1, 0.05};
};

int cmd_stability(Session& s, const Common& c, const StabilityFlags& f) {
  StabilityConfig sc;
  const Grid grid = f.grid.grid(c.omega);
  sc.half_width = grid.half_width();
  sc.h = f.grid.h;
  sc.dt = f.dt;
  sc.horizon = f.T;
  sc.record_every = f.record_every;
  sc.boundary_taper = f.taper;
  std::vector<PerturbationKind> kinds;
  for (const auto& k : f.kinds) kinds.push_back(parse_perturbation_kind(k));
  s.config() = {{"grid", grid_json(grid)},
                {"dt", json_number(sc.dt)},
                {"T", json_number(sc.horizon)},
                {"record_every", sc.record_every},
                {"taper", json_number(sc.boundary_taper)},
                {"eps", f.eps},
                {"kinds", f.kinds}};

  const StabilityReport floor = standing_wave_check(c.params, c.omega, sc);
  const auto reports = stability_curve(c.params, c.omega, f.eps, kinds, c.seed, sc);
  write_stability_csv(s.file("stability_curve.csv"), c.params, c.omega, reports);

  json j;
  j["floor"] = to_json(floor);
  j["reports"] = json::array();
  for (const auto& r : reports) j["reports"].push_back(to_json(r));
  j["epsilon_delta"] = json::array();
  for (double target : f.targets) {
    const auto delta = epsilon_delta(reports, target);
    j["epsilon_delta"].push_back({{"eps", json_number(target)}, {"delta", delta ? json_number(*delta) : json()}});
  }
  j["note"] = "orbital distances are maxima over recorded times in [0, T]; T is finite";
  write_json(s.file("stability.json"), j);
  s.out() << "floor " << format_double(floor.max_orbital_dist) << '\n';
  for (const auto& r : reports) {
    s.out() << to_string(r.kind) << " eps=" << format_double(r.eps)
            << " max_orbital_dist=" << format_double(r.max_orbital_dist) << '\n';
  }
  s.finish();
  return kOk;
}

std::vector<std::string> strip_out_flag(const std::vector<std::string>& args) {
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--out") {
      ++i;
      continue;
    }
    if (args[i].rfind("--out=", 0) == 0) continue;
    kept.push_back(args[i]);
  }
  return kept;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical lab for the double-power NLS with a delta point interaction", "nlsdp"};
  app.require_subcommand(1);
  // -h is taken by the grid spacing.
  app.set_help_flag("--help", "Print this help message and exit");
  // --out and --seed may follow the subcommand.
  app.fallthrough();

  Common c;
  if (const char* env = std::getenv("NLSDP_OUT"); env && *env) {
    c.out_dir = env;
  } else {
    c.out_dir = "nlsdp_out";
  }
  app.add_option("--out", c.out_dir, "Output directory (default $NLSDP_OUT or ./nlsdp_out)");
  app.add_option("--seed", c.seed, "Seed for every randomized step")->capture_default_str();

  auto* regime = app.add_subcommand("regime", "Classify a parameter tuple");
  add_model_flags(regime, c);

  GridFlags profile_grid;
  auto* profile = app.add_subcommand("profile", "Sample the closed-form profile");
  add_model_flags(profile, c);
  add_grid_flags(profile, profile_grid, 0.01);

  GridFlags verify_grid;
  verify_grid.L = 10.0;
  auto* verify = app.add_subcommand("verify", "Residuals of the closed-form profile");
  add_model_flags(verify, c);
  add_grid_flags(verify, verify_grid, 1e-3);

  double pp_step = 1e-3;
  double pp_tail = 20.0;
  auto* phaseplane = app.add_subcommand("phaseplane", "Unstable, jump and stable branches");
  add_model_flags(phaseplane, c);
  phaseplane->add_option("--step", pp_step, "Integration step")->capture_default_str()->check(CLI::PositiveNumber);
  phaseplane->add_option("--x-tail", pp_tail, "Extent of the stable branch")->capture_default_str();

  EvolveFlags ef;
  auto* evolve_cmd = app.add_subcommand("evolve", "Time evolution from the profile");
  add_model_flags(evolve_cmd, c);
  add_grid_flags(evolve_cmd, ef.grid, 0.01);
  evolve_cmd->add_option("--dt", ef.dt, "Time step")->capture_default_str()->check(CLI::PositiveNumber);
  evolve_cmd->add_option("--T", ef.T, "Horizon")->capture_default_str()->check(CLI::NonNegativeNumber);
  evolve_cmd->add_option("--record-every", ef.record_every, "Diagnostics stride")->capture_default_str()->check(CLI::PositiveNumber);
  evolve_cmd->add_option("--snapshot-every", ef.snapshot_every, "Snapshot stride (0 writes no snapshots.csv)")->capture_default_str();
  evolve_cmd->add_option("--perturb", ef.perturb, "Initial perturbation <kind:amplitude>")
      ->check([](const std::string& v) {
        parse_perturb(v);
        return std::string();
      });

  MinimizeFlags mf;
  auto* minimize = app.add_subcommand("minimize", "Gradient flow on the action");
  add_model_flags(minimize, c);
  add_grid_flags(minimize, mf.grid, 0.01);
  minimize->add_option("--start", mf.start, "Initial data")->capture_default_str()->check(CLI::IsMember({"perturbed", "delta", "bump"}));
  minimize->add_option("--amplitude", mf.amplitude, "Amplitude for the perturbed and delta starts")->capture_default_str();
  minimize->add_option("--preconditioner", mf.preconditioner, "Descent metric")->capture_default_str()->check(CLI::IsMember({"sobolev", "l2"}));
  minimize->add_option("--step", mf.step, "Initial step (0 picks a default)")->capture_default_str();
  minimize->add_option("--tol", mf.tol, "Gradient tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  minimize->add_option("--max-iter", mf.max_iter, "Iteration cap")->capture_default_str();
  minimize->add_option("--restarts", mf.restarts, "Random restarts for estimate_m (0 skips)")->capture_default_str();

  StabilityFlags sf;
  auto* stability = app.add_subcommand("stability", "Perturbation sweep");
  add_model_flags(stability, c);
  add_grid_flags(stability, sf.grid, 0.01);
  stability->add_option("--dt", sf.dt, "Time step")->capture_default_str()->check(CLI::PositiveNumber);
  stability->add_option("--T", sf.T, "Horizon")->capture_default_str()->check(CLI::NonNegativeNumber);
  stability->add_option("--record-every", sf.record_every, "Diagnostics stride")->capture_default_str()->check(CLI::PositiveNumber);
  stability->add_option("--taper", sf.taper, "Boundary cutoff width of the reference")->capture_default_str();
  stability->add_option("--eps", sf.eps, "Amplitudes")->capture_default_str()->delimiter(',');
  stability->add_option("--kinds", sf.kinds, "Perturbation kinds")->capture_default_str()->delimiter(',')
      ->check(CLI::IsMember({"bump", "phase-ramp", "noise"}));
  stability->add_option("--targets", sf.targets, "Targets for the eps-delta report")->capture_default_str()->delimiter(',');

  std::string manifest_path;
  auto* replay = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
  replay->add_option("manifest", manifest_path, "manifest.json of an earlier run")->required()->check(CLI::ExistingFile);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (replay->parsed()) {
      std::ifstream in(manifest_path);
      const RunManifest m = RunManifest::from_json(json::parse(in));
      std::vector<std::string> again = m.args;
      again.push_back("--out");
      again.push_back(c.out_dir);
      return run(again, out, err);
    }

    CLI::App* sub = app.get_subcommands().front();
    Session s(c, sub->get_name(), strip_out_flag(args), out);
    if (sub == regime) return cmd_regime(s, c);
    if (sub == profile) return cmd_profile(s, c, profile_grid);
    if (sub == verify) return cmd_verify(s, c, verify_grid);
    if (sub == phaseplane) return cmd_phaseplane(s, c, pp_step, pp_tail);
    if (sub == evolve_cmd) return cmd_evolve(s, c, ef);
    if (sub == minimize) return cmd_minimize(s, c, mf);
    if (sub == stability) return cmd_stability(s, c, sf);
  } catch (const RegimeError& e) {
    err << "regime error: " << e.what() << '\n';
    return kRegimeError;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kRegimeError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumericalFailure;
  }
  return kUsage;
}

}  // namespace nlsdp::cli

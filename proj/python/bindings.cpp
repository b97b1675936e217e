#include <optional>

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nlsdp/errors.hpp"
#include "nlsdp/evolution.hpp"
#include "nlsdp/functionals.hpp"
#include "nlsdp/io.hpp"
#include "nlsdp/minimize.hpp"
#include "nlsdp/model.hpp"
#include "nlsdp/phaseplane.hpp"
#include "nlsdp/profiles.hpp"
#include "nlsdp/stability.hpp"
#include "nlsdp/stationary.hpp"
#include "nlsdp/tridiagonal.hpp"

namespace py = pybind11;
using namespace nlsdp;

namespace {

py::array_t<double> grid_x(const Grid& g) {
  py::array_t<double> out(static_cast<py::ssize_t>(g.size()));
  auto r = out.mutable_unchecked<1>();
  for (std::size_t j = 0; j < g.size(); ++j) r(static_cast<py::ssize_t>(j)) = g.x(j);
  return out;
}

py::array_t<std::complex<double>> field_values(const ComplexField& f) {
  return py::array_t<std::complex<double>>(static_cast<py::ssize_t>(f.size()), f.values.data());
}

ComplexField field_from(const Grid& g, py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast> a) {
  if (a.ndim() != 1 || static_cast<std::size_t>(a.shape(0)) != g.size()) {
    throw std::invalid_argument("array length does not match the grid");
  }
  return ComplexField(g, std::vector<cplx>(a.data(), a.data() + a.shape(0)));
}

template <class F>
py::array_t<double> map_array(py::array_t<double, py::array::c_style | py::array::forcecast> x, F f) {
  py::array_t<double> out(x.request().shape);
  const double* in = x.data();
  double* o = out.mutable_data();
  for (py::ssize_t i = 0; i < x.size(); ++i) o[i] = f(in[i]);
  return out;
}

py::dict diagnostics_dict(const std::vector<Diagnostics>& rows) {
  const auto n = static_cast<py::ssize_t>(rows.size());
  py::array_t<double> t(n), q(n), e(n), a(n), d(n);
  auto rt = t.mutable_unchecked<1>(), rq = q.mutable_unchecked<1>(), re = e.mutable_unchecked<1>(),
       ra = a.mutable_unchecked<1>(), rd = d.mutable_unchecked<1>();
  for (py::ssize_t i = 0; i < n; ++i) {
    const auto& r = rows[static_cast<std::size_t>(i)];
    rt(i) = r.t;
    rq(i) = r.charge;
    re(i) = r.energy;
    ra(i) = r.action;
    rd(i) = r.orbital_dist;
  }
  py::dict out;
  out["t"] = t;
  out["charge"] = q;
  out["energy"] = e;
  out["action"] = a;
  out["orbital_dist"] = d;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Double-power NLS with a delta point interaction";
  m.attr("__version__") = std::string(version());

  py::register_exception<RegimeError>(m, "RegimeError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init([](double p, double lambda1, double lambda2, double Z) {
             return ModelParams{p, lambda1, lambda2, Z};
           }),
           py::arg("p") = 3.0, py::arg("lambda1") = -1.0, py::arg("lambda2") = -1.0, py::arg("Z") = 2.0)
      .def_readwrite("p", &ModelParams::p)
      .def_readwrite("lambda1", &ModelParams::lambda1)
      .def_readwrite("lambda2", &ModelParams::lambda2)
      .def_readwrite("Z", &ModelParams::Z)
      .def("__repr__", [](const ModelParams& p) { return "ModelParams(" + describe(p, 0.0) + ")"; });

  m.def("classify_regime", [](const ModelParams& p, double omega) {
    const RegimeVerdict v = classify_regime(p, omega);
    return py::make_tuple(std::string(to_string(v.tag)), v.detail);
  }, py::arg("params"), py::arg("omega"), "Returns (tag, detail).");
  m.def("admissible_omega_interval", &admissible_omega_interval, py::arg("params"));
  m.def("find_c0", &find_c0, py::arg("params"), py::arg("omega"));
  m.def("peak_polynomial", &peak_polynomial, py::arg("params"), py::arg("omega"), py::arg("c"));

  py::class_<Profile>(m, "Profile")
      .def_static("standing_wave", &Profile::standing_wave, py::arg("params"), py::arg("omega"))
      .def_static("equilibrium", &Profile::equilibrium, py::arg("params"))
      .def_static("make", &Profile::make, py::arg("params"), py::arg("omega"))
      .def("__call__", [](const Profile& p, py::array_t<double> x) {
        return map_array(x, [&](double v) { return p.eval(v); });
      }, py::arg("x"))
      .def("derivative", [](const Profile& p, py::array_t<double> x) {
        return map_array(x, [&](double v) { return p.derivative(v); });
      }, py::arg("x"), "Right limit at x = 0.")
      .def("peak", &Profile::peak)
      .def_property_readonly("shift", &Profile::shift)
      .def_property_readonly("omega", &Profile::omega)
      .def_property_readonly("params", &Profile::params);

  py::class_<Grid>(m, "Grid")
      .def(py::init<double, std::size_t>(), py::arg("half_width"), py::arg("n_points"))
      .def_static("with_spacing", &Grid::with_spacing, py::arg("half_width"), py::arg("h"))
      .def_property_readonly("h", &Grid::spacing)
      .def_property_readonly("half_width", &Grid::half_width)
      .def("__len__", &Grid::size)
      .def_property_readonly("x", &grid_x);

  m.def("verify_profile", [](const Profile& p, const Grid& g) {
    const ResidualReport r = verify_profile(p, g);
    py::dict d;
    d["max_interior_residual"] = r.max_interior_residual;
    d["jump_residual"] = r.jump_residual;
    d["first_integral_max"] = r.first_integral_max;
    return d;
  }, py::arg("profile"), py::arg("grid"));

  m.def("shoot_ivp", [](const ModelParams& p, double omega, double x_max, double h_ode) {
    const HalfProfile hp = shoot_ivp(p, omega, x_max, h_ode);
    return py::make_tuple(py::array(py::cast(hp.x)), py::array(py::cast(hp.psi)), py::array(py::cast(hp.dpsi)));
  }, py::arg("params"), py::arg("omega"), py::arg("x_max"), py::arg("h_ode"));

  m.def("hamiltonian", [](const ModelParams& p, double omega, double phi, double dphi) {
    return hamiltonian(p, omega, {phi, dphi});
  }, py::arg("params"), py::arg("omega"), py::arg("phi"), py::arg("dphi"));

  m.def("composite_path", [](const ModelParams& p, double omega, double step, double x_tail) {
    const auto path = composite_path(p, omega, step, x_tail);
    std::vector<double> x, phi, dphi;
    std::vector<std::string> branch;
    for (const auto& s : path) {
      x.push_back(s.x);
      phi.push_back(s.point.phi);
      dphi.push_back(s.point.dphi);
      branch.emplace_back(to_string(s.branch));
    }
    py::dict d;
    d["x"] = py::array(py::cast(x));
    d["phi"] = py::array(py::cast(phi));
    d["dphi"] = py::array(py::cast(dphi));
    d["branch"] = branch;
    return d;
  }, py::arg("params"), py::arg("omega"), py::arg("step") = 1e-3, py::arg("x_tail") = 20.0);

  m.def("smallest_eigenvalue", [](const Grid& g, double Z) {
    return smallest_eigenvalue(linear_half_generator(g, Z));
  }, py::arg("grid"), py::arg("Z"), "Smallest eigenvalue of the discrete point-interaction operator.");

  m.def("energy", [](const Grid& g, py::array_t<std::complex<double>> v, const ModelParams& p) {
    return energy(field_from(g, v), p);
  }, py::arg("grid"), py::arg("values"), py::arg("params"));
  m.def("orbital_distance", [](const Grid& g, py::array_t<std::complex<double>> u, py::array_t<std::complex<double>> phi) {
    const OrbitalDistance d = orbital_distance(field_from(g, u), field_from(g, phi));
    return py::make_tuple(d.distance, d.theta);
  }, py::arg("grid"), py::arg("u"), py::arg("phi"));

  m.def("evolve", [](const ModelParams& p, double omega, double L, double h, double dt, double T,
                     std::size_t record_every, const std::string& perturb_kind, double amplitude,
                     std::uint64_t seed) {
    const Profile profile = Profile::make(p, omega);
    EvolutionConfig ec{Grid::with_spacing(L, h)};
    ec.dt = dt;
    ec.t_final = T;
    ec.record_every = record_every;
    ec.omega = omega;
    const ComplexField phi = reference_field(profile, ec.grid);
    const ComplexField u0 = perturbed_initial_data(phi, amplitude, parse_perturbation_kind(perturb_kind), seed);
    Trajectory traj;
    {
      py::gil_scoped_release release;
      traj = evolve(u0, ec, p, phi);
    }
    py::dict out = diagnostics_dict(traj.diagnostics);
    out["x"] = grid_x(ec.grid);
    out["final"] = field_values(traj.snapshots.back().u);
    return out;
  }, py::arg("params"), py::arg("omega"), py::arg("L") = 40.0, py::arg("h") = 0.01, py::arg("dt") = 1e-3,
     py::arg("T") = 10.0, py::arg("record_every") = 10, py::arg("perturb") = "bump", py::arg("amplitude") = 0.0,
     py::arg("seed") = 1);

  m.def("gradient_flow", [](const ModelParams& p, double omega, double L, double h, double amplitude,
                            std::uint64_t seed, double tol, std::size_t max_iter) {
    const Profile profile = Profile::make(p, omega);
    const Grid g = Grid::with_spacing(L, h);
    const ComplexField phi = reference_field(profile, g);
    const ComplexField v0 = perturbed_initial_data(phi, amplitude, PerturbationKind::Bump, seed);
    FlowOptions opts;
    opts.tol = tol;
    opts.max_iter = max_iter;
    std::optional<FlowResult> res;
    {
      py::gil_scoped_release release;
      res = gradient_flow(v0, p, omega, opts);
    }
    const FlowResult& r = *res;
    py::dict d;
    d["value"] = r.value;
    d["profile_value"] = action_G(phi, p, omega);
    d["iterations"] = r.iterations;
    d["final_gradient_norm"] = r.final_gradient_norm;
    d["converged"] = r.converged;
    d["orbital_distance"] = orbital_distance(r.minimizer, phi).distance;
    d["minimizer"] = field_values(r.minimizer);
    return d;
  }, py::arg("params"), py::arg("omega"), py::arg("L") = 40.0, py::arg("h") = 0.01, py::arg("amplitude") = 0.1,
     py::arg("seed") = 1, py::arg("tol") = 1e-8, py::arg("max_iter") = 200000);

  m.def("perturbation_experiment", [](const ModelParams& p, double omega, double eps, const std::string& kind,
                                      std::uint64_t seed, double L, double h, double dt, double T) {
    StabilityConfig sc;
    sc.half_width = L;
    sc.h = h;
    sc.dt = dt;
    sc.horizon = T;
    StabilityReport r;
    {
      py::gil_scoped_release release;
      r = perturbation_experiment(p, omega, eps, parse_perturbation_kind(kind), seed, sc);
    }
    py::dict d;
    d["eps"] = r.eps;
    d["kind"] = std::string(to_string(r.kind));
    d["max_orbital_dist"] = r.max_orbital_dist;
    d["initial_dist"] = r.initial_dist;
    d["max_charge_drift"] = r.max_charge_drift;
    d["T"] = r.horizon;
    d["seed"] = r.seed;
    return d;
  }, py::arg("params"), py::arg("omega"), py::arg("eps"), py::arg("kind") = "bump", py::arg("seed") = 1,
     py::arg("L") = 40.0, py::arg("h") = 0.01, py::arg("dt") = 1e-3, py::arg("T") = 10.0);
}

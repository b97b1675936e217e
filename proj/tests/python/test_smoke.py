import math

import numpy as np
import pytest

import nlsdp

FIG = nlsdp.ModelParams(3.0, -1.0, -1.0, 2.0)
OMEGA = -0.25


def test_version_and_regime():
    assert nlsdp.__version__
    tag, detail = nlsdp.classify_regime(FIG, OMEGA)
    assert tag == "StandingWaveExists"
    assert isinstance(detail, str)
    assert nlsdp.classify_regime(FIG, 0.5)[0] == "EmptyOmegaPositive"
    lo, hi = nlsdp.admissible_omega_interval(FIG)
    assert lo == pytest.approx(-1.0)
    assert hi == pytest.approx(-3.0 / 16.0)


def test_profile():
    prof = nlsdp.Profile.standing_wave(FIG, OMEGA)
    assert prof.peak() == pytest.approx(0.962834868045836, abs=1e-12)
    assert nlsdp.find_c0(FIG, OMEGA) == pytest.approx(prof.peak(), abs=1e-9)
    x = np.linspace(-5, 5, 11)
    y = prof(x)
    assert y.shape == x.shape
    assert np.allclose(y, y[::-1])
    eq = nlsdp.Profile.equilibrium(nlsdp.ModelParams(3.0, -1.0, -1.0, 1.25))
    assert eq.peak() == pytest.approx(0.752965, abs=1e-6)


def test_verify_and_spectrum():
    prof = nlsdp.Profile.standing_wave(FIG, OMEGA)
    r = nlsdp.verify_profile(prof, nlsdp.Grid.with_spacing(10.0, 1e-3))
    assert r["max_interior_residual"] <= 1e-6
    lam = nlsdp.smallest_eigenvalue(nlsdp.Grid.with_spacing(40.0, 0.01), 2.0)
    assert abs(lam + 1.0) <= 1e-3


def test_small_evolution():
    d = nlsdp.evolve(FIG, OMEGA, L=20.0, h=0.05, dt=0.01, T=0.5, record_every=5)
    charge = np.asarray(d["charge"])
    assert np.all(np.abs(charge / charge[0] - 1.0) <= 1e-11)
    assert len(d["final"]) == len(d["x"])


def test_small_flow_and_experiment():
    r = nlsdp.gradient_flow(FIG, OMEGA, L=20.0, h=0.02, amplitude=0.05, seed=3)
    assert r["converged"]
    assert r["value"] < 0.0
    assert r["orbital_distance"] <= 1e-3
    e = nlsdp.perturbation_experiment(FIG, OMEGA, 0.01, "bump", 1, L=20.0, h=0.05, dt=0.01, T=0.5)
    assert e["initial_dist"] == pytest.approx(0.01, rel=1e-10)
    assert math.isfinite(e["max_orbital_dist"])


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        nlsdp.Profile.standing_wave(FIG, 0.5)
    assert issubclass(nlsdp.RegimeError, ValueError)
    with pytest.raises(ValueError):
        nlsdp.perturbation_experiment(FIG, OMEGA, 0.01, "wobble")

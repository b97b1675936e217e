"""Double-power NLS with an attractive delta point interaction."""

from ._core import (
    Grid,
    ModelParams,
    NumericalError,
    Profile,
    RegimeError,
    __version__,
    admissible_omega_interval,
    classify_regime,
    composite_path,
    energy,
    evolve,
    find_c0,
    gradient_flow,
    hamiltonian,
    orbital_distance,
    peak_polynomial,
    perturbation_experiment,
    shoot_ivp,
    smallest_eigenvalue,
    verify_profile,
)

__all__ = [
    "Grid",
    "ModelParams",
    "NumericalError",
    "Profile",
    "RegimeError",
    "__version__",
    "admissible_omega_interval",
    "classify_regime",
    "composite_path",
    "energy",
    "evolve",
    "find_c0",
    "gradient_flow",
    "hamiltonian",
    "orbital_distance",
    "peak_polynomial",
    "perturbation_experiment",
    "shoot_ivp",
    "smallest_eigenvalue",
    "verify_profile",
]

"""
Low-lying levels of even one-dimensional Schrodinger problems from the
power series of ``f(E) = 1 - psi'(0) / (psi(0) psi0'(0))`` in the energy.

The zero-energy profile ``psi0`` is computed once; every further order of
the series costs two cumulative quadratures.  Truncated roots of
``f(E) = 1`` approach the ground state geometrically, Shanks and Pade
acceleration recover it faster and expose excited levels, and the truncated
wavefunctions give a variational estimate.  PT-symmetric ``-(ix)^N`` reuses
the ``|x|^N`` coefficients with phase weights.
"""
from .accel import Level, LevelTable, PadeApproximant, level_table, pade, pade_diagonal, pade_levels, shanks
from .eigensolve import (
    EigenEstimate,
    ErrorModel,
    error_model,
    fitted_rates,
    radius_estimate,
    truncated_root,
    truncated_roots,
)
from .errors import (
    BrokenRegime,
    DegenerateSequence,
    EnergySeriesError,
    InsufficientOrder,
    InvalidPotential,
    NoBracket,
    NonDecayingSolution,
    NoPositiveCoefficients,
    NoRealRoot,
    NotConverged,
    NumericalFailure,
    PoleProximity,
    ProfileSingularity,
    SingularPadeSystem,
    TailToleranceUnmet,
    TooShort,
)
from .grid import GridConfig, PanelGrid
from .potential import PotentialSpec, ZeroEnergyProfile, zero_energy_profile
from .ptsym import PTSeries, pt_expectation, pt_root, pt_series
from .series import EnergySeries, advance_order, build_series, eval_f
from .variational import TruncatedWavefunction, assemble, expectation, hamiltonian_residual

__version__ = "0.1.0"

__all__ = [
    "GridConfig",
    "PanelGrid",
    "PotentialSpec",
    "ZeroEnergyProfile",
    "zero_energy_profile",
    "EnergySeries",
    "advance_order",
    "build_series",
    "eval_f",
    "EigenEstimate",
    "ErrorModel",
    "truncated_root",
    "truncated_roots",
    "fitted_rates",
    "radius_estimate",
    "error_model",
    "shanks",
    "pade",
    "pade_levels",
    "pade_diagonal",
    "PadeApproximant",
    "Level",
    "LevelTable",
    "level_table",
    "TruncatedWavefunction",
    "assemble",
    "expectation",
    "hamiltonian_residual",
    "PTSeries",
    "pt_series",
    "pt_root",
    "pt_expectation",
    "EnergySeriesError",
    "NumericalFailure",
    "InvalidPotential",
    "NonDecayingSolution",
    "TailToleranceUnmet",
    "ProfileSingularity",
    "NoPositiveCoefficients",
    "InsufficientOrder",
    "DegenerateSequence",
    "TooShort",
    "SingularPadeSystem",
    "BrokenRegime",
    "NoRealRoot",
    "PoleProximity",
    "NotConverged",
    "NoBracket",
]

"""
Energy power series of the quantization function.

Writing ``psi = psi0 * (1 + sum_k E^k phi_k)`` turns the Schrodinger equation
into the recursion

    phi_k'(x) = psi0(x)^-2 * int_x^inf psi0^2 phi_{k-1}
    phi_k(x)  = int_0^x phi_k'

with ``phi_0 = 1``.  The coefficients of ``f(E) = sum_k a_k E^k`` are
``a_k = -phi_k'(0) / psi0'(0)``.  One backward and one forward cumulative
quadrature per order replace the 2k-fold nested integral.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .errors import InsufficientOrder, ProfileSingularity
from .grid import GridConfig
from .potential import SQUARE_WELL, PotentialSpec, ZeroEnergyProfile, zero_energy_profile

# psi0^2 below this is treated as underflowed
_TINY = 1e-280


@dataclass(frozen=True)
class EnergySeries:
    """
    Coefficients ``a_1..a_n`` of ``f(E)`` with the grids they came from.

    ``phi[k]`` and ``dphi[k]`` hold ``phi_k`` and ``phi_k'`` on the profile
    grid, ``phi[0] = 1``.  ``errors[k-1]`` is the difference of ``a_k`` from a
    run at half the resolution (``nan`` when no companion run is kept).
    """

    profile: ZeroEnergyProfile = field(repr=False)
    phi: tuple = field(repr=False)
    dphi: tuple = field(repr=False)
    coefficients: tuple = ()
    errors: tuple = ()
    companion: "EnergySeries | None" = field(default=None, repr=False)

    @property
    def order(self) -> int:
        return len(self.coefficients)

    @property
    def spec(self) -> PotentialSpec:
        return self.profile.spec

    @property
    def a(self) -> np.ndarray:
        return np.asarray(self.coefficients, dtype=float)

    def __len__(self):
        return self.order

    def truncated(self, n: int) -> "EnergySeries":
        """The same series restricted to its first ``n`` orders."""
        require_order(self, n)
        comp = self.companion.truncated(n) if self.companion is not None else None
        return replace(self, phi=self.phi[: n + 1], dphi=self.dphi[: n + 1],
                       coefficients=self.coefficients[:n], errors=self.errors[:n],
                       companion=comp)


def require_order(series: EnergySeries, n: int):
    if n > series.order:
        raise InsufficientOrder(f"need {n} coefficients, series has {series.order}")


def start_series(profile: ZeroEnergyProfile, companion: ZeroEnergyProfile | None = None) -> EnergySeries:
    """Order-0 series: ``phi_0 = 1`` and no coefficients."""
    ones = np.ones_like(profile.x)
    zeros = np.zeros_like(profile.x)
    comp = start_series(companion) if companion is not None else None
    return EnergySeries(profile, (ones,), (zeros,), (), (), comp)


def advance_order(series: EnergySeries) -> EnergySeries:
    """Append the next order ``k``: ``phi_k``, ``phi_k'`` and ``a_k``."""
    prof = series.profile
    grid = prof.grid
    w = prof.psi0 ** 2
    prev = series.phi[-1]

    tail = prof.tail_integral(prev[-1])
    T = grid.cumulative_from_end(w * prev, tail)

    dphi = np.empty_like(T)
    if prof.spec.kind == SQUARE_WELL:
        # T ~ (1-x)^3 phi(1)/3 at the wall, so T/psi0^2 -> 0
        dphi[:-1] = T[:-1] / w[:-1]
        dphi[-1] = 0.0
    else:
        bad = w < _TINY
        if np.any(bad):
            raise ProfileSingularity(
                f"psi0^2 underflows at x={prof.x[np.argmax(bad)]:g} before the tail integral does")
        dphi[:] = T / w
    phi = grid.cumulative(dphi)
    phi[0] = 0.0

    a_k = float(T[0] / -prof.slope_at_origin)
    comp = advance_order(series.companion) if series.companion is not None else None
    err = abs(a_k - comp.coefficients[-1]) if comp is not None else float("nan")
    return replace(series, phi=series.phi + (phi,), dphi=series.dphi + (dphi,),
                   coefficients=series.coefficients + (a_k,),
                   errors=series.errors + (err,), companion=comp)


def build_series(spec: PotentialSpec | ZeroEnergyProfile, order: int,
                 grid_config: GridConfig | None = None, error_estimates: bool = True) -> EnergySeries:
    """
    Compute ``a_1..a_order`` for a potential.

    With ``error_estimates`` a second profile at twice the panel width is
    carried along and ``errors`` holds the per-coefficient differences.
    PT powers are expanded with the coefficients of their Hermitian partner.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    if isinstance(spec, ZeroEnergyProfile):
        profile = spec
        cfg = profile.config
    else:
        cfg = grid_config or GridConfig.from_env()
        profile = zero_energy_profile(spec.hermitian_partner(), cfg)
    companion = None
    if error_estimates:
        companion = zero_energy_profile(profile.spec, cfg.refined(0.5))
    s = start_series(profile, companion)
    for _ in range(order):
        s = advance_order(s)
    return s


def eval_f(series: EnergySeries | np.ndarray, E, n: int | None = None):
    """Partial sum ``f_n(E) = sum_{k<=n} a_k E^k`` by Horner's scheme."""
    a = series.a if isinstance(series, EnergySeries) else np.asarray(series, dtype=float)
    if n is not None:
        if n > a.size:
            raise InsufficientOrder(f"need {n} coefficients, have {a.size}")
        a = a[:n]
    E = np.asarray(E, dtype=float) if not np.iscomplexobj(E) else np.asarray(E)
    acc = np.zeros_like(E)
    for c in a[::-1]:
        acc = (acc + c) * E
    return acc if acc.ndim else acc[()]

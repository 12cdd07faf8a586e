"""
Potential families and the zero-energy profile.

The profile ``psi0`` solves ``psi0'' = V psi0`` on the half-line with
``psi0(0) = 1`` and ``psi0(inf) = 0``.  Everything downstream depends on the
potential only through this function.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import InvalidPotential, NonDecayingSolution, TailToleranceUnmet
from .grid import GridConfig, PanelGrid

POWER = "power"
SQUARE_WELL = "square-well"
PT_POWER = "ptpower"

SPEC_GRAMMAR = "power:N (N > 0) | square-well | ptpower:N (N >= 2)"


@dataclass(frozen=True)
class PotentialSpec:
    """
    Declarative description of an even potential.

    ``kind`` is one of ``"power"`` (``V = |x|^N``), ``"square-well"``
    (``V = 0`` for ``|x| < 1``, infinite walls) or ``"ptpower"``
    (``V = -(ix)^N`` posed on the Stokes line).
    """

    kind: str
    N: float = math.inf

    def __post_init__(self):
        if self.kind == POWER:
            if not (math.isfinite(self.N) and self.N > 0):
                raise InvalidPotential(f"power-law exponent must be positive and finite, got {self.N}")
        elif self.kind == PT_POWER:
            if not (math.isfinite(self.N) and self.N >= 2):
                raise InvalidPotential(
                    f"PT power must satisfy N >= 2 (unbroken regime), got {self.N}")
        elif self.kind == SQUARE_WELL:
            object.__setattr__(self, "N", math.inf)
        else:
            raise InvalidPotential(f"unknown potential kind {self.kind!r}; expected {SPEC_GRAMMAR}")

    @classmethod
    def power(cls, N: float) -> "PotentialSpec":
        return cls(POWER, float(N))

    @classmethod
    def square_well(cls) -> "PotentialSpec":
        return cls(SQUARE_WELL)

    @classmethod
    def pt_power(cls, N: float) -> "PotentialSpec":
        return cls(PT_POWER, float(N))

    @classmethod
    def parse(cls, text: str) -> "PotentialSpec":
        """Parse ``power:N``, ``square-well`` or ``ptpower:N``."""
        s = text.strip().lower()
        if s in (SQUARE_WELL, "square_well", "squarewell"):
            return cls.square_well()
        m = re.fullmatch(r"(power|ptpower):([-+0-9.eE]+)", s)
        if m is None:
            raise InvalidPotential(f"cannot parse potential {text!r}; expected {SPEC_GRAMMAR}")
        try:
            N = float(m.group(2))
        except ValueError:
            raise InvalidPotential(f"bad exponent in {text!r}; expected {SPEC_GRAMMAR}") from None
        return cls(m.group(1), N)

    @property
    def label(self) -> str:
        if self.kind == SQUARE_WELL:
            return SQUARE_WELL
        return f"{self.kind}:{self.N:g}"

    @property
    def is_hermitian(self) -> bool:
        return self.kind != PT_POWER

    @property
    def theta(self) -> float:
        """
        Stokes-line angle ``(N - 2) pi / (2N + 4)``; only meaningful for PT powers.

        This is the ray on which ``-(iz)^N`` turns into ``+x^N`` up to the
        factor ``exp(2i theta)``; it equals ``pi/10`` at ``N = 3`` and ``0`` at
        ``N = 2``, where the problem is the harmonic oscillator.
        """
        if self.kind != PT_POWER:
            raise AttributeError("theta is defined only for PT-symmetric powers")
        return (self.N - 2.0) * math.pi / (2.0 * self.N + 4.0)

    def hermitian_partner(self) -> "PotentialSpec":
        """``|x|^N`` for a PT power, the potential itself otherwise."""
        return PotentialSpec.power(self.N) if self.kind == PT_POWER else self

    def __call__(self, x):
        """Real potential entering ``psi0'' = V psi0`` (``|x|^N`` for PT powers)."""
        x = np.asarray(x, dtype=float)
        if self.kind == SQUARE_WELL:
            return np.where(np.abs(x) < 1.0, 0.0, np.inf)
        return np.abs(x) ** self.N


@dataclass(frozen=True)
class ZeroEnergyProfile:
    """
    ``psi0`` and ``psi0'`` sampled on a panel grid over ``[0, x_max]``.

    ``tail_mass`` estimates ``int_{x_max}^inf psi0^2``; ``decay_rate`` is
    ``-psi0'/psi0`` at ``x_max`` and drives the asymptotic tail corrections
    (zero for the square well, whose profile vanishes at the wall).
    """

    spec: PotentialSpec
    grid: PanelGrid = field(repr=False)
    psi0: np.ndarray = field(repr=False)
    dpsi0: np.ndarray = field(repr=False)
    x_max: float
    tail_mass: float
    config: GridConfig

    @property
    def x(self) -> np.ndarray:
        return self.grid.x

    @property
    def slope_at_origin(self) -> float:
        return float(self.dpsi0[0])

    @property
    def decay_rate(self) -> float:
        if self.spec.kind == SQUARE_WELL:
            return 0.0
        return float(-self.dpsi0[-1] / self.psi0[-1])

    def potential(self) -> np.ndarray:
        if self.spec.kind == SQUARE_WELL:
            return np.zeros_like(self.x)
        return self.spec(self.x)

    def residual(self) -> float:
        """Largest ``|psi0'' - V psi0|`` over interior points."""
        d2 = self.grid.derivative(self.dpsi0)
        r = np.abs(d2 - self.potential() * self.psi0)
        return float(np.max(r[1:-1]))

    def tail_integral(self, values_at_end: float) -> float:
        """Laplace estimate of ``int_{x_max}^inf psi0^2 g`` for slowly varying ``g``."""
        k = self.decay_rate
        if k <= 0:
            return 0.0
        return float(self.psi0[-1] ** 2 * values_at_end / (2.0 * k))


def _asymptotic_log_derivative(x: float, N: float) -> float:
    """``d/dx ln(x^(1/2) K_nu(z))`` from the large-z expansion, ``z = x^m/m``."""
    m = 1.0 + 0.5 * N
    nu = 1.0 / (N + 2.0)
    z = x ** m / m
    mu = 4.0 * nu * nu
    c1 = (mu - 1.0) / 8.0
    dlogk = -1.0 - 0.5 / z - (c1 / z ** 2) / (1.0 + c1 / z)
    return 0.5 / x + dlogk * x ** (m - 1.0)


def _asymptotic_tail_mass(x: float, N: float) -> float:
    """Leading-order ``int_x^inf psi0^2`` with the closed-form normalisation psi0(0) = 1."""
    m = 1.0 + 0.5 * N
    nu = 1.0 / (N + 2.0)
    z = x ** m / m
    log_c = math.log(2.0) - nu * math.log(N + 2.0) - math.lgamma(nu)
    log_psi = log_c + 0.5 * math.log(x) + 0.5 * math.log(math.pi / (2.0 * z)) - z
    kappa = -_asymptotic_log_derivative(x, N)
    return math.exp(2.0 * log_psi) / (2.0 * kappa)


def choose_x_max(N: float, tail_tol: float, cap: float) -> float:
    """Smallest ``x`` whose estimated tail mass is below ``tail_tol`` (to 1e-3)."""
    # the expansion is trusted only once z = x^m/m exceeds 4
    m = 1.0 + 0.5 * N
    lo = hi = (4.0 * m) ** (1.0 / m)
    while _asymptotic_tail_mass(hi, N) > tail_tol:
        lo, hi = hi, 2.0 * hi
        if lo > cap:
            raise TailToleranceUnmet(
                f"tail mass above {tail_tol:g} at the x_max cap {cap:g} for N={N:g}")
    while hi - lo > 1e-3:
        mid = 0.5 * (lo + hi)
        if _asymptotic_tail_mass(mid, N) > tail_tol:
            lo = mid
        else:
            hi = mid
    if hi > cap:
        raise TailToleranceUnmet(
            f"tail mass above {tail_tol:g} at the x_max cap {cap:g} for N={N:g}")
    return hi


def _integer_like(N: float) -> bool:
    return Fraction(N).denominator == 1


def _march_backward(grid: PanelGrid, V: np.ndarray, log_slope_end: float):
    """
    Collocation march from ``x_max`` to 0 for the decaying solution.

    Integrating toward the origin the decaying solution is the dominant one,
    so the march is stable.  Each panel solves the integral form
    ``u = u_b - int_x^b v``, ``v = v_b - int_x^b V u``, which stays well
    conditioned on the tiny panels near the origin, and is rescaled to unit
    value at its left edge; the accumulated log scale is returned alongside.
    """
    p = grid.p
    n = grid.n_panels
    m = p + 1
    eye = np.eye(m)
    vals = np.empty((n, m))
    ders = np.empty((n, m))
    log_left = np.empty(n)
    u_b, du_b, log_b = 1.0, log_slope_end, 0.0
    for i in range(n - 1, -1, -1):
        B = grid.panel_integration_from_end(i)
        A = np.block([[eye, B], [B * V[grid.index[i]][None, :], eye]])
        rhs = np.concatenate((np.full(m, u_b), np.full(m, du_b)))
        sol = np.linalg.solve(A, rhs)
        u, du = sol[:m], sol[m:]
        scale = u[0]
        if not scale > 0:
            raise NonDecayingSolution(
                f"backward integration produced a non-positive value at x={grid.edges[i]:g}")
        vals[i] = u / scale
        ders[i] = du / scale
        log_left[i] = log_b + math.log(scale)
        u_b, du_b, log_b = 1.0, ders[i, 0], log_left[i]
    return vals, ders, log_left


def zero_energy_profile(spec: PotentialSpec, grid_config: GridConfig | None = None) -> ZeroEnergyProfile:
    """
    Solve ``psi0'' = V psi0``, ``psi0(0) = 1``, ``psi0(inf) = 0``.

    The square well has the exact profile ``1 - x`` on ``[0, 1]``.  Power
    laws are integrated backward from a truncation point chosen so that the
    neglected ``int psi0^2`` is below ``grid_config.tail_tol``, seeded with the
    decaying Bessel-K asymptotics and rescaled to ``psi0(0) = 1``.  PT powers
    share the profile of ``|x|^N``.
    """
    cfg = grid_config or GridConfig()
    if spec.kind == SQUARE_WELL:
        grid = PanelGrid.graded(1.0, cfg.base_step, cfg.nodes)
        x = grid.x
        return ZeroEnergyProfile(spec, grid, 1.0 - x, -np.ones_like(x), 1.0, 0.0, cfg)

    N = spec.N
    x_max = choose_x_max(N, cfg.tail_tol, cfg.xmax_cap)
    while True:
        try:
            profile = _power_profile(spec, cfg, x_max)
        except NonDecayingSolution:
            profile = None
        if profile is not None and profile.tail_mass <= cfg.tail_tol:
            return profile
        if x_max >= cfg.xmax_cap:
            if profile is None:
                raise NonDecayingSolution(f"profile for {spec.label} is not positive and decreasing")
            raise TailToleranceUnmet(
                f"tail mass {profile.tail_mass:.3g} exceeds {cfg.tail_tol:g} at the cap x_max={x_max:g}")
        x_max = min(1.25 * x_max, cfg.xmax_cap)


def _power_profile(spec: PotentialSpec, cfg: GridConfig, x_max: float) -> ZeroEnergyProfile:
    N = spec.N
    grid = PanelGrid.graded(
        x_max, cfg.base_step, cfg.nodes,
        scale=lambda s: 1.0 if s <= 1.0 else s ** (-0.5 * N),
        origin_levels=0 if _integer_like(N) else 12,
    )
    V = spec.hermitian_partner()(grid.x)
    vals, ders, log_left = _march_backward(grid, V, _asymptotic_log_derivative(x_max, N))
    log_left = log_left - log_left[0]
    vals = vals * np.exp(log_left)[:, None]
    ders = ders * np.exp(log_left)[:, None]
    psi0 = np.empty(grid.size)
    dpsi0 = np.empty(grid.size)
    psi0[grid.index] = vals
    dpsi0[grid.index] = ders
    psi0[0] = 1.0

    if np.any(psi0 <= 0) or np.any(np.diff(psi0) >= 0) or not dpsi0[0] < 0:
        raise NonDecayingSolution(f"profile for {spec.label} is not positive and decreasing")
    tail = psi0[-1] ** 2 / (2.0 * (-dpsi0[-1] / psi0[-1]))
    return ZeroEnergyProfile(spec, grid, psi0, dpsi0, x_max, float(tail), cfg)

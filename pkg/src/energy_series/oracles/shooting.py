"""
Brute-force eigenvalues by shooting, independent of the energy series.

Hermitian levels integrate outward from the origin with the parity initial
data and bisect on the number of nodes: level ``k`` has ``k // 2`` nodes on
the open half-line, and a further node enters from the right edge as ``E``
crosses it.  The PT ground state integrates inward along the two Stokes
rays and bisects on the matching condition at the origin.
"""
from __future__ import annotations

import math
from functools import lru_cache

import numpy as np
from scipy.integrate import quad, solve_ivp
from scipy.optimize import brentq

from ..errors import InvalidPotential, NotConverged
from ..potential import POWER, PT_POWER, SQUARE_WELL, PotentialSpec
from .result import PT_SHOOTING, SHOOTING_LEVEL, OracleResult

MAX_INDEX = 12
RTOL = 1e-12
ATOL = 1e-14
DECAY_EXPONENT = 25.0
SAMPLES = 4000


def _outward(spec: PotentialSpec, E: float, odd: bool, x_end: float) -> np.ndarray:
    N = spec.N

    def rhs(x, y):
        V = 0.0 if spec.kind == SQUARE_WELL else x ** N
        return [y[1], (V - E) * y[0]]

    y0 = [0.0, 1.0] if odd else [1.0, 0.0]
    t = np.linspace(0.0, x_end, SAMPLES + 1)
    sol = solve_ivp(rhs, (0.0, x_end), y0, method="DOP853", t_eval=t, rtol=RTOL, atol=ATOL)
    if not sol.success:
        raise NotConverged(f"shooting integration failed at E={E!r}: {sol.message}")
    return sol.y[0]


def _nodes(psi: np.ndarray) -> int:
    s = np.sign(psi[1:])
    s = s[s != 0]
    return int(np.count_nonzero(s[1:] != s[:-1]))


def _matching_edge(N: float, E: float) -> float:
    """Point where ``int sqrt(x^N - E)`` past the turning point reaches ``DECAY_EXPONENT``."""
    xt = E ** (1.0 / N)
    x = xt + 1.0
    while quad(lambda s: math.sqrt(max(s ** N - E, 0.0)), xt, x)[0] < DECAY_EXPONENT:
        x = xt + 1.5 * (x - xt)
    return x


def _upper_guess(spec: PotentialSpec, index: int) -> float:
    if spec.kind == SQUARE_WELL:
        return (index + 2) ** 2 * math.pi ** 2 / 4.0 + 1.0
    # semiclassical count with generous headroom
    N = spec.N
    c = 2.0 * math.gamma(1.0 + 1.0 / N) * math.gamma(1.5) / math.gamma(1.5 + 1.0 / N)
    return 2.0 * ((index + 1.5) * math.pi / c) ** (2.0 * N / (N + 2.0)) + 2.0


@lru_cache(maxsize=256)
def _level(kind: str, N: float, index: int) -> tuple:
    spec = PotentialSpec(kind, N)
    odd = index % 2 == 1
    target = index // 2
    hi = _upper_guess(spec, index)
    x_end = 1.0 if kind == SQUARE_WELL else _matching_edge(N, hi)

    def count(E):
        return _nodes(_outward(spec, E, odd, x_end))

    lo, c_lo, c_hi = 0.0, 0, count(hi)
    if c_hi <= target:
        raise NotConverged(f"upper bracket {hi:g} holds too few nodes for level {index} of {spec.label}")
    # node counting isolates the level, then psi(x_end) changes sign across it
    for _ in range(200):
        if c_lo == target and c_hi == target + 1:
            break
        mid = 0.5 * (lo + hi)
        c = count(mid)
        if c <= target:
            lo, c_lo = mid, c
        else:
            hi, c_hi = mid, c
    else:
        raise NotConverged(f"could not isolate level {index} of {spec.label} in [{lo!r}, {hi!r}]")
    tail = lambda E: _outward(spec, E, odd, x_end)[-1]
    try:
        value = brentq(tail, lo, hi, xtol=1e-13, rtol=1e-15)
    except ValueError as exc:
        raise NotConverged(f"level {index} of {spec.label}: no sign change of psi(x_end) "
                           f"on [{lo!r}, {hi!r}]") from exc
    return value, x_end


def shooting_level(spec: PotentialSpec, index: int) -> OracleResult:
    """
    Level ``index`` (0 = ground) of a Hermitian potential to ~1e-10.

    Parity alternates with ``index``: even levels shoot with
    ``psi'(0) = 0``, odd levels with ``psi(0) = 0``.
    """
    if not spec.is_hermitian:
        raise InvalidPotential("shooting_level handles Hermitian potentials; use pt_ground_state")
    if not 0 <= index <= MAX_INDEX:
        raise InvalidPotential(f"shooting oracle covers levels 0..{MAX_INDEX}, got {index}")
    value, x_end = _level(spec.kind, float(spec.N), int(index))
    parity = "Odd" if index % 2 else "Even"
    return OracleResult(value, SHOOTING_LEVEL,
                        {"potential": spec.label, "index": index, "parity": parity, "x_end": x_end})


def _ray_log_derivative(N: float, theta: float, E: float, x_end: float) -> complex:
    """
    ``psi_z(0) / psi(0)`` for the solution decaying along ``z = exp(-i theta) x``.

    On the ray the equation is ``-psi_xx + x^N psi = exp(-2i theta) E psi``.
    """
    w = complex(math.cos(2 * theta), -math.sin(2 * theta)) * E

    def rhs(x, y):
        return [y[1], (x ** N - w) * y[0]]

    q = x_end ** N - w
    k = np.sqrt(q)
    y0 = [1.0 + 0j, -k - 0.25 * N * x_end ** (N - 1) / q]
    sol = solve_ivp(rhs, (x_end, 0.0), y0, method="DOP853", rtol=RTOL, atol=1e-300)
    if not sol.success:
        raise NotConverged(f"ray integration failed at E={E!r}: {sol.message}")
    psi, dpsi = sol.y[0, -1], sol.y[1, -1]
    return complex(math.cos(theta), math.sin(theta)) * dpsi / psi


@lru_cache(maxsize=16)
def _pt_ground(N: float) -> tuple:
    theta = (N - 2.0) * math.pi / (2.0 * N + 4.0)
    x_end = _matching_edge(N, 4.0)
    g = lambda E: _ray_log_derivative(N, theta, E, x_end).real
    grid = np.linspace(0.05, 4.0, 40)
    vals = [g(E) for E in grid]
    for i in range(len(grid) - 1):
        if vals[i] * vals[i + 1] < 0:
            break
    else:
        raise NotConverged(f"no PT ground state of -(ix)^{N:g} found on (0, 4]")
    value = brentq(g, grid[i], grid[i + 1], xtol=1e-14, rtol=1e-15)
    return value, theta, x_end


def pt_ground_state(N: float) -> OracleResult:
    """
    Ground energy of ``p^2 - (ix)^N`` by shooting along the Stokes rays.

    A PT-symmetric eigenfunction satisfies ``psi(-conj z) = conj psi(z)``,
    so matching the left and right ray solutions at the origin reduces to
    ``Re(psi_z(0) / psi(0)) = 0`` for real ``E``.
    """
    if N < 2:
        raise InvalidPotential(f"PT oracle needs N >= 2, got {N}")
    value, theta, x_end = _pt_ground(float(N))
    return OracleResult(value, PT_SHOOTING,
                        {"potential": PotentialSpec(PT_POWER, float(N)).label, "index": 0,
                         "theta": theta, "x_end": x_end})

"""
PT-symmetric potentials ``-(ix)^N`` on the Stokes line ``z = exp(-i theta) x``.

On that ray the equation becomes ``-psi'' + x^N psi = lambda^2 E psi`` with
``lambda = exp(-i theta)``, ``theta = (N-2) pi/(2N+4)`` (``pi/10`` for
``ix^3``), so the Hermitian ``|x|^N``
grids are reused and only phases change: the quantization condition weights
``a_k`` by ``cos((2k-1) theta) / cos(theta)``, and every integral entering
``<H>_n`` is a real integral times ``cos((2m+1) theta)``.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .eigensolve import EVEN, EXPECTATION, PT_ROOT, EigenEstimate, radius_estimate
from .errors import BrokenRegime, InvalidPotential, NoRealRoot
from .potential import POWER, PT_POWER
from .series import EnergySeries, eval_f, require_order

log = logging.getLogger(__name__)

SCAN_POINTS = 4000


def phase_cos(m: int, N: float, theta: float | None = None) -> float:
    """
    ``cos(m theta)`` with ``theta = (N-2) pi/(2N+4)``.

    Returns an exact 0.0 when ``m theta`` is an odd multiple of ``pi/2``,
    decided on the rational ``m (N-2) / (2N+4)`` rather than by rounding.
    """
    if theta is not None:
        return math.cos(m * theta)
    FN = Fraction(N)
    q = Fraction(m) * (FN - 2) / (2 * FN + 4)
    if (q - Fraction(1, 2)).denominator == 1:
        return 0.0
    return math.cos(float(q) * math.pi)


@dataclass(frozen=True)
class PTSeries:
    """Hermitian ``|x|^N`` series with the Stokes-line phase weights applied."""

    base: EnergySeries = field(repr=False)
    N: float
    theta: float
    weights: np.ndarray
    coefficients: np.ndarray
    exact_phases: bool = True

    @property
    def order(self) -> int:
        return self.coefficients.size

    def phase(self, m: int) -> float:
        return phase_cos(m, self.N, None if self.exact_phases else self.theta)


def pt_series(series: EnergySeries, N: float, theta: float | None = None) -> PTSeries:
    """
    Weight ``a_k`` by ``cos((2k-1) theta) / cos(theta)``.

    ``theta`` defaults to ``(N-2) pi/(2N+4)``; passing another value (``0`` gives
    back the Hermitian problem) is meant for limit checks.
    """
    if N < 2:
        raise BrokenRegime(f"PT symmetry is broken for N={N:g} < 2")
    spec = series.spec
    if not (spec.kind in (POWER, PT_POWER) and spec.N == N):
        raise InvalidPotential(f"series was built for {spec.label}, not |x|^{N:g}")
    exact = theta is None
    th = (N - 2.0) * math.pi / (2.0 * N + 4.0) if exact else float(theta)
    pick = (lambda m: phase_cos(m, N)) if exact else (lambda m: math.cos(m * th))
    c1 = pick(1)
    w = np.array([pick(2 * k - 1) / c1 for k in range(1, series.order + 1)])
    return PTSeries(series, float(N), th, w, series.a * w, exact)


def _scan_max(pt: PTSeries) -> float:
    if pt.base.order >= 3:
        return 3.0 * radius_estimate(pt.base)
    return 3.0 / pt.base.a[0]


def pt_roots(pt: PTSeries, n: int) -> list:
    """All sign changes of ``sum_{k<=n} a_k^PT E^k - 1`` on ``(0, E_scan_max]``, refined."""
    require_order(pt.base, n)
    a = pt.coefficients[:n]
    g = lambda E: eval_f(a, E) - 1.0
    grid = np.linspace(0.0, _scan_max(pt), SCAN_POINTS + 1)
    vals = g(grid)
    roots = []
    for i in np.nonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) <= 0)[0]:
        lo, hi = grid[i], grid[i + 1]
        glo = vals[i]
        if glo == 0.0:
            roots.append(float(lo))
            continue
        while hi - lo > 1e-15 * hi:
            mid = 0.5 * (lo + hi)
            if mid <= lo or mid >= hi:
                break
            gm = g(mid)
            if np.sign(gm) == np.sign(glo):
                lo, glo = mid, gm
            else:
                hi = mid
        roots.append(0.5 * (lo + hi))
    return sorted(set(roots))


def pt_root(pt: PTSeries, n: int) -> EigenEstimate:
    """Smallest positive root of the phase-weighted truncation (not monotone in ``n``)."""
    roots = pt_roots(pt, n)
    if not roots:
        raise NoRealRoot(f"no sign change of the order-{n} PT condition on (0, {_scan_max(pt):g}]")
    if len(roots) > 1:
        log.info("order %d PT condition has further roots %s", n, roots[1:])
    err = math.nan
    if n >= 2:
        prev = pt_roots(pt, n - 1)
        if prev:
            err = abs(roots[0] - prev[0])
    return EigenEstimate(n, roots[0], PT_ROOT, err, EVEN)


def _moments(series: EnergySeries, n: int) -> np.ndarray:
    """``M_jk = int_0^inf psi0^2 phi_j phi_k`` for ``j, k <= n``."""
    prof = series.profile
    w2 = prof.psi0 ** 2
    weights = prof.grid.weights
    tail = prof.tail_integral(1.0)
    M = np.empty((n + 1, n + 1))
    for j in range(n + 1):
        for k in range(j, n + 1):
            pj, pk = series.phi[j], series.phi[k]
            M[j, k] = M[k, j] = weights @ (w2 * pj * pk) + tail * pj[-1] * pk[-1]
    return M


def pt_expectation(pt: PTSeries, n: int) -> EigenEstimate:
    """
    ``<H>_n`` for the PT problem.

    The truncated wavefunctions carry ``lambda^2 E_n`` in place of ``E``;
    integrating over the PT-symmetric contour leaves twice the real part of
    ``lambda int_0^inf``, i.e. the moments ``M_jk`` weighted by
    ``cos((2(j+k)+1) theta)``.
    """
    E = pt_root(pt, n).value
    M = _moments(pt.base, n)

    def form(rows: int, cols: int) -> float:
        s = 0.0
        for j in range(rows + 1):
            for k in range(cols + 1):
                s += pt.phase(2 * (j + k) + 1) * E ** (j + k) * M[j, k]
        return s

    value = E * form(n, n - 1) / form(n, n)
    return EigenEstimate(n, float(value), EXPECTATION, math.nan, EVEN)

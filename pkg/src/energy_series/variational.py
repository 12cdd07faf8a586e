"""
Truncated wavefunctions and the expectation value of the Hamiltonian.

``Psi_n = psi0 (1 + sum_{k<=n} E^k phi_k)`` obeys ``H Psi_n = E Psi_{n-1}``
exactly, so ``<H>_n = E_n int Psi_n Psi_{n-1} / int Psi_n^2`` on the half-line.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .eigensolve import EVEN, EXPECTATION, EigenEstimate, truncated_root
from .errors import InsufficientOrder
from .series import EnergySeries, require_order


@dataclass(frozen=True)
class TruncatedWavefunction:
    """``Psi_n`` sampled on the profile grid (complex when ``energy`` is)."""

    values: np.ndarray = field(repr=False)
    derivative: np.ndarray = field(repr=False)
    energy: complex
    order: int
    series: EnergySeries = field(repr=False)

    @property
    def x(self) -> np.ndarray:
        return self.series.profile.x

    @property
    def grid(self):
        return self.series.profile.grid


def _bracket(series: EnergySeries, n: int, E):
    """``1 + sum_{k<=n} E^k phi_k`` and its derivative."""
    acc = np.ones_like(series.phi[0], dtype=np.result_type(E, float))
    dacc = np.zeros_like(acc)
    Ek = 1.0
    for k in range(1, n + 1):
        Ek = Ek * E
        acc = acc + Ek * series.phi[k]
        dacc = dacc + Ek * series.dphi[k]
    return acc, dacc


def assemble(series: EnergySeries, n: int, E=None) -> TruncatedWavefunction:
    """``Psi_n`` at energy ``E`` (default: the truncated root ``E_n``)."""
    if n < 0:
        raise InsufficientOrder("order must be non-negative")
    require_order(series, n)
    if E is None:
        E = truncated_root(series, n).value if n >= 1 else 0.0
    prof = series.profile
    b, db = _bracket(series, n, E)
    values = prof.psi0 * b
    deriv = prof.dpsi0 * b + prof.psi0 * db
    return TruncatedWavefunction(values, deriv, E, n, series)


def overlap(u: TruncatedWavefunction, v: TruncatedWavefunction):
    """``int_0^inf u v`` (no conjugation) with the asymptotic tail added."""
    prof = u.series.profile
    body = u.grid.weights @ (u.values * v.values)
    bu, _ = _bracket(u.series, u.order, u.energy)
    bv, _ = _bracket(v.series, v.order, v.energy)
    return body + prof.tail_integral(1.0) * bu[-1] * bv[-1]


def hamiltonian_residual(series: EnergySeries, n: int, E=None) -> float:
    """Largest ``|-Psi_n'' + V Psi_n - E Psi_{n-1}|`` over interior grid points."""
    if n < 1:
        raise InsufficientOrder("residual identity needs n >= 1")
    wf = assemble(series, n, E)
    lower = assemble(series, n - 1, wf.energy)
    d2 = wf.grid.derivative(wf.derivative)
    V = series.profile.potential()
    r = np.abs(-d2 + V * wf.values - wf.energy * lower.values)
    return float(np.max(r[1:-1]))


def _expectation_value(series: EnergySeries, n: int) -> tuple:
    E = truncated_root(series, n).value
    upper = assemble(series, n, E)
    lower = assemble(series, n - 1, E)
    return E, float(E * overlap(upper, lower) / overlap(upper, upper))


def expectation(series: EnergySeries, n: int) -> EigenEstimate:
    """
    ``<H>_n`` in the state ``Psi_n`` built at ``E = E_n``.

    The error estimate is the change against the half-resolution companion
    series when one is attached.
    """
    if n < 1:
        raise InsufficientOrder("expectation value needs n >= 1")
    require_order(series, n)
    _, value = _expectation_value(series, n)
    err = math.nan
    if series.companion is not None:
        err = abs(value - _expectation_value(series.companion, n)[1])
    return EigenEstimate(n, value, EXPECTATION, err, EVEN)

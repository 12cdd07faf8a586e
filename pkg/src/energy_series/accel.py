"""
Sequence acceleration and analytic continuation of ``f(E)``.

Zeros of ``P - 1`` for a Pade approximant ``P`` of ``f`` approximate the
even-parity levels, its poles the odd-parity levels.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import polynomial as P

from .eigensolve import EVEN, ODD, PADE
from .errors import InsufficientOrder, SingularPadeSystem, TooShort
from .series import EnergySeries

log = logging.getLogger(__name__)

SHANKS_DENOM_TOL = 1e-14
FROISSART_TOL = 1e-6
REAL_TOL = 1e-8


def shanks(seq) -> np.ma.MaskedArray:
    """
    One pass of the Shanks transform.

    ``S_n = (A_{n+1} A_{n-1} - A_n^2) / (A_{n+1} + A_{n-1} - 2 A_n)`` for the
    interior points of ``seq``.  Entries whose denominator is below
    ``SHANKS_DENOM_TOL`` are degenerate and come back masked.
    """
    A = np.asarray(seq, dtype=float)
    if A.ndim != 1 or A.size < 3:
        raise TooShort(f"Shanks transform needs at least 3 terms, got {A.size}")
    prev, cur, nxt = A[:-2], A[1:-1], A[2:]
    den = nxt + prev - 2.0 * cur
    degenerate = np.abs(den) < SHANKS_DENOM_TOL
    safe = np.where(degenerate, 1.0, den)
    out = np.where(degenerate, np.nan, (nxt * prev - cur * cur) / safe)
    return np.ma.masked_array(out, mask=degenerate)


def _poly_roots(c: np.ndarray) -> np.ndarray:
    """Roots of an ascending-coefficient polynomial (companion-matrix eigenvalues)."""
    c = np.trim_zeros(np.asarray(c, dtype=float), "b")
    if c.size <= 1:
        return np.empty(0, dtype=complex)
    return P.polyroots(c).astype(complex)


def _real_positive(z: np.ndarray, what: str) -> np.ndarray:
    keep = []
    for r in z:
        if abs(r.imag) <= REAL_TOL * max(abs(r), 1.0):
            if r.real > 0:
                keep.append(r.real)
        else:
            log.info("excluding complex %s %s", what, r)
    return np.sort(np.array(keep, dtype=float))


@dataclass(frozen=True)
class PadeApproximant:
    """
    ``[L/M]`` approximant ``num(E) / den(E)`` with ``den(0) = 1``.

    Coefficients are ascending.  ``zeros`` are the roots of ``num - den``
    (where the approximant equals 1), ``poles`` the roots of ``den``.
    ``even_levels`` and ``odd_levels`` keep the real positive ones that
    survive Froissart filtering; removed doublets are listed in ``spurious``.
    """

    num: np.ndarray
    den: np.ndarray
    poles: np.ndarray = field(repr=False)
    zeros: np.ndarray = field(repr=False)
    even_levels: np.ndarray
    odd_levels: np.ndarray
    spurious: tuple = ()

    @property
    def L(self) -> int:
        return self.num.size - 1

    @property
    def M(self) -> int:
        return self.den.size - 1

    def __call__(self, E):
        return P.polyval(E, self.num) / P.polyval(E, self.den)

    def taylor(self, n: int) -> np.ndarray:
        """First ``n + 1`` Taylor coefficients ``c_0..c_n`` of ``num/den``."""
        c = np.zeros(n + 1)
        for k in range(n + 1):
            acc = self.num[k] if k < self.num.size else 0.0
            for j in range(1, min(k, self.M) + 1):
                acc -= self.den[j] * c[k - j]
            c[k] = acc
        return c

    def levels(self) -> list:
        """``(value, parity)`` pairs sorted by energy."""
        out = [(float(v), EVEN) for v in self.even_levels] + [(float(v), ODD) for v in self.odd_levels]
        return sorted(out)


def pade(coeffs, L: int, M: int) -> PadeApproximant:
    """
    ``[L/M]`` Pade approximant of the series ``sum_k c_k E^k``.

    ``coeffs`` must hold ``c_0..c_{L+M}``.  The denominator is found from the
    ``M`` linear conditions on orders ``L+1..L+M`` (LU with partial pivoting),
    then the numerator by convolution.
    """
    c = np.asarray(coeffs, dtype=float)
    if c.size < L + M + 1:
        raise InsufficientOrder(f"[{L}/{M}] Pade needs {L + M + 1} series terms, got {c.size}")
    if M > 0:
        A = np.array([[c[L + i - j] if L + i - j >= 0 else 0.0 for j in range(1, M + 1)]
                      for i in range(1, M + 1)])
        b = -c[L + 1: L + M + 1]
        if np.linalg.matrix_rank(A) < M or np.linalg.cond(A) > 1e14:
            raise SingularPadeSystem(f"[{L}/{M}] Pade system is rank deficient")
        q = np.concatenate(([1.0], np.linalg.solve(A, b)))
    else:
        q = np.ones(1)
    p = np.array([sum(q[j] * c[i - j] for j in range(min(i, M) + 1)) for i in range(L + 1)])

    poles = _poly_roots(q)
    diff = np.zeros(max(L, M) + 1)
    diff[: L + 1] += p
    diff[: M + 1] -= q
    zeros = _poly_roots(diff)

    odd = list(_real_positive(poles, "pole"))
    even = list(_real_positive(zeros, "zero"))
    spurious = []
    for pole in list(odd):
        if not even:
            break
        j = int(np.argmin([abs(pole - z) for z in even]))
        if abs(pole - even[j]) < FROISSART_TOL * abs(pole):
            log.warning("removing Froissart doublet: pole %r, zero %r", pole, even[j])
            spurious.append((pole, even[j]))
            odd.remove(pole)
            even.pop(j)
    return PadeApproximant(p, q, poles, zeros, np.array(even), np.array(odd), tuple(spurious))


def _series_coeffs(series) -> np.ndarray:
    a = series.a if isinstance(series, EnergySeries) else np.asarray(series, dtype=float)
    return np.concatenate(([0.0], a))


def pade_levels(series, L: int, M: int) -> PadeApproximant:
    """``[L/M]`` approximant of ``f`` built from ``a_1..a_{L+M}``."""
    return pade(_series_coeffs(series), L, M)


def pade_diagonal(series, n: int) -> PadeApproximant:
    """Diagonal approximant ``P_n^n`` of ``f`` from ``a_1..a_{2n}``."""
    if n < 1:
        raise InsufficientOrder("Pade order must be at least 1")
    return pade_levels(series, n, n)


@dataclass(frozen=True)
class Level:
    index: int
    parity: str
    method: str
    value: float
    error_estimate: float
    order: int


@dataclass
class LevelTable:
    """
    Levels from ``P_1^1 .. P_nmax^nmax``.

    Row ``n`` keeps the ``n`` lowest levels of ``P_n^n``, ascending, which is
    the part of each approximant that has converged.  ``fallbacks`` records
    orders whose linear system was singular and were replaced by the
    previous diagonal approximant.
    """

    label: str
    n_max: int
    entries: list = field(default_factory=list)
    approximants: dict = field(default_factory=dict, repr=False)
    fallbacks: dict = field(default_factory=dict)

    def column(self, n: int) -> list:
        return [e.value for e in self.entries if e.order == n]

    def level(self, index: int) -> list:
        """Estimates of one level across approximant orders, ``(n, value)``."""
        return [(e.order, e.value) for e in self.entries if e.index == index]

    def as_rows(self) -> list:
        """Table layout: one row per level, one column per approximant order."""
        rows = []
        for i in range(self.n_max):
            cells = {e.order: e.value for e in self.entries if e.index == i}
            rows.append([cells.get(n, math.nan) for n in range(1, self.n_max + 1)])
        return rows


def level_table(series: EnergySeries, n_max: int, label: str = "") -> LevelTable:
    """Assemble the diagonal Pade level table up to ``P_nmax^nmax``."""
    if 2 * n_max > series.order:
        raise InsufficientOrder(
            f"P_{n_max}^{n_max} needs {2 * n_max} coefficients, series has {series.order}")
    table = LevelTable(label or series.spec.label, n_max)
    previous = {}
    for n in range(1, n_max + 1):
        m = n
        while True:
            try:
                approx = pade_diagonal(series, m)
                break
            except SingularPadeSystem:
                if m == 1:
                    raise
                log.warning("P_%d^%d singular, falling back to P_%d^%d", m, m, m - 1, m - 1)
                m -= 1
        if m != n:
            table.fallbacks[n] = m
        table.approximants[n] = approx
        for i, (value, parity) in enumerate(approx.levels()[:n]):
            err = abs(value - previous[i]) if i in previous else math.nan
            table.entries.append(Level(i, parity, PADE, value, err, n))
            previous[i] = value
    return table

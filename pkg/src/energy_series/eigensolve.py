"""Ground-state estimates from truncations of ``f(E) = 1``."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSequence, InsufficientOrder, NoPositiveCoefficients
from .series import EnergySeries, eval_f, require_order

TRUNCATED_ROOT = "TruncatedRoot"
SHANKS = "Shanks"
PADE = "Pade"
EXPECTATION = "Expectation"
PT_ROOT = "PTRoot"

EVEN = "Even"
ODD = "Odd"


@dataclass(frozen=True)
class EigenEstimate:
    order: int
    value: float
    method: str
    error_estimate: float = math.nan
    parity: str = EVEN


def _bisect_increasing(g, lo: float, hi: float, rtol: float = 1e-15) -> float:
    """Root of an increasing function with ``g(lo) < 0 < g(hi)``."""
    while hi - lo > rtol * hi:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if g(mid) < 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _positive_root(a: np.ndarray) -> float:
    if np.any(a <= 0):
        raise NoPositiveCoefficients(
            "truncated-root solve needs a_k > 0; route sign-changing series to ptsym")
    k = np.arange(1, a.size + 1)
    upper = 2.0 * float(np.min((1.0 / a) ** (1.0 / k)))
    return _bisect_increasing(lambda E: eval_f(a, E) - 1.0, 0.0, upper)


def truncated_roots(series: EnergySeries, n: int | None = None) -> np.ndarray:
    """``E_1..E_n``, the positive roots of the partial sums ``f_m(E) = 1``."""
    n = series.order if n is None else n
    require_order(series, n)
    a = series.a
    return np.array([_positive_root(a[:m]) for m in range(1, n + 1)])


def fitted_rates(values) -> np.ndarray:
    """Three-point geometric rates ``(E_{m+1} - E_m) / (E_m - E_{m-1})``."""
    v = np.asarray(values, dtype=float)
    d = np.diff(v)
    if v.size < 3:
        return np.empty(0)
    if np.any(np.abs(d[:-1]) < 1e-14 * np.maximum(1.0, np.abs(v[1:-1]))):
        raise DegenerateSequence("successive differences vanish; no geometric rate")
    return d[1:] / d[:-1]


def truncated_root(series: EnergySeries, n: int) -> EigenEstimate:
    """
    Unique positive root ``E_n`` of ``sum_{k<=n} a_k E^k = 1``.

    The error estimate is the geometric tail bound ``|E_n - E_{n-1}| r/(1-r)``
    with ``r`` fitted from ``E_{n-2}, E_{n-1}, E_n``; for ``n = 2`` it is the
    last step and for ``n = 1`` it is unknown.
    """
    if n < 1:
        raise InsufficientOrder("order must be at least 1")
    roots = truncated_roots(series, n)
    err = math.nan
    if n >= 3:
        r = float(fitted_rates(roots[-3:])[-1])
        err = abs(roots[-1] - roots[-2]) * abs(r) / abs(1.0 - r)
    elif n == 2:
        err = abs(roots[-1] - roots[-2])
    return EigenEstimate(n, float(roots[-1]), TRUNCATED_ROOT, err, EVEN)


def _aitken_last(seq: np.ndarray) -> float:
    if seq.size < 3:
        return float(seq[-1])
    x0, x1, x2 = seq[-3:]
    den = x2 - 2.0 * x1 + x0
    if abs(den) < 1e-14 * max(1.0, abs(x2)):
        return float(x2)
    return float(x2 - (x2 - x1) ** 2 / den)


def radius_estimate(series: EnergySeries) -> float:
    """
    Radius of convergence from the ratios ``a_k / a_{k+1}``.

    The last three ratios are Aitken-accelerated; with only two ratios the
    last one is returned.
    """
    if series.order < 3:
        raise InsufficientOrder(f"radius estimate needs 3 coefficients, series has {series.order}")
    a = series.a
    ratios = a[:-1] / a[1:]
    return _aitken_last(ratios)


@dataclass(frozen=True)
class ErrorModel:
    """Fitted ``E_n ~ E0 + c r^n`` against the predicted rate ``E0 / R``."""

    r: float
    c: float
    limit: float
    radius: float
    predicted_r: float
    rates: tuple

    def __iter__(self):
        yield self.r
        yield self.c


def error_model(series: EnergySeries, estimates=None) -> ErrorModel:
    """
    Fit ``E_n = E0 + c r^n`` through the last three truncated roots.

    Returns the fitted ``r`` and ``c`` (unpackable as a pair) together with
    the predicted rate ``E0 / R``, ``R`` from :func:`radius_estimate`.
    """
    if estimates is None:
        values = truncated_roots(series)
    else:
        values = np.array([e.value if isinstance(e, EigenEstimate) else float(e) for e in estimates])
    if values.size < 3:
        raise InsufficientOrder("error model needs at least three estimates")
    rates = fitted_rates(values)
    r = float(rates[-1])
    n = values.size
    d = values[-1] - values[-2]
    c = d / (r ** (n - 1) * (r - 1.0))
    limit = float(values[-1] - c * r ** n)
    R = radius_estimate(series)
    return ErrorModel(r, float(c), limit, R, limit / R, tuple(float(x) for x in rates))

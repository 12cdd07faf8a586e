"""
Large-energy WKB quantization for the quartic oscillator.

``(n + 1/2) pi = sqrt(pi) E^(3/4) sum_{k=0}^{4} A_{2k} E^(-3k/2)`` with the
coefficients below, ``R = Gamma(1/4) / Gamma(3/4)``.
"""
from __future__ import annotations

import math
import warnings

from scipy.optimize import brentq

from ..errors import NoBracket
from .result import WKB_LEVEL, OracleResult

R = math.gamma(0.25) / math.gamma(0.75)
COEFFICIENTS = (
    R / 3.0,
    -1.0 / (4.0 * R),
    11.0 * R / 1536.0,
    4697.0 / (30720.0 * R),
    -390065.0 * R / 3670016.0,
)
MIN_VALID_INDEX = 2
SCAN_MAX = 1e6


def wkb_phase(E: float, terms: int = len(COEFFICIENTS)) -> float:
    """Right-hand side of the quantization relation, truncated to ``terms`` coefficients."""
    s = sum(A * E ** (-1.5 * k) for k, A in enumerate(COEFFICIENTS[:terms]))
    return math.sqrt(math.pi) * E ** 0.75 * s


def wkb_quartic_level(index: int, terms: int = len(COEFFICIENTS)) -> OracleResult:
    """
    Level ``index`` of ``x^4`` from the truncated WKB relation.

    The series is asymptotic in ``1/E``; indices below 2 are computed but
    flagged with a ``RuntimeWarning``.

    Raises
    ------
    NoBracket
        If the truncated relation has no sign change on the scan window.
    """
    if index < MIN_VALID_INDEX:
        warnings.warn(f"WKB level {index} is outside the asymptotic regime (index >= {MIN_VALID_INDEX})",
                      RuntimeWarning, stacklevel=2)
    target = (index + 0.5) * math.pi
    g = lambda E: wkb_phase(E, terms) - target
    # start right of the small-E blow-up of the negative higher-order terms
    lo = (target / (math.sqrt(math.pi) * COEFFICIENTS[0])) ** (4.0 / 3.0) / 4.0
    hi = lo
    while g(hi) < 0:
        hi *= 2.0
        if hi > SCAN_MAX:
            raise NoBracket(f"WKB relation for level {index} has no root below {SCAN_MAX:g}")
    while g(lo) > 0:
        lo /= 2.0
        if lo < 1e-6:
            raise NoBracket(f"WKB relation for level {index} does not change sign on the scan window")
    value = brentq(g, lo, hi, xtol=1e-14, rtol=1e-15)
    return OracleResult(value, WKB_LEVEL, {"potential": "power:4", "index": index, "terms": terms})

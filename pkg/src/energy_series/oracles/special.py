"""
Special functions for the reference solutions.

Kept independent of the code under test and of scipy.special:

* Gamma comes from the standard library (``math.gamma``), with a reciprocal
  that is exactly zero at the poles.
* ``K_nu(z)`` uses ``int_0^inf exp(-z cosh t) cosh(nu t) dt`` summed with the
  trapezoid rule, which converges geometrically for this analytic, doubly
  exponentially decaying integrand.  Relative accuracy ~1e-14 for z in
  [1e-6, 1e4].
* Airy functions use their Maclaurin series for -8 <= x <= 2 and
  ``K_{1/3}``, ``K_{2/3}`` for x > 2.  Absolute accuracy is ~1e-14 for
  x >= -5 (all of the range ``f(E)`` of the linear potential needs), falling
  to ~1e-10 (Ai') at x = -8 from cancellation among terms of size ``exp(2/3 |x|^1.5)``.
* ``D_{-1/2}`` uses ``e^{-z^2/4} / sqrt(pi) * int exp(-z s^2 - s^4/2) ds``
  over the real line, again summed with the trapezoid rule.
"""
from __future__ import annotations

import math

import numpy as np

AI0 = 1.0 / (3.0 ** (2.0 / 3.0) * math.gamma(2.0 / 3.0))
AIP0 = -1.0 / (3.0 ** (1.0 / 3.0) * math.gamma(1.0 / 3.0))
AIRY_SERIES_MIN = -8.0


def rgamma(w: float) -> float:
    """``1 / Gamma(w)``, exactly 0 at non-positive integers."""
    if w <= 0 and w == math.floor(w):
        return 0.0
    return 1.0 / math.gamma(w)


def kve(nu: float, z: float) -> float:
    """Exponentially scaled modified Bessel function ``exp(z) K_nu(z)``, ``z > 0``."""
    if not z > 0:
        raise ValueError("kve needs z > 0")
    h = min(0.1, 0.5 / math.sqrt(z)) / 2.0
    # exp(-z (cosh t - 1)) below 1e-17 relative beyond t_end
    t_end = math.acosh(1.0 + 40.0 / z) + 4.0 * abs(nu) * h + 1.0
    t = np.arange(0.0, t_end + h, h)
    f = np.exp(-z * (np.cosh(t) - 1.0)) * np.cosh(nu * t)
    return float(h * (0.5 * f[0] + f[1:].sum()))


def kv(nu: float, z: float) -> float:
    return kve(nu, z) * math.exp(-z)


def _airy_series(x: float):
    """Maclaurin series from ``y'' = x y``: ``c_n = c_{n-3} / (n (n-1))``."""
    c = [AI0, AIP0, 0.0]
    val = [AI0, AIP0 * x]
    der = [AIP0]
    n = 3
    while n < 400:
        cn = c[n - 3] / (n * (n - 1))
        c.append(cn)
        if cn:
            xn1 = x ** (n - 1)
            val.append(cn * xn1 * x)
            der.append(n * cn * xn1)
            if abs(cn) * (abs(x) + 1.0) ** n * n < 1e-18:
                break
        n += 1
    return math.fsum(val), math.fsum(der)


def airy(x: float):
    """``(Ai(x), Ai'(x))`` for ``x >= -8``."""
    x = float(x)
    if x < AIRY_SERIES_MIN:
        raise ValueError(f"airy oracle covers x >= {AIRY_SERIES_MIN}, got {x}")
    if x <= 2.0:
        return _airy_series(x)
    zeta = 2.0 / 3.0 * x ** 1.5
    e = math.exp(-zeta)
    ai = math.sqrt(x / 3.0) / math.pi * kve(1.0 / 3.0, zeta) * e
    aip = -x / (math.pi * math.sqrt(3.0)) * kve(2.0 / 3.0, zeta) * e
    return ai, aip


def airy_ai(x: float) -> float:
    return airy(x)[0]


def airy_aip(x: float) -> float:
    return airy(x)[1]


def _bisect(g, lo: float, hi: float, tol: float = 1e-15) -> float:
    glo = g(lo)
    while hi - lo > tol * max(1.0, abs(hi)):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        gm = g(mid)
        if (gm > 0) == (glo > 0):
            lo, glo = mid, gm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _sign_changes(g, lo: float, hi: float, step: float = 0.01) -> list:
    xs = np.arange(lo, hi + step, step)
    vals = [g(x) for x in xs]
    out = []
    for i in range(len(xs) - 1):
        if vals[i] == 0 or (vals[i] > 0) != (vals[i + 1] > 0):
            out.append(_bisect(g, xs[i], xs[i + 1]))
    return out


def airy_zeros(k: int) -> list:
    """First ``k`` zeros of Ai, as negative numbers, ``k <= 5``."""
    z = sorted(_sign_changes(airy_ai, AIRY_SERIES_MIN, 0.0), reverse=True)
    if len(z) < k:
        raise ValueError(f"only {len(z)} Airy zeros are in the oracle range")
    return z[:k]


def airy_prime_zeros(k: int) -> list:
    """First ``k`` zeros of Ai', as negative numbers, ``k <= 5``."""
    z = sorted(_sign_changes(airy_aip, AIRY_SERIES_MIN, -1e-9), reverse=True)
    if len(z) < k:
        raise ValueError(f"only {len(z)} Ai' zeros are in the oracle range")
    return z[:k]


def pcf_d_minus_half(z: float) -> float:
    """Parabolic cylinder function ``D_{-1/2}(z)`` for ``z >= 0``."""
    z = float(z)
    if z < 0:
        raise ValueError("pcf_d_minus_half is implemented for z >= 0")
    width = min(1.0, 1.0 / math.sqrt(z)) if z > 0 else 1.0
    h = width / 10.0
    # z s^2 + s^4/2 > 45 beyond s_end
    s_end = math.sqrt((-z + math.sqrt(z * z + 90.0)))
    s = np.arange(0.0, s_end + h, h)
    f = np.exp(-z * s * s - 0.5 * s ** 4)
    integral = h * (f[0] + 2.0 * f[1:].sum())
    return float(math.exp(-0.25 * z * z) * integral / math.sqrt(math.pi))

"""
Closed forms of ``f(E) = 1 - psi'(0) / (psi(0) psi0'(0))`` and of ``psi0``.

Available for the square well, the harmonic oscillator and the linear
potential, plus the Bessel-function profile of a general ``|x|^N``.
"""
from __future__ import annotations

import math

from ..errors import InvalidPotential, PoleProximity
from ..potential import POWER, SQUARE_WELL, PotentialSpec
from .result import CLOSED_FORM_F, OracleResult
from .special import AI0, AIP0, airy, kve, pcf_d_minus_half, rgamma

POLE_TOL = 1e-13
GAMMA_RATIO = math.gamma(0.25) / math.gamma(0.75)


def _kind(spec: PotentialSpec) -> str:
    if spec.kind == SQUARE_WELL:
        return "square-well"
    if spec.kind == POWER and spec.N in (1.0, 2.0):
        return f"power:{spec.N:g}"
    raise InvalidPotential(f"no closed form for {spec.label}; use square-well, power:1 or power:2")


def _square_well_f(E: float) -> float:
    if E == 0.0:
        return 0.0
    if E > 0:
        k = math.sqrt(E)
        s = math.sin(k)
        if abs(s) < POLE_TOL:
            raise PoleProximity(f"sin(sqrt(E)) = {s:.3g} at E = {E!r}")
        return 1.0 - k * math.cos(k) / s
    k = math.sqrt(-E)
    return 1.0 - k / math.tanh(k)


def _harmonic_f(E: float) -> float:
    den = rgamma(0.75 - 0.25 * E)
    if abs(den) < POLE_TOL:
        raise PoleProximity(f"1/Gamma(3/4 - E/4) = {den:.3g} at E = {E!r}")
    return 1.0 - GAMMA_RATIO * rgamma(0.25 - 0.25 * E) / den


def _linear_f(E: float) -> float:
    ai, aip = airy(-E)
    if abs(ai) < POLE_TOL:
        raise PoleProximity(f"Ai(-E) = {ai:.3g} at E = {E!r}")
    return 1.0 - AI0 * aip / (AIP0 * ai)


def closed_form_f(spec: PotentialSpec, E: float) -> float:
    """
    Exact ``f(E)``.

    * square well: ``1 - sqrt(E) cot(sqrt(E))``
    * ``x^2``: ``1 - Gamma(1/4) Gamma(3/4 - E/4) / (Gamma(3/4) Gamma(1/4 - E/4))``
    * ``|x|``: ``1 - Ai(0) Ai'(-E) / (Ai'(0) Ai(-E))``

    Raises
    ------
    PoleProximity
        If the denominator is below ``1e-13`` in magnitude (odd level).
    """
    kind = _kind(spec)
    E = float(E)
    if kind == "square-well":
        return _square_well_f(E)
    if kind == "power:2":
        return _harmonic_f(E)
    return _linear_f(E)


def closed_form_result(spec: PotentialSpec, E: float) -> OracleResult:
    return OracleResult(closed_form_f(spec, E), CLOSED_FORM_F, {"potential": spec.label, "E": float(E)})


def exact_levels(spec: PotentialSpec, count: int) -> list:
    """
    The lowest ``count`` levels where they are known in closed form.

    Square well ``(k+1)^2 pi^2 / 4``, harmonic ``2k + 1``, linear from the
    zeros of ``Ai'`` (even) and ``Ai`` (odd).
    """
    kind = _kind(spec)
    if kind == "square-well":
        return [(k + 1) ** 2 * math.pi ** 2 / 4.0 for k in range(count)]
    if kind == "power:2":
        return [2.0 * k + 1.0 for k in range(count)]
    from .special import airy_prime_zeros, airy_zeros
    m = (count + 1) // 2
    even, odd = airy_prime_zeros(m), airy_zeros(m)
    out = []
    for k in range(count):
        out.append(-float((even if k % 2 == 0 else odd)[k // 2]))
    return out


def bessel_slope(N: float) -> float:
    """``psi0'(0) = -Gamma(1-nu) / (Gamma(1+nu) (N+2)^(2 nu))``, ``nu = 1/(N+2)``."""
    nu = 1.0 / (N + 2.0)
    return -math.gamma(1.0 - nu) / (math.gamma(1.0 + nu) * (N + 2.0) ** (2.0 * nu))


def bessel_profile(N: float, x: float) -> float:
    """
    ``psi0(x) = c sqrt(x) K_nu(2 x^((N+2)/2) / (N+2))`` normalized to ``psi0(0) = 1``.
    """
    if x == 0.0:
        return 1.0
    nu = 1.0 / (N + 2.0)
    z = 2.0 * x ** (0.5 * (N + 2.0)) / (N + 2.0)
    c = 2.0 / (math.gamma(nu) * (N + 2.0) ** nu)
    return c * math.sqrt(x) * kve(nu, z) * math.exp(-z)


def airy_profile(x: float) -> float:
    """``Ai(x) / Ai(0)``, the profile of ``|x|``."""
    return airy(x)[0] / AI0


def parabolic_profile(x: float) -> float:
    """``D_{-1/2}(sqrt(2) x) / D_{-1/2}(0)``, the profile of ``x^2``."""
    return pcf_d_minus_half(math.sqrt(2.0) * x) / pcf_d_minus_half(0.0)

"""
Reference solutions that do not use the energy series.

Closed forms of ``f(E)``, a shooting eigen-solver (Hermitian and PT), and
the WKB relation for the quartic oscillator.
"""
from .closed_form import (
    airy_profile,
    bessel_profile,
    bessel_slope,
    closed_form_f,
    closed_form_result,
    exact_levels,
    parabolic_profile,
)
from .result import CLOSED_FORM_F, PT_SHOOTING, SHOOTING_LEVEL, WKB_LEVEL, OracleResult
from .shooting import pt_ground_state, shooting_level
from .wkb import wkb_quartic_level

__all__ = [
    "OracleResult",
    "CLOSED_FORM_F",
    "SHOOTING_LEVEL",
    "WKB_LEVEL",
    "PT_SHOOTING",
    "closed_form_f",
    "closed_form_result",
    "exact_levels",
    "airy_profile",
    "parabolic_profile",
    "bessel_profile",
    "bessel_slope",
    "shooting_level",
    "pt_ground_state",
    "wkb_quartic_level",
]

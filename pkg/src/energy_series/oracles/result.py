"""Return type shared by the reference solutions."""
from __future__ import annotations

import math
from dataclasses import dataclass

CLOSED_FORM_F = "ClosedFormF"
SHOOTING_LEVEL = "ShootingLevel"
WKB_LEVEL = "WKBLevel"
PT_SHOOTING = "PTShooting"


@dataclass(frozen=True)
class OracleResult:
    """A reference number with what produced it and for which problem."""

    value: float
    kind: str
    context: dict

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ValueError(f"oracle value must be finite, got {self.value}")

    def __float__(self):
        return float(self.value)

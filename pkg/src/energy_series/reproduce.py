"""
Reproduction targets: published numbers next to freshly computed ones.

Every reference value below is typed in from the published tables and
displayed equations and tagged with where it was read; nothing here is
recomputed from the text.  Each target runs its own pipeline and yields a
:class:`Report` with per-cell absolute deviations.
"""
from __future__ import annotations

import math
import platform
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable

import numpy as np

from .accel import level_table, pade_levels, shanks
from .eigensolve import error_model, truncated_roots
from .errors import NumericalFailure
from .grid import GridConfig
from .oracles import exact_levels, pt_ground_state, shooting_level
from .potential import PotentialSpec
from .ptsym import pt_expectation, pt_root, pt_series
from .series import build_series
from .variational import expectation

SQUARE_WELL = PotentialSpec.square_well()
HARMONIC = PotentialSpec.power(2)
LINEAR = PotentialSpec.power(1)
QUARTIC = PotentialSpec.power(4)


class TargetFailure(NumericalFailure):
    """A module error raised while running a reproduction target."""


@dataclass(frozen=True)
class Cell:
    """
    One published number.

    ``tolerance`` is the admissible absolute deviation; ``None`` marks a
    value that is reported but not asserted.
    """

    key: str
    reference: float
    tolerance: float | None
    source: str


@dataclass(frozen=True)
class Target:
    id: str
    title: str
    cells: tuple
    compute: Callable = field(repr=False, compare=False)


@dataclass(frozen=True)
class Row:
    key: str
    value: float
    reference: float
    abs_error: float
    tolerance: float | None
    ok: bool | None
    source: str


@dataclass(frozen=True)
class Report:
    target: str
    title: str
    rows: tuple
    meta: dict

    @property
    def breaches(self) -> list:
        return [r for r in self.rows if r.ok is False]

    @property
    def passed(self) -> bool:
        return not self.breaches

    def to_dict(self) -> dict:
        return {"target": self.target, "title": self.title, "meta": self.meta,
                "rows": [asdict(r) for r in self.rows]}

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        rows = tuple(Row(**r) for r in data["rows"])
        return cls(data["target"], data["title"], rows, data["meta"])


@lru_cache(maxsize=32)
def _series(spec: PotentialSpec, order: int, cfg: GridConfig):
    return build_series(spec, order, cfg, error_estimates=False)


@lru_cache(maxsize=16)
def ground_energy(spec: PotentialSpec) -> float:
    """Exact ground energy: closed form where known, shooting otherwise."""
    try:
        return exact_levels(spec, 1)[0]
    except ValueError:
        return shooting_level(spec, 0).value


def _cells(prefix: str, refs, tol, source: str, start: int = 1) -> tuple:
    return tuple(Cell(f"{prefix}{i}", float(v), tol, source) for i, v in enumerate(refs, start))


# --- coefficient targets ---------------------------------------------------

SQUARE_WELL_RATIONALS = (Fraction(1, 3), Fraction(1, 45), Fraction(2, 945), Fraction(1, 4725),
                         Fraction(2, 93555), Fraction(1382, 638512875), Fraction(4, 18243225))


def _coefficients(spec: PotentialSpec, n: int):
    def compute(cfg: GridConfig) -> dict:
        a = _series(spec, n, cfg).a
        return {f"a{k}": float(a[k - 1]) for k in range(1, n + 1)}
    return compute


def _quartic_coefficients(cfg: GridConfig) -> dict:
    out = _coefficients(QUARTIC, 3)(cfg)
    levels = pade_levels(_series(QUARTIC, 3, cfg), 2, 1).levels()
    out["P[2/1] E(0)"] = levels[0][0]
    out["P[2/1] E(1)"] = levels[1][0]
    return out


# --- truncated-root tables -------------------------------------------------

def _roots(spec: PotentialSpec, n: int, ratios: bool, rate: bool = False):
    def compute(cfg: GridConfig) -> dict:
        s = _series(spec, n, cfg)
        E = truncated_roots(s, n)
        out = {f"E{k}": float(E[k - 1]) for k in range(1, n + 1)}
        if ratios:
            E0 = ground_energy(spec)
            out.update({f"E{k}/E0": float(E[k - 1] / E0) for k in range(1, n + 1)})
        if rate:
            out["rate r"] = error_model(s).r
        return out
    return compute


# --- Pade level tables -----------------------------------------------------

def _pade_cells(table: list, exact: list, source: str) -> tuple:
    cells = []
    for i, row in enumerate(table):
        for n, v in enumerate(row, start=1):
            if v is None:
                continue
            tol = 1e-4 if (i == 0 and n == 4) else 1e-3
            cells.append(Cell(f"E({i}) P{n}", v, tol, source))
        # exact column is printed to five decimals
        cells.append(Cell(f"E({i}) exact", exact[i], 1e-5, source))
    return tuple(cells)


def _pade_table(spec: PotentialSpec):
    def compute(cfg: GridConfig) -> dict:
        table = level_table(_series(spec, 8, cfg), 4)
        out = {}
        for e in table.entries:
            out[f"E({e.index}) P{e.order}"] = e.value
        try:
            exact = exact_levels(spec, 4)
        except ValueError:
            exact = [shooting_level(spec, k).value for k in range(4)]
        out.update({f"E({i}) exact": float(v) for i, v in enumerate(exact)})
        return out
    return compute


# --- accelerated and variational values ------------------------------------

def _shanks_values(cfg: GridConfig) -> dict:
    out = {}
    for name, spec, n in (("square-well", SQUARE_WELL, 6), ("harmonic", HARMONIC, 6),
                          ("linear", LINEAR, 6), ("quartic", QUARTIC, 3)):
        ratios = truncated_roots(_series(spec, n, cfg), n) / ground_energy(spec)
        S = shanks(ratios)
        for i, v in enumerate(S, start=1):
            if v is not np.ma.masked:
                out[f"{name} S{i}"] = float(v)
    return out


EXPECTATION_ORDERS = (("square-well", SQUARE_WELL, 3), ("harmonic", HARMONIC, 3),
                      ("linear", LINEAR, 3), ("quartic", QUARTIC, 2))


def _expectation_values(cfg: GridConfig) -> dict:
    out = {}
    for name, spec, n_max in EXPECTATION_ORDERS:
        s = _series(spec, n_max, cfg)
        E0 = ground_energy(spec)
        for n in range(1, n_max + 1):
            out[f"{name} <H>{n}/E0"] = expectation(s, n).value / E0
    return out


PT_E0_LITERATURE = 1.1562670719881


def _pt_values(cfg: GridConfig) -> dict:
    pt = pt_series(_series(PotentialSpec.power(3), 3, cfg), 3)
    E0 = pt_ground_state(3).value
    E = [pt_root(pt, n).value for n in (1, 2, 3)]
    return {
        "E0 oracle": E0,
        "E1/E0": E[0] / E0,
        "E2/E0": E[1] / E0,
        "E3/E0": E[2] / E0,
        "E3-E2": E[2] - E[1],
        "<H>1/E0": pt_expectation(pt, 1).value / E0,
        "<H>2/E0": pt_expectation(pt, 2).value / E0,
    }


# --- manifest --------------------------------------------------------------

_T1 = (3.0, 2.56231, 2.48906, 2.47267, 2.46871, 2.46773)
_T1_RATIO = (1.21585, 1.03846, 1.00878, 1.00214, 1.00053, 1.00013)
_T2 = (1.27324, 1.05949, 1.01721, 1.00543, 1.00177, 1.00059)
_T3 = (1.37172, 1.11052, 1.05136, 1.03168, 1.02415, 1.02107)
_T3_RATIO = (1.34642, 1.09003, 1.03197, 1.01265, 1.00525, 1.00223)
_T4 = (1.31010, 1.10846, 1.07240)
_T4_RATIO = (1.23552, 1.04536, 1.01136)

_T5 = ((2.50000, 2.46744, 2.46740, 2.46740),
       (None, 9.94122, 9.86993, 9.86960),
       (None, None, 22.29341, 22.20737),
       (None, None, None, 39.56379))
_T5_EXACT = (2.46740, 9.86960, 22.20661, 39.47842)
_T6 = ((1.02478, 1.00013, 1.00000, 1.00000),
       (None, 3.08260, 3.00237, 3.00003),
       (None, None, 5.12647, 5.00701),
       (None, None, None, 7.16012))
_T6_EXACT = (1.0, 3.0, 5.0, 7.0)
_T7 = ((1.06291, 1.01948, 1.01880, 1.01879),
       (None, 2.48513, 2.34902, 2.33863),
       (None, None, 3.44920, 3.27292),
       (None, None, None, 4.35282))
_T7_EXACT = (1.01879, 2.33811, 3.24820, 4.08795)


def _shanks_cells() -> tuple:
    src = "Shanks sequences in text"
    seqs = (("square-well", (1.00281, 1.00022, 1.00002, 1.00000)),
            ("harmonic", (1.00678, 1.00088, 1.00012, 1.00002)),
            ("linear", (1.01497, 1.00301, 1.00066, 1.00014)),
            ("quartic", (1.00396,)))
    return tuple(c for name, refs in seqs for c in _cells(f"{name} S", refs, 1e-4, src))


def _expectation_cells() -> tuple:
    src = "expectation values in text"
    cells = []
    refs = {"square-well": (1.001292, 1.000061, 1.000003),
            "harmonic": (1.003921, 1.000343, 1.000035),
            "linear": (1.009813, 1.001427, 1.019041),
            "quartic": (1.00202, 1.00012)}
    for name, values in refs.items():
        for n, v in enumerate(values, start=1):
            # the printed linear <H>3 exceeds <H>2 and is only reported
            tol = None if (name == "linear" and n == 3) else 1e-5
            cells.append(Cell(f"{name} <H>{n}/E0", v, tol, src))
    return tuple(cells)


def _pt_cells() -> tuple:
    src = "PT ratios in text"
    return (
        Cell("E0 oracle", PT_E0_LITERATURE, 1e-6, "literature value for ix^3"),
        Cell("E1/E0", 1.10366, 1e-3, src),
        Cell("E2/E0", 0.98258, 1e-3, src),
        Cell("E3/E0", 0.98258, 1e-3, src),
        Cell("E3-E2", 0.0, 1e-12, src),
        Cell("<H>1/E0", 0.984, 1e-3, src),
        Cell("<H>2/E0", 0.997, 1e-3, src),
    )


MANIFEST = {
    t.id: t for t in (
        Target("T1", "square well: truncated roots E_n and E_n/E0",
               _cells("E", _T1, 1e-4, "table: square well roots")
               + tuple(Cell(f"E{k}/E0", v, 1e-4, "table: square well roots")
                       for k, v in enumerate(_T1_RATIO, 1))
               + (Cell("rate r", 0.25, 0.025, "caption: error decays like 4^-n"),),
               _roots(SQUARE_WELL, 6, ratios=True, rate=True)),
        Target("T2", "harmonic oscillator: truncated roots E_n",
               _cells("E", _T2, 1e-4, "table: harmonic roots"),
               _roots(HARMONIC, 6, ratios=False)),
        Target("T3", "linear potential: truncated roots E_n and E_n/E0",
               _cells("E", _T3, 1e-4, "table: linear roots")
               + tuple(Cell(f"E{k}/E0", v, 1e-4, "table: linear roots")
                       for k, v in enumerate(_T3_RATIO, 1)),
               _roots(LINEAR, 6, ratios=True)),
        Target("T4", "quartic oscillator: truncated roots E_n and E_n/E0",
               _cells("E", _T4, 1e-4, "table: quartic roots")
               + tuple(Cell(f"E{k}/E0", v, 1e-4, "table: quartic roots")
                       for k, v in enumerate(_T4_RATIO, 1)),
               _roots(QUARTIC, 3, ratios=True)),
        Target("T5", "square well: diagonal Pade levels",
               _pade_cells(_T5, _T5_EXACT, "table: square well Pade"), _pade_table(SQUARE_WELL)),
        Target("T6", "harmonic oscillator: diagonal Pade levels",
               _pade_cells(_T6, _T6_EXACT, "table: harmonic Pade"), _pade_table(HARMONIC)),
        Target("T7", "linear potential: diagonal Pade levels",
               _pade_cells(_T7, _T7_EXACT, "table: linear Pade"), _pade_table(LINEAR)),
        Target("S3-shanks", "Shanks transform of E_n/E0",
               _shanks_cells(), _shanks_values),
        Target("S4-expect", "variational expectation values <H>_n/E0",
               _expectation_cells(), _expectation_values),
        Target("S5-pt", "PT-symmetric ix^3: truncated roots and expectation values over E0",
               _pt_cells(), _pt_values),
        Target("E18", "square well: exact rational coefficients",
               tuple(Cell(f"a{k}", float(q), 1e-9, f"displayed series: {q}")
                     for k, q in enumerate(SQUARE_WELL_RATIONALS, 1)),
               _coefficients(SQUARE_WELL, 7)),
        Target("E20", "harmonic oscillator: series coefficients",
               _cells("a", (0.78530, 0.14956, 0.04403, 0.01409, 0.00463, 0.00153), 1e-4,
                      "displayed series: harmonic"),
               _coefficients(HARMONIC, 6)),
        Target("E22", "linear potential: series coefficients",
               _cells("a", (0.72901, 0.15440, 0.05411, 0.02131, 0.00876, 0.00368), 1e-4,
                      "displayed series: linear"),
               _coefficients(LINEAR, 6)),
        Target("E23", "quartic oscillator: three coefficients and the [2/1] Pade levels",
               _cells("a", (0.763303, 0.125262, 0.030303), 1e-5, "displayed series: quartic")
               + (Cell("P[2/1] E(0)", 1.06137, 1e-3, "Pade discussion in text"),
                  Cell("P[2/1] E(1)", 4.13364, 1e-3, "Pade discussion in text")),
               _quartic_coefficients),
    )
}

TARGETS = tuple(MANIFEST)


def build_info() -> dict:
    from . import __version__
    return {"package": __version__, "python": platform.python_version(), "numpy": np.__version__}


def reproduce(target_id: str, grid_config: GridConfig | None = None) -> Report:
    """
    Run one manifest target and compare against its published cells.

    Raises
    ------
    KeyError
        For an unknown target id.
    TargetFailure
        Wrapping any numerical error, with the target id in the message.
    """
    if target_id not in MANIFEST:
        raise KeyError(f"unknown target {target_id!r}; choose from {', '.join(TARGETS)}")
    target = MANIFEST[target_id]
    cfg = grid_config or GridConfig.from_env()
    try:
        values = target.compute(cfg)
    except NumericalFailure as exc:
        raise TargetFailure(f"{target_id}: {exc}") from exc
    rows = []
    for cell in target.cells:
        if cell.key not in values:
            raise TargetFailure(f"{target_id}: pipeline produced no value for {cell.key!r}")
        v = float(values[cell.key])
        err = abs(v - cell.reference)
        ok = None if cell.tolerance is None else bool(err <= cell.tolerance)
        rows.append(Row(cell.key, v, cell.reference, err, cell.tolerance, ok, cell.source))
    meta = {"grid": cfg.to_dict(), "tolerances": {c.key: c.tolerance for c in target.cells},
            "build": build_info()}
    return Report(target.id, target.title, tuple(rows), meta)

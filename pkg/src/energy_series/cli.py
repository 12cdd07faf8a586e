"""
Command-line front end.

Usage::

    python3 -m energy_series coeffs --potential power:4 --order 3 --format json
    python3 -m energy_series ground --potential square-well --order 6
    python3 -m energy_series shanks --input ratios.csv
    python3 -m energy_series levels --potential power:1 --pade-order 4
    python3 -m energy_series expect --potential power:2 --order 3
    python3 -m energy_series pt --N 3 --order 3
    python3 -m energy_series oracle --potential power:4 --level 1
    python3 -m energy_series oracle-f --potential power:1 --E 1.01879297
    python3 -m energy_series reproduce T1

Exit status: 0 success, 1 usage error, 2 numerical failure, 3 a reproduced
value outside its tolerance.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from .accel import level_table, shanks
from .eigensolve import truncated_root
from .errors import EnergySeriesError, InvalidPotential, NumericalFailure
from .grid import GridConfig
from .oracles import closed_form_f, pt_ground_state, shooting_level
from .potential import SPEC_GRAMMAR, PotentialSpec
from .ptsym import pt_expectation, pt_root, pt_series
from .reproduce import TARGETS, build_info, ground_energy, reproduce
from .series import build_series
from .variational import expectation

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERICAL = 2
EXIT_TOLERANCE = 3

COMMANDS = ("coeffs", "ground", "shanks", "levels", "expect", "pt", "oracle", "oracle-f", "reproduce")
FORMATS = ("csv", "json", "pretty")
DEFAULT_ORDER = {"coeffs": 6, "ground": 6, "expect": 3, "pt": 3}


class UsageError(Exception):
    """Bad command line; exits with status 1."""

    exit_status = EXIT_USAGE


@dataclass(frozen=True)
class RunConfig:
    command: str
    spec: PotentialSpec | None
    order: int | None
    grid: GridConfig
    format: str = "pretty"
    output: str | None = None
    target: str | None = None
    level: int | None = None
    energy: float | None = None
    input: str | None = None
    column: str | None = None


@dataclass
class Table:
    """Rows of one command's output, emitted as CSV, JSON or aligned text."""

    title: str
    columns: list
    rows: list
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.rows = [[_clean(v) for v in r] for r in self.rows]

    def to_dict(self) -> dict:
        return {"title": self.title, "meta": self.meta,
                "rows": [dict(zip(self.columns, r)) for r in self.rows]}


def _clean(v):
    """Plain Python scalars, with NaN as ``None`` so JSON stays standard."""
    if isinstance(v, (np.floating, float)):
        v = float(v)
        return None if math.isnan(v) else v
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, np.bool_):
        return bool(v)
    return v


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _potential(text: str) -> PotentialSpec:
    try:
        return PotentialSpec.parse(text)
    except InvalidPotential as exc:
        msg = str(exc)
        if SPEC_GRAMMAR not in msg:
            msg += f" (accepted: {SPEC_GRAMMAR})"
        raise argparse.ArgumentTypeError(msg) from None


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="pretty")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")
    common.add_argument("--xmax-cap", type=float)
    common.add_argument("--tail-tol", type=float)
    common.add_argument("--base-step", type=float)

    parser = _Parser(prog="energy_series", description="Energy-series eigenvalue toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text, potential=True, order=True):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if potential:
            p.add_argument("--potential", type=_potential, required=True, metavar="SPEC",
                           help=SPEC_GRAMMAR)
        if order:
            p.add_argument("--order", type=int)
        return p

    add("coeffs", "series coefficients a_k with error estimates")
    add("ground", "truncated roots E_n of f_n(E) = 1")
    add("expect", "variational expectation values <H>_n")
    p = add("levels", "levels from the diagonal Pade approximants", order=False)
    p.add_argument("--pade-order", type=int, default=4, dest="order")
    p = add("shanks", "Shanks transform of a CSV column", potential=False, order=False)
    p.add_argument("--input", required=True, help="CSV file, '-' for stdin")
    p.add_argument("--column", help="column name (default: last numeric column)")
    p = add("pt", "PT-symmetric -(ix)^N on the Stokes line", potential=False)
    p.add_argument("--N", type=float, default=3.0)
    p = add("oracle", "reference eigenvalue by shooting", order=False)
    p.add_argument("--level", type=int, required=True)
    p = add("oracle-f", "closed-form f(E)", order=False)
    p.add_argument("--E", type=float, required=True, dest="energy")
    p = sub.add_parser("reproduce", parents=[common], help="compare against published values")
    p.add_argument("target", choices=TARGETS + ("all",))
    return parser


def parse_args(argv=None) -> RunConfig:
    """
    Validate the command line into a :class:`RunConfig`.

    Raises
    ------
    UsageError
        On any invalid argument, including an unknown potential spec (the
        accepted grammar is echoed) or an order below 1.
    """
    ns = _build_parser().parse_args(argv)
    try:
        grid = GridConfig.from_env(base_step=ns.base_step, tail_tol=ns.tail_tol, xmax_cap=ns.xmax_cap)
    except ValueError as exc:
        raise UsageError(f"bad grid settings: {exc}") from None
    spec = getattr(ns, "potential", None)
    if ns.command == "pt":
        try:
            spec = PotentialSpec.pt_power(ns.N)
        except InvalidPotential as exc:
            raise UsageError(str(exc)) from None
    order = getattr(ns, "order", None)
    if order is None:
        order = DEFAULT_ORDER.get(ns.command)
    if order is not None and order < 1:
        raise UsageError(f"--order must be at least 1, got {order}")
    level = getattr(ns, "level", None)
    if level is not None and level < 0:
        raise UsageError(f"--level must be non-negative, got {level}")
    return RunConfig(ns.command, spec, order, grid, ns.format, ns.output,
                     target=getattr(ns, "target", None), level=level,
                     energy=getattr(ns, "energy", None), input=getattr(ns, "input", None),
                     column=getattr(ns, "column", None))


def _meta(cfg: RunConfig, **extra) -> dict:
    meta = {"command": cfg.command, "grid": cfg.grid.to_dict(), "build": build_info()}
    if cfg.spec is not None:
        meta["potential"] = cfg.spec.label
    meta.update(extra)
    return meta


def _exact_or_none(spec: PotentialSpec):
    try:
        return ground_energy(spec)
    except EnergySeriesError:
        return None


def _ratio(v, ref):
    return None if ref is None else v / ref


def run_coeffs(cfg: RunConfig) -> Table:
    s = build_series(cfg.spec, cfg.order, cfg.grid)
    rows = [[k, float(a), float(e)] for k, (a, e) in enumerate(zip(s.a, s.errors), start=1)]
    return Table(f"coefficients of f(E) for {cfg.spec.label}", ["order", "a_k", "error_estimate"],
                 rows, _meta(cfg))


def run_ground(cfg: RunConfig) -> Table:
    s = build_series(cfg.spec, cfg.order, cfg.grid, error_estimates=False)
    exact = _exact_or_none(cfg.spec)
    rows = []
    for n in range(1, cfg.order + 1):
        e = truncated_root(s, n)
        rows.append([n, e.value, e.error_estimate, _ratio(e.value, exact)])
    return Table(f"truncated roots for {cfg.spec.label}", ["order", "E_n", "error_estimate", "E_n/E_exact"],
                 rows, _meta(cfg, exact=exact))


def run_expect(cfg: RunConfig) -> Table:
    s = build_series(cfg.spec, cfg.order, cfg.grid)
    exact = _exact_or_none(cfg.spec)
    rows = []
    for n in range(1, cfg.order + 1):
        E = truncated_root(s, n).value
        h = expectation(s, n)
        rows.append([n, E, h.value, h.error_estimate, _ratio(E, exact), _ratio(h.value, exact)])
    cols = ["order", "E_n", "<H>_n", "error_estimate", "E_n/E_exact", "<H>_n/E_exact"]
    return Table(f"expectation values for {cfg.spec.label}", cols, rows, _meta(cfg, exact=exact))


def run_levels(cfg: RunConfig) -> Table:
    s = build_series(cfg.spec, 2 * cfg.order, cfg.grid, error_estimates=False)
    table = level_table(s, cfg.order)
    parity = {e.index: e.parity for e in table.entries}
    cols = ["level", "parity"] + [f"P{n}" for n in range(1, cfg.order + 1)]
    rows = []
    for i, cells in enumerate(table.as_rows()):
        rows.append([i, parity.get(i)] + [None if math.isnan(v) else v for v in cells])
    return Table(f"diagonal Pade levels for {cfg.spec.label}", cols, rows,
                 _meta(cfg, fallbacks={str(k): v for k, v in table.fallbacks.items()}))


def _read_column(path: str, column: str | None) -> tuple:
    text = sys.stdin.read() if path == "-" else open(path, newline="").read()
    rows = list(csv.reader(io.StringIO(text)))
    rows = [r for r in rows if any(c.strip() for c in r)]
    if not rows:
        raise UsageError(f"{path}: no data")

    def numeric(s):
        try:
            float(s)
            return True
        except ValueError:
            return False

    header = None if all(numeric(c) for c in rows[0]) else rows[0]
    data = rows[1:] if header else rows
    if column is not None:
        if header is None or column not in header:
            raise UsageError(f"{path}: no column named {column!r}")
        j = header.index(column)
    else:
        candidates = [j for j in range(len(data[0])) if all(numeric(r[j]) for r in data)]
        if not candidates:
            raise UsageError(f"{path}: no numeric column")
        j = candidates[-1]
    name = header[j] if header else f"column {j}"
    try:
        return name, [float(r[j]) for r in data]
    except (ValueError, IndexError) as exc:
        raise UsageError(f"{path}: bad value in {name}: {exc}") from None


def run_shanks(cfg: RunConfig) -> Table:
    name, values = _read_column(cfg.input, cfg.column)
    try:
        S = shanks(values)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = [[n, None if v is np.ma.masked else float(v), v is np.ma.masked]
            for n, v in enumerate(S, start=2)]
    return Table(f"Shanks transform of {name}", ["order", "value", "degenerate"], rows,
                 _meta(cfg, input=cfg.input, column=name))


def run_pt(cfg: RunConfig) -> Table:
    N = cfg.spec.N
    base = build_series(PotentialSpec.power(N), cfg.order, cfg.grid, error_estimates=False)
    pt = pt_series(base, N)
    E0 = pt_ground_state(N).value
    rows = []
    for n in range(1, cfg.order + 1):
        E = pt_root(pt, n).value
        H = pt_expectation(pt, n).value
        rows.append([n, E, E / E0, H / E0])
    return Table(f"PT-symmetric -(ix)^{N:g}", ["order", "E_n", "E_n/E0", "<H>_n/E0"], rows,
                 _meta(cfg, E0=E0, theta=pt.theta))


def run_oracle(cfg: RunConfig) -> Table:
    r = shooting_level(cfg.spec, cfg.level)
    return Table(f"shooting level {cfg.level} of {cfg.spec.label}", ["level", "value", "parity"],
                 [[cfg.level, r.value, r.context["parity"]]], _meta(cfg, kind=r.kind))


def run_oracle_f(cfg: RunConfig) -> Table:
    try:
        v = closed_form_f(cfg.spec, cfg.energy)
    except InvalidPotential as exc:
        raise UsageError(str(exc)) from None
    return Table(f"closed-form f(E) for {cfg.spec.label}", ["E", "f"], [[cfg.energy, v]], _meta(cfg))


def run_reproduce(cfg: RunConfig) -> tuple:
    ids = TARGETS if cfg.target == "all" else (cfg.target,)
    tables, breach = [], False
    for tid in ids:
        rep = reproduce(tid, cfg.grid)
        breach |= not rep.passed
        cols = ["order_level", "value", "reference", "abs_error", "tolerance", "within_tolerance", "source"]
        rows = [[r.key, r.value, r.reference, r.abs_error, r.tolerance, r.ok, r.source] for r in rep.rows]
        tables.append(Table(f"{rep.target}: {rep.title}", cols, rows, dict(rep.meta, target=rep.target)))
    return tables, breach


RUNNERS = {"coeffs": run_coeffs, "ground": run_ground, "expect": run_expect, "levels": run_levels,
           "shanks": run_shanks, "pt": run_pt, "oracle": run_oracle, "oracle-f": run_oracle_f}


def _fmt(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "NO"
    if isinstance(v, float):
        return f"{v:.10g}"
    return str(v)


def render(tables: list, fmt: str) -> str:
    if fmt == "json":
        docs = [t.to_dict() for t in tables]
        return json.dumps(docs[0] if len(docs) == 1 else docs, indent=2) + "\n"
    buf = io.StringIO()
    for i, t in enumerate(tables):
        if fmt == "csv":
            if len(tables) > 1:
                buf.write(f"# {t.title}\n")
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(t.columns)
            w.writerows([["" if v is None else repr(v) if isinstance(v, float) else v for v in r]
                         for r in t.rows])
        else:
            cells = [t.columns] + [[_fmt(v) for v in r] for r in t.rows]
            widths = [max(len(str(row[j])) for row in cells) for j in range(len(t.columns))]
            buf.write(t.title + "\n")
            for row in cells:
                buf.write("  ".join(str(c).rjust(w) for c, w in zip(row, widths)) + "\n")
        if i < len(tables) - 1:
            buf.write("\n")
    return buf.getvalue()


def main(argv=None) -> int:
    try:
        cfg = parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    breach = False
    try:
        if cfg.command == "reproduce":
            tables, breach = run_reproduce(cfg)
        else:
            tables = [RUNNERS[cfg.command](cfg)]
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (NumericalFailure, ArithmeticError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except EnergySeriesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = render(tables, cfg.format)
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_TOLERANCE if breach else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

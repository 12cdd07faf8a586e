"""
Panel quadrature on graded meshes.

Functions on the half-line are sampled at Chebyshev-Lobatto nodes of
consecutive panels ``[e_0, e_1], [e_1, e_2], ...``.  Neighbouring panels share
their endpoint, so a function is stored as one flat array of length
``n_panels * p + 1``.  Within a panel the samples define an interpolating
polynomial of degree ``p``; cumulative integrals and derivatives are taken
of that polynomial, which makes both operations spectrally accurate for
smooth integrands.
"""
from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, replace
from functools import lru_cache

import numpy as np
from numpy.polynomial import chebyshev as C

GRID_OVERRIDE_ENV = "ENERGY_SERIES_GRID_OVERRIDE"


@dataclass(frozen=True)
class GridConfig:
    """
    Step control for the zero-energy profile and all quadratures built on it.

    Parameters
    ----------
    base_step : float
        Panel width near the origin.  Panels shrink in the tail in proportion
        to the local decay length ``1/sqrt(V(x))``.
    nodes : int
        Polynomial degree per panel (``nodes + 1`` samples, endpoints shared).
    tail_tol : float
        Largest admissible ``int_{x_max}^inf psi0^2``.
    xmax_cap : float
        Hard cap on the truncation point.
    coef_tol : float
        Declared absolute tolerance of a single series coefficient; the
        refinement tests compare two resolutions against ``10 * coef_tol``.
    """

    base_step: float = 0.25
    nodes: int = 20
    tail_tol: float = 1e-14
    xmax_cap: float = 60.0
    coef_tol: float = 1e-10

    def __post_init__(self):
        if not self.base_step > 0:
            raise ValueError(f"base_step must be positive, got {self.base_step}")
        if self.nodes < 4:
            raise ValueError(f"nodes must be at least 4, got {self.nodes}")
        if not 0 < self.tail_tol < 1:
            raise ValueError(f"tail_tol must lie in (0, 1), got {self.tail_tol}")
        if not self.xmax_cap > 0:
            raise ValueError(f"xmax_cap must be positive, got {self.xmax_cap}")

    def refined(self, factor: float = 2.0) -> "GridConfig":
        """Same settings with the panel width divided by ``factor``."""
        return replace(self, base_step=self.base_step / factor)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, blob: str) -> "GridConfig":
        data = json.loads(blob)
        unknown = set(data) - set(cls.__dataclass_fields__)
        if unknown:
            raise ValueError(f"unknown GridConfig fields: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def from_env(cls, **overrides) -> "GridConfig":
        """Defaults, then the JSON blob in ``ENERGY_SERIES_GRID_OVERRIDE``, then ``overrides``."""
        blob = os.environ.get(GRID_OVERRIDE_ENV)
        base = cls.from_json(blob) if blob else cls()
        overrides = {k: v for k, v in overrides.items() if v is not None}
        return replace(base, **overrides) if overrides else base


@lru_cache(maxsize=None)
def _reference_matrices(p: int):
    """Lobatto nodes on [-1, 1] with integration and differentiation matrices."""
    t = -np.cos(np.pi * np.arange(p + 1) / p)
    vander = C.chebvander(t, p)
    to_coef = np.linalg.solve(vander, np.eye(p + 1))
    # forward: int_{-1}^{t_i};  backward: int_{t_i}^{1}
    fwd = C.chebvander(t, p + 1) @ C.chebint(to_coef, lbnd=-1, axis=0)
    bwd = -(C.chebvander(t, p + 1) @ C.chebint(to_coef, lbnd=1, axis=0))
    diff = C.chebvander(t, p - 1) @ C.chebder(to_coef, axis=0)
    for m in (fwd, bwd, diff):
        m.setflags(write=False)
    return t, fwd, bwd, diff


class PanelGrid:
    """
    Flat grid of Chebyshev-Lobatto panels.

    Attributes
    ----------
    edges : ndarray
        Panel boundaries, strictly increasing.
    p : int
        Polynomial degree per panel.
    x : ndarray
        All sample points, strictly increasing, ``x[0] = edges[0]``.
    weights : ndarray
        Clenshaw-Curtis weights, ``weights @ f`` integrates over the grid.
    """

    def __init__(self, edges, p: int):
        edges = np.asarray(edges, dtype=float)
        if edges.ndim != 1 or edges.size < 2 or np.any(np.diff(edges) <= 0):
            raise ValueError("panel edges must be a strictly increasing 1-d array")
        self.edges = edges
        self.p = int(p)
        t, fwd, bwd, diff = _reference_matrices(self.p)
        self._fwd, self._bwd, self._diff = fwd, bwd, diff
        self.half = 0.5 * np.diff(edges)
        mid = 0.5 * (edges[1:] + edges[:-1])
        nodes = mid[:, None] + self.half[:, None] * t[None, :]
        nodes[:, 0] = edges[:-1]
        nodes[:, -1] = edges[1:]
        self.index = np.arange(self.n_panels)[:, None] * self.p + np.arange(self.p + 1)[None, :]
        x = np.empty(self.n_panels * self.p + 1)
        x[self.index] = nodes
        self.x = x
        self.x.setflags(write=False)
        w = np.zeros_like(x)
        np.add.at(w, self.index, self.half[:, None] * fwd[-1][None, :])
        self.weights = w

    @property
    def n_panels(self) -> int:
        return self.edges.size - 1

    @property
    def size(self) -> int:
        return self.x.size

    def __len__(self):
        return self.size

    def __repr__(self):
        return (f"PanelGrid(x=[{self.edges[0]:g}, {self.edges[-1]:g}], "
                f"panels={self.n_panels}, p={self.p})")

    def integrate(self, f) -> float:
        return float(self.weights @ np.asarray(f))

    def cumulative(self, f) -> np.ndarray:
        """``F(x_i) = int_{x_0}^{x_i} f``."""
        f = np.asarray(f)
        local = (f[self.index] @ self._fwd.T) * self.half[:, None]
        offsets = np.concatenate(([0.0], np.cumsum(local[:, -1])[:-1]))
        out = np.empty(self.size, dtype=np.result_type(f, float))
        out[self.index] = local + offsets[:, None]
        return out

    def cumulative_from_end(self, f, tail=0.0) -> np.ndarray:
        """
        ``G(x_i) = tail + int_{x_i}^{x_end} f``.

        Accumulated from the right so that values in a decaying tail keep
        their relative accuracy.
        """
        f = np.asarray(f)
        local = (f[self.index] @ self._bwd.T) * self.half[:, None]
        totals = local[:, 0]
        offsets = tail + np.concatenate((np.cumsum(totals[::-1])[::-1][1:], [0.0]))
        out = np.empty(self.size, dtype=np.result_type(f, float))
        out[self.index] = local + offsets[:, None]
        return out

    def derivative(self, f) -> np.ndarray:
        """
        Panel-wise spectral derivative.

        At shared edges the two one-sided values are averaged.
        """
        f = np.asarray(f)
        local = (f[self.index] @ self._diff.T) / self.half[:, None]
        out = np.zeros(self.size, dtype=np.result_type(f, float))
        count = np.zeros(self.size)
        np.add.at(out, self.index, local)
        np.add.at(count, self.index, 1.0)
        return out / count

    def panel_differentiation(self, i: int) -> np.ndarray:
        """Differentiation matrix acting on the samples of panel ``i``."""
        return self._diff / self.half[i]

    def panel_integration_from_end(self, i: int) -> np.ndarray:
        """Matrix giving ``int_{x_j}^{b_i} f`` on panel ``i`` from its samples."""
        return self._bwd * self.half[i]

    @classmethod
    def graded(cls, x_end: float, base_step: float, p: int, scale=None,
               origin_levels: int = 0, x_start: float = 0.0) -> "PanelGrid":
        """
        Build panels on ``[x_start, x_end]``.

        Panel widths are ``base_step * min(1, scale(x))`` where ``scale`` is a
        local length scale (``None`` means uniform).  ``origin_levels`` splits
        the first panel geometrically toward ``x_start``, for integrands with
        a weak singularity at the origin.
        """
        edges = [x_start]
        x = x_start
        while x < x_end:
            h = base_step
            if scale is not None:
                h = base_step * min(1.0, float(scale(x)))
                h = max(h, base_step * 1e-3)
            if x + 1.5 * h >= x_end:
                x = x_end
            else:
                x = x + h
            edges.append(x)
        edges = np.asarray(edges)
        if origin_levels > 0:
            first = edges[1] - edges[0]
            inner = x_start + first * 0.5 ** np.arange(origin_levels, 0, -1)
            edges = np.concatenate(([edges[0]], inner, edges[1:]))
        return cls(edges, p)

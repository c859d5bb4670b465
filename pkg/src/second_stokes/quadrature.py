"""Composite Gauss-Legendre grids on (0, tau_max) and principal-value integration.

Every semi-infinite integral in the solver carries Gaussian damping, so the
half-line is truncated at ``tau_max`` (default 7, where exp(-tau^2) ~ 5e-22)
and covered with Gauss-Legendre panels refined toward the origin.  Cauchy
principal values are computed by singularity subtraction,

    PV int f(t)/(t - c) dt = int (f(t) - f(c))/(t - c) dt
                             + f(c) * log((tau_max - c)/c),

which leaves a smooth integrand that the panel rule handles at full order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.special import roots_legendre

from .errors import DomainError

DEFAULT_TAU_MAX = 7.0

# Panel edges grow roughly geometrically away from 0 so that integrands with
# structure on the O(0.01) scale near the endpoint are still resolved.
_DEFAULT_BREAKPOINTS = (
    0.0, 0.005, 0.02, 0.06, 0.15, 0.30, 0.55, 0.90, 1.35,
    1.90, 2.55, 3.30, 4.15, 5.00, 6.00, 7.0,
)
_DEFAULT_ORDER = 24


@dataclass(frozen=True)
class QuadratureGrid:
    """Immutable composite Gauss-Legendre rule on (0, tau_max).

    Attributes:
        nodes: strictly increasing abscissae, all inside (0, tau_max).
        weights: positive weights; they sum to tau_max.
        tau_max: right endpoint of the integration interval.
        breakpoints: panel edges including 0 and tau_max.
        order: Gauss-Legendre order used on each panel.
    """

    nodes: np.ndarray
    weights: np.ndarray
    tau_max: float
    breakpoints: np.ndarray
    order: int

    def __post_init__(self):
        if self.nodes.ndim != 1 or self.nodes.shape != self.weights.shape:
            raise DomainError("nodes and weights must be 1-d arrays of equal length")
        if not np.all(np.diff(self.nodes) > 0.0):
            raise DomainError("quadrature nodes must be strictly increasing")
        if self.nodes[0] <= 0.0 or self.nodes[-1] >= self.tau_max:
            raise DomainError("quadrature nodes must lie strictly inside (0, tau_max)")
        if np.any(self.weights <= 0.0):
            raise DomainError("quadrature weights must be positive")
        self.nodes.setflags(write=False)
        self.weights.setflags(write=False)
        self.breakpoints.setflags(write=False)

    def __len__(self) -> int:
        return self.nodes.size

    def integrate(self, values: np.ndarray) -> complex:
        """Integrate sampled values (one per node) over (0, tau_max)."""
        values = np.asarray(values)
        if values.shape[-1] != self.nodes.size:
            raise DomainError("sample count does not match the grid")
        return values @ self.weights

    def integrate_fn(self, f: Callable[[np.ndarray], np.ndarray]) -> complex:
        """Integrate a vectorized callable over (0, tau_max)."""
        return self.integrate(np.asarray(f(self.nodes)))

    def refined(self, factor: int = 2) -> "QuadratureGrid":
        """Same panel structure with the per-panel order multiplied."""
        return build_grid(
            tau_max=self.tau_max,
            breakpoints=tuple(self.breakpoints),
            order=self.order * factor,
        )

    def with_pole(self, pole: float, scale: float | None = None) -> "QuadratureGrid":
        """Insert panel edges at and around an interior point.

        Splitting the panel at the pole keeps subtracted Cauchy kernels smooth
        on every panel.  ``scale`` optionally adds nested edges at pole +- scale
        and pole +- 3*scale for kernels with structure on a known short scale.
        """
        if not (0.0 < pole < self.tau_max):
            raise DomainError(f"pole {pole!r} outside (0, {self.tau_max})")
        extra = [pole]
        if scale is not None and scale > 0.0:
            extra.extend([pole - 3 * scale, pole - scale, pole + scale, pole + 3 * scale])
        edges = np.asarray(self.breakpoints, dtype=float)
        keep = [e for e in extra if 0.0 < e < self.tau_max]
        merged = np.union1d(edges, keep)
        # Drop new edges that all but coincide with existing ones.
        merged = merged[np.concatenate(([True], np.diff(merged) > 1e-12))]
        return build_grid(tau_max=self.tau_max, breakpoints=tuple(merged), order=self.order)


def build_grid(
    tau_max: float = DEFAULT_TAU_MAX,
    breakpoints: tuple[float, ...] | None = None,
    order: int = _DEFAULT_ORDER,
) -> QuadratureGrid:
    """Assemble a composite Gauss-Legendre grid.

    Args:
        tau_max: right endpoint; the default keeps exp(-tau_max^2) below 1e-21.
        breakpoints: panel edges; must start at 0 and end at tau_max.  The
            default refines toward 0 where the continuum densities vary fastest.
        order: Gauss-Legendre points per panel.
    """
    if not np.isfinite(tau_max) or tau_max <= 0.0:
        raise DomainError("tau_max must be finite and positive")
    if order < 2:
        raise DomainError("order must be at least 2")
    if breakpoints is None:
        edges = np.asarray(_DEFAULT_BREAKPOINTS, dtype=float) * (tau_max / DEFAULT_TAU_MAX)
    else:
        edges = np.asarray(breakpoints, dtype=float)
    if edges[0] != 0.0 or abs(edges[-1] - tau_max) > 1e-12 or np.any(np.diff(edges) <= 0.0):
        raise DomainError("breakpoints must increase strictly from 0 to tau_max")
    edges[-1] = tau_max

    x, w = roots_legendre(order)
    nodes, weights = [], []
    for lo, hi in zip(edges[:-1], edges[1:]):
        half = 0.5 * (hi - lo)
        nodes.append(lo + half * (x + 1.0))
        weights.append(half * w)
    return QuadratureGrid(
        nodes=np.concatenate(nodes),
        weights=np.concatenate(weights),
        tau_max=float(tau_max),
        breakpoints=edges.copy(),
        order=int(order),
    )


def principal_value(
    f: Callable[[np.ndarray], np.ndarray],
    pole: float,
    grid: QuadratureGrid,
) -> complex:
    """Cauchy principal value of int_0^tau_max f(t)/(t - pole) dt.

    ``f`` must be vectorized and Hoelder-continuous at the pole; the pole must
    lie strictly inside (0, tau_max).
    """
    if not np.isfinite(pole):
        raise DomainError("pole must be finite")
    if not (0.0 < pole < grid.tau_max):
        raise DomainError(f"pole {pole!r} outside the grid support (0, {grid.tau_max})")
    split = grid.with_pole(pole)
    t = split.nodes
    ft = np.asarray(f(t))
    fp = np.asarray(f(np.array([pole])))[0]
    smooth = (ft - fp) / (t - pole)
    return split.integrate(smooth) + fp * np.log((grid.tau_max - pole) / pole)

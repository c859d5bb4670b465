"""Independent discrete-ordinates solution of the half-space problem.

Brute-force validation path: the boundary problem

    mu dh/dx + z0 h(x, mu) = (1/sqrt(pi)) int exp(-m'^2) (1 + a mu m') h(x, m') dm',
    h(0, mu) = 2 u0 for mu > 0,     h(x -> inf, mu) = 0,

is solved by source iteration over upwind sweeps.  Ordinates are half-range
Gauss-Legendre nodes on (0, mu_max] mirrored to the negative half-range, with
exp(-mu^2) absorbed into the moment weights; each sweep integrates
mu h' + z0 h = S exactly per cell (integrating factor) with the source
interpolated linearly, which makes the scheme unconditionally stable for
complex z0 and second-order accurate in the cell size.

This module never reads any output of the analytic modules; it only shares
ModelParams.  Comparisons live in :func:`compare_with_analytic`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.signal import lfilter
from scipy.special import roots_legendre

from .errors import ConvergenceError, DomainError, UsageError
from .model import ModelParams

SQRT_PI = float(np.sqrt(np.pi))

_MU_PANEL_FRACTIONS = (0.0, 1 / 60, 1 / 20, 7 / 60, 1 / 4, 1 / 2, 1.0)


@dataclass(frozen=True)
class LatticeConfig:
    """Discretization of the half-space sweep.

    The defaults keep the discretization error well below the 1 percent band
    used for validation while running in seconds.
    """

    x_max: float = 40.0
    nx: int = 2000
    n_mu: int = 64
    tol: float = 1e-10
    max_iter: int = 10_000
    mu_max: float = 6.0
    check_truncation: bool = False

    def __post_init__(self):
        if not (self.x_max > 0.0 and np.isfinite(self.x_max)):
            raise DomainError("x_max must be positive and finite")
        if self.nx < 200:
            raise DomainError("nx must be at least 200")
        if self.n_mu < 24:
            raise DomainError("n_mu must be at least 24")
        if not (self.tol > 0.0):
            raise DomainError("tol must be positive")
        if self.max_iter < 1:
            raise DomainError("max_iter must be positive")
        if self.mu_max <= 1.0:
            raise DomainError("mu_max must exceed 1")

    def ordinates(self) -> tuple[np.ndarray, np.ndarray]:
        """Half-range nodes and plain Gauss-Legendre weights on (0, mu_max]."""
        edges = self.mu_max * np.asarray(_MU_PANEL_FRACTIONS, dtype=float)
        n_panels = edges.size - 1
        base, extra = divmod(self.n_mu, n_panels)
        nodes, weights = [], []
        for i, (lo, hi) in enumerate(zip(edges[:-1], edges[1:])):
            order = base + (1 if i < extra else 0)
            x, w = roots_legendre(order)
            half = 0.5 * (hi - lo)
            nodes.append(lo + half * (x + 1.0))
            weights.append(half * w)
        return np.concatenate(nodes), np.concatenate(weights)


@dataclass(frozen=True)
class OracleSolution:
    """Converged discrete-ordinates solution and its moments."""

    params: ModelParams
    config: LatticeConfig
    x: np.ndarray
    mu: np.ndarray                 # positive half-range ordinates
    h_pos: np.ndarray              # h(x, +mu), shape (nx+1, n_mu)
    h_neg: np.ndarray              # h(x, -mu)
    velocity: np.ndarray           # u_y(x)/u0 amplitude
    friction: complex              # normalized amplitude, matches fields.friction
    iterations: int
    residuals: np.ndarray
    warnings: tuple[str, ...] = ()

    def wall_values(self) -> tuple[np.ndarray, np.ndarray]:
        """(mu < 0 ordinates, h(0, mu)) at the wall."""
        return -self.mu[::-1], self.h_neg[0, ::-1].copy()


def _sweep_coefficients(z0: complex, dx: float, mu: np.ndarray):
    """Exact-exponential cell update h_{i+1} = E h_i + P S_i + Q S_{i+1}."""
    alpha = z0 * dx / mu
    e = np.exp(-alpha)
    p = (-np.expm1(-alpha) - alpha * e) / (z0 * alpha)
    q = (alpha + np.expm1(-alpha)) / (z0 * alpha)
    return e, p, q


def solve_halfspace(params: ModelParams, config: LatticeConfig | None = None) -> OracleSolution:
    """Source iteration until the sup change of h drops below tol * u0.

    Raises ConvergenceError when max_iter is exhausted; with
    ``config.check_truncation`` the domain is doubled once and a warning is
    attached if the friction amplitude moves by more than 0.1 percent.
    """
    cfg = config if config is not None else LatticeConfig()
    sol = _solve_fixed_domain(params, cfg)
    if not cfg.check_truncation:
        return sol
    wide = _solve_fixed_domain(
        params,
        LatticeConfig(
            x_max=2.0 * cfg.x_max, nx=2 * cfg.nx, n_mu=cfg.n_mu,
            tol=cfg.tol, max_iter=cfg.max_iter, mu_max=cfg.mu_max,
        ),
    )
    drift = abs(wide.friction - sol.friction) / abs(wide.friction)
    if drift > 1e-3:
        return OracleSolution(
            **{**sol.__dict__, "warnings": (
                f"friction moved by {drift:.2e} when doubling x_max; "
                "domain truncation is not converged",
            )},
        )
    return sol


def _solve_fixed_domain(params: ModelParams, cfg: LatticeConfig) -> OracleSolution:
    mu, w_mu = cfg.ordinates()
    weights = w_mu * np.exp(-mu * mu)          # absorb the Gaussian
    z0, a, u0 = params.z0, params.a, params.u0
    x = np.linspace(0.0, cfg.x_max, cfg.nx + 1)
    dx = x[1] - x[0]
    e, p, q = _sweep_coefficients(z0, dx, mu)

    n = cfg.nx + 1
    h_pos = np.zeros((n, mu.size), dtype=complex)
    h_neg = np.zeros_like(h_pos)
    u = np.empty(n, dtype=complex)
    residuals = []
    for iteration in range(1, cfg.max_iter + 1):
        m0 = (h_pos + h_neg) @ weights
        m1 = (h_pos - h_neg) @ (weights * mu)
        s_iso = m0 / SQRT_PI
        s_odd = a * m1 / SQRT_PI
        worst = 0.0
        for j in range(mu.size):
            s = s_iso + mu[j] * s_odd
            u[0] = 2.0 * u0
            u[1:] = p[j] * s[:-1] + q[j] * s[1:]
            new = lfilter([1.0], [1.0, -e[j]], u)
            worst = max(worst, float(np.max(np.abs(new - h_pos[:, j]))))
            h_pos[:, j] = new

            s = (s_iso - mu[j] * s_odd)[::-1]
            u[0] = 0.0
            u[1:] = p[j] * s[:-1] + q[j] * s[1:]
            new = lfilter([1.0], [1.0, -e[j]], u)[::-1]
            worst = max(worst, float(np.max(np.abs(new - h_neg[:, j]))))
            h_neg[:, j] = new
        residuals.append(worst)
        if worst < cfg.tol * u0:
            break
    else:
        raise ConvergenceError(
            f"source iteration did not reach tol={cfg.tol:g} within "
            f"{cfg.max_iter} iterations (last change {residuals[-1]:.3e})",
            residual=residuals[-1],
        )

    m0 = (h_pos + h_neg) @ weights
    velocity = m0 / (2.0 * SQRT_PI * u0)
    first_moment = (h_pos[0] - h_neg[0]) @ (weights * mu)
    friction = first_moment / (2.0 * SQRT_PI * u0)
    return OracleSolution(
        params=params,
        config=cfg,
        x=x,
        mu=mu,
        h_pos=h_pos,
        h_neg=h_neg,
        velocity=velocity,
        friction=complex(friction),
        iterations=iteration,
        residuals=np.asarray(residuals),
    )


@dataclass(frozen=True)
class OracleComparison:
    """Error report between the oracle and the analytic solution.

    Thresholds are not enforced here; the acceptance suite owns them.
    """

    params: ModelParams
    velocity_linf_rel: float
    friction_rel: float
    wall_distribution_rel: float
    x_window: tuple[float, float]
    velocity_errors: np.ndarray = field(repr=False, default=None)


def compare_with_analytic(
    oracle: OracleSolution,
    analytic,
    x_window: tuple[float, float] = (0.0, 10.0),
) -> OracleComparison:
    """Deterministic error report; both solutions must share ModelParams.

    ``analytic`` is a fields.HalfSpaceSolution (duck-typed to avoid an import
    cycle: it must expose params, velocity_profile, wall_distribution,
    friction).
    """
    if analytic.params != oracle.params:
        raise UsageError(
            f"parameter mismatch: oracle {oracle.params} vs analytic {analytic.params}"
        )
    mask = (oracle.x >= x_window[0]) & (oracle.x <= x_window[1])
    xs = oracle.x[mask]
    ref = analytic.velocity_profile(xs)
    diff = np.abs(ref - oracle.velocity[mask])
    scale = float(np.max(np.abs(ref)))
    vel_err = float(np.max(diff)) / scale

    fr_a = analytic.friction()
    fr_err = abs(fr_a - oracle.friction) / abs(fr_a)

    mu_neg, h_oracle = oracle.wall_values()
    h_a = analytic.wall_distribution(mu_neg)
    wall_err = float(np.max(np.abs(h_a - h_oracle))) / float(np.max(np.abs(h_a)))

    return OracleComparison(
        params=oracle.params,
        velocity_linf_rel=vel_err,
        friction_rel=fr_err,
        wall_distribution_rel=wall_err,
        x_window=x_window,
        velocity_errors=diff / scale,
    )

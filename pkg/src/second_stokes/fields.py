"""Physical outputs: wall distribution, velocity field, friction, diagnostics.

All returned quantities are complex amplitudes multiplying exp(-i omega1 t1);
one complex multiplication reconstructs the full time-dependent value.  The
velocity profile is reported as u_y(x1)/u0, the friction as the dimensionless
amplitude F = F_s exp(i omega1 t1) / (2 p u0) with p = n k T.

The strongest internal check is :meth:`HalfSpaceSolution.boundary_residual`,
which reconstructs the one-sided singular integral equation expressing the
diffuse wall condition (discrete term + principal-value integral + the
second-moment constant + the jump term) and reports the worst relative
deviation from its right-hand side 2 u0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError, UsageError
from .expansion import (
    ExpansionCoefficients,
    density_at,
    density_on_nodes,
    solve_expansion,
)
from .model import ModelParams
from .plasma import SQRT_PI
from .quadrature import QuadratureGrid, build_grid, principal_value
from .riemann import RiemannFactorization, build_factorization
from .spectral import (
    SpectrumResult,
    _theta_cached,
    dispersion,
    eta0_asymptotic,
    index_kappa,
)

_DEFAULT_RESIDUAL_MU = np.geomspace(0.05, 4.0, 50)


@dataclass(frozen=True)
class SolutionField:
    """Sampled snapshot of one solved half-space problem."""

    params: ModelParams
    spectrum: SpectrumResult
    x_samples: np.ndarray
    velocity_amplitude: np.ndarray
    wall_mu: np.ndarray
    wall_distribution: np.ndarray
    friction_amplitude: complex
    warnings: tuple[str, ...] = ()


class HalfSpaceSolution:
    """Analytic solution assembled from the factorization and coefficients.

    Construction is eager; afterwards the object is immutable in spirit and
    every evaluator is pure, so instances are safe to share across threads.
    """

    def __init__(self, params: ModelParams, grid: QuadratureGrid | None = None):
        self.params = params
        profile = _theta_cached(params)
        base = index_kappa(params, profile)
        self.factorization = build_factorization(params, grid, profile, base)
        self.coefficients = solve_expansion(self.factorization)
        self.spectrum = SpectrumResult(
            kappa=base.kappa,
            n_zeros=base.n_zeros,
            omega1_star=base.omega1_star,
            eta0=self.coefficients.eta0,
            eta0_residual=(
                None if self.coefficients.eta0 is None
                else abs(dispersion(self.coefficients.eta0, params))
            ),
            warnings=base.warnings,
        )
        self._density_nodes = density_on_nodes(self.factorization, self.coefficients)

    # -- convenience ---------------------------------------------------------

    @property
    def kappa(self) -> int:
        return self.factorization.kappa

    @property
    def warnings(self) -> tuple[str, ...]:
        return self.factorization.warnings

    @property
    def grid(self) -> QuadratureGrid:
        return self.factorization.grid

    def density(self, eta):
        """Continuous-spectrum density a(eta)."""
        return density_at(self.factorization, self.coefficients, eta)

    # -- fields ----------------------------------------------------------------

    def velocity_profile(self, x1) -> np.ndarray:
        """Amplitude u_y(x1)/u0 for an array of heights x1 >= 0."""
        x = np.atleast_1d(np.asarray(x1, dtype=float))
        if np.any(x < 0.0) or np.any(~np.isfinite(x)):
            raise DomainError("heights must be finite and nonnegative")
        p = self.params
        eta = self.grid.nodes
        kernels = np.exp(-np.outer(x, p.z0 / eta))
        out = kernels @ (self.grid.weights * self._density_nodes)
        if self.kappa == 1:
            out = out + self.coefficients.a0 * np.exp(-x * p.z0 / self.coefficients.eta0)
        return out * p.z0 / (2.0 * SQRT_PI * p.u0)

    def wall_velocity(self) -> complex:
        """Amplitude u_y(0)/u0; identical code path to velocity_profile."""
        return complex(self.velocity_profile(np.array([0.0]))[0])

    def wall_distribution(self, mu):
        """h(0, mu) for molecules flying toward the wall (mu < 0).

        For mu > 0 the diffuse condition fixes h(0, mu) = 2 u0 instead, so
        nonnegative mu is a domain error.
        """
        mu_arr = np.atleast_1d(np.asarray(mu, dtype=float))
        if np.any(mu_arr >= 0.0) or np.any(~np.isfinite(mu_arr)):
            raise DomainError("wall_distribution requires mu < 0")
        p = self.params
        eta = self.grid.nodes
        kern = (
            eta * (1.0 - p.b * np.outer(mu_arr, eta))
            / (eta - mu_arr[:, None])
        )
        out = kern @ (self.grid.weights * self._density_nodes) / SQRT_PI
        if self.kappa == 1:
            e0, a0 = self.coefficients.eta0, self.coefficients.a0
            out = out + a0 * e0 * (1.0 - p.b * mu_arr * e0) / (SQRT_PI * (e0 - mu_arr))
        return complex(out[0]) if np.ndim(mu) == 0 else out

    def friction(self) -> complex:
        """Normalized friction amplitude F = -i w1 [a0 eta0 + int eta a] / (2 sqrt(pi) u0)."""
        p = self.params
        total = self.grid.integrate(self.grid.nodes * self._density_nodes)
        if self.kappa == 1:
            total = total + self.coefficients.a0 * self.coefficients.eta0
        return -1j * p.omega1 * total / (2.0 * SQRT_PI * p.u0)

    def friction_closed_form(self) -> complex:
        """Friction through the per-regime closed forms (cross-check path)."""
        p = self.params
        fact = self.factorization
        t = self.grid.nodes
        base = fact.sin_zeta(t) * fact.inv_X_principal(t) / (1.0 - p.b * t * t)
        if self.kappa == 0:
            integral = self.grid.integrate(base) / np.pi
            return -1j * p.omega1 * integral / (1.0 + p.b * self.coefficients.J0)
        e0 = self.coefficients.eta0
        integral = self.grid.integrate(base / (t - e0)) / np.pi
        x0 = fact.X(e0)
        denom = p.b * e0**2 + self.coefficients.y0
        return -1j * p.omega1 * e0 / denom * (1.0 + (1.0 - p.b * e0**2) * x0 * integral)

    def friction_raw(self, n: float, boltzmann: float, temperature: float, t1: float = 0.0) -> complex:
        """Dimensional friction per unit area at time t1, given n, k, T."""
        pressure = n * boltzmann * temperature
        return (
            self.friction() * 2.0 * pressure * self.params.u0
            * np.exp(-1j * self.params.omega1 * t1)
        )

    # -- diagnostics -----------------------------------------------------------

    def boundary_residual(self, mu_values: np.ndarray | None = None) -> float:
        """Worst relative residual of the reconstructed wall condition.

        For each mu > 0 the left side (discrete term + A + principal-value
        integral + exp(mu^2) lambda_P(mu) a(mu)) is compared against 2 u0.
        Invariant under u0 rescaling.
        """
        mu_values = _DEFAULT_RESIDUAL_MU if mu_values is None else np.asarray(mu_values)
        p = self.params
        fact = self.factorization
        coeffs = self.coefficients
        target = 2.0 * p.u0

        def f(eta):
            eta = np.asarray(eta, dtype=float)
            return eta * (1.0 - p.b * eta * eta) * self.density(eta) / SQRT_PI

        worst = 0.0
        for mu in mu_values:
            mu = float(mu)
            lhs = coeffs.A + principal_value(f, mu, self.grid)
            lam_p = dispersion(mu, p, branch="principal")
            lhs = lhs + np.exp(mu * mu) * lam_p * self.density(mu)
            if self.kappa == 1:
                e0, a0 = coeffs.eta0, coeffs.a0
                lhs = lhs + e0 * (1.0 - p.b * mu * e0) * a0 / (SQRT_PI * (e0 - mu))
            worst = max(worst, abs(lhs - target) / target)
        return worst

    def recomputed_A(self) -> complex:
        """Second-moment constant re-derived from the final density by quadrature."""
        t = self.grid.nodes
        return self.params.b * self.grid.integrate(t * t * self._density_nodes) / SQRT_PI

    def sample(
        self,
        x_samples: np.ndarray | None = None,
        mu_samples: np.ndarray | None = None,
    ) -> SolutionField:
        """Evaluate the standard observables on sampling grids."""
        x = np.linspace(0.0, 10.0, 101) if x_samples is None else np.asarray(x_samples, float)
        mu = (
            -np.geomspace(0.05, 4.0, 40)[::-1]
            if mu_samples is None
            else np.asarray(mu_samples, float)
        )
        return SolutionField(
            params=self.params,
            spectrum=self.spectrum,
            x_samples=x,
            velocity_amplitude=self.velocity_profile(x),
            wall_mu=mu,
            wall_distribution=self.wall_distribution(mu),
            friction_amplitude=self.friction(),
            warnings=self.warnings,
        )


def solve(params: ModelParams, grid: QuadratureGrid | None = None) -> HalfSpaceSolution:
    """Build the full analytic solution for one parameter set."""
    return HalfSpaceSolution(params, grid)


def hydrodynamic_reference(x1, params: ModelParams):
    """Limiting oscillatory-layer profile exp(-x1 z0 / eta0_est).

    Meaningful as a reference for omega1 <~ 0.05; used only in tests and
    validation output.
    """
    x = np.asarray(x1, dtype=float)
    out = np.exp(-x * params.z0 / eta0_asymptotic(params))
    return complex(out) if out.ndim == 0 else out


# ---------------------------------------------------------------------------
# Eigenfunction moments (normalization checks)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=8)
def _symmetric_grid(m: float) -> QuadratureGrid:
    base = np.asarray(build_grid(tau_max=m).breakpoints)
    edges = np.concatenate((m - base[::-1], m + base[1:]))
    return build_grid(tau_max=2.0 * m, breakpoints=tuple(edges))


def phi_moment(eta, k: int, params: ModelParams, m: float = 7.0) -> complex:
    """k-th Gaussian moment of the eigenfunction Phi(eta, mu) over the full line.

    For eta on the positive half-line the distributional eigenfunction
    contributes a principal-value integral plus the jump term
    eta^k lambda_P(eta); for complex eta (the discrete zero) the kernel is
    regular.  The normalization makes the zeroth moment z0 and the first
    moment -i omega1 eta.
    """
    if k not in (0, 1):
        raise DomainError("only moments k = 0, 1 are defined")
    p = params
    grid = _symmetric_grid(m)
    if np.iscomplexobj(np.asarray(eta)) and complex(eta).imag != 0.0:
        e0 = complex(eta)
        if abs(e0.imag) < 0.1 and 0.0 < e0.real + m < 2.0 * m:
            grid = grid.with_pole(e0.real + m, scale=max(abs(e0.imag), 1e-3))
        mu = grid.nodes - m
        vals = np.exp(-mu * mu) * mu**k * e0 * (1.0 - p.b * mu * e0) / (e0 - mu)
        return grid.integrate(vals) / SQRT_PI
    eta = float(np.real(eta))
    if not (0.0 < eta < m):
        raise DomainError("real eta must lie inside (0, m)")

    def f(t):
        mu = np.asarray(t) - m
        return -np.exp(-mu * mu) * mu**k * eta * (1.0 - p.b * mu * eta) / SQRT_PI

    pv = principal_value(f, eta + m, grid)
    jump = eta**k * dispersion(eta, p, branch="principal")
    return pv + jump


# ---------------------------------------------------------------------------
# Dedicated BGK-limit formulas (no coupling terms anywhere)
# ---------------------------------------------------------------------------

def _require_bgk(fact: RiemannFactorization):
    if fact.params.a != 0.0:
        raise UsageError("dedicated BGK formulas require a = 0")


def bgk_wall_distribution(mu, fact: RiemannFactorization, eta0: complex | None = None):
    """h(0, mu), mu < 0, from the single-relaxation-time closed forms."""
    _require_bgk(fact)
    mu_arr = np.atleast_1d(np.asarray(mu, dtype=float))
    if np.any(mu_arr >= 0.0):
        raise DomainError("wall distribution requires mu < 0")
    u0 = fact.params.u0
    t = fact.grid.nodes
    base = fact.sin_zeta(t) * fact.inv_X_principal(t)
    if fact.kappa == 0:
        kern = base / (t - mu_arr[:, None])
        out = 2.0 * u0 * (kern @ fact.grid.weights) / np.pi
    else:
        x0 = fact.X(eta0)
        kern = base / ((t - eta0) * (t - mu_arr[:, None]))
        out = 2.0 * u0 * (
            1.0 / (x0 * (eta0 - mu_arr)) + (kern @ fact.grid.weights) / np.pi
        )
    return complex(out[0]) if np.ndim(mu) == 0 else out


def bgk_velocity_profile(x1, fact: RiemannFactorization, eta0: complex | None = None):
    """u_y(x1)/u0 from the single-relaxation-time closed forms."""
    _require_bgk(fact)
    x = np.atleast_1d(np.asarray(x1, dtype=float))
    p = fact.params
    t = fact.grid.nodes
    base = fact.sin_zeta(t) * fact.inv_X_principal(t) / t
    kernels = np.exp(-np.outer(x, p.z0 / t))
    if fact.kappa == 0:
        out = p.z0 * (kernels @ (fact.grid.weights * base)) / np.pi
    else:
        x0 = fact.X(eta0)
        integral = kernels @ (fact.grid.weights * base / (t - eta0)) / np.pi
        out = p.z0 / (eta0 * x0) * (np.exp(-x * p.z0 / eta0) + eta0 * x0 * integral)
    return complex(out[0]) if np.ndim(x1) == 0 else out


def bgk_friction(fact: RiemannFactorization, eta0: complex | None = None) -> complex:
    """Normalized friction amplitude from the single-relaxation-time forms."""
    _require_bgk(fact)
    p = fact.params
    t = fact.grid.nodes
    base = fact.sin_zeta(t) * fact.inv_X_principal(t)
    if fact.kappa == 0:
        return -1j * p.omega1 * fact.grid.integrate(base) / np.pi
    x0 = fact.X(eta0)
    integral = fact.grid.integrate(base / (t - eta0)) / np.pi
    return -1j * p.omega1 / x0 * (1.0 + x0 * integral)

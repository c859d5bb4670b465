"""Homogeneous Riemann boundary problem X+ = G X- on the half-line.

The factor is built from the Cauchy integral

    V(z) = (1/pi) int_0^tau_max zeta(t) / (t - z) dt,
    zeta(t) = theta(t)/2 - (i/2) ln|G(t)| - pi kappa,

as X(z) = z^(-kappa) exp V(z).  On the cut the principal value V_P gives
X_P = mu^(-kappa) exp V_P and the one-sided limits X+- = mu^(-kappa)
exp(V_P +- i zeta), which satisfy X+ = G X- by the Plemelj formulas.  The
tail of zeta beyond tau_max decays like the Gaussian jump of the dispersion
function and is truncated.

sin(zeta) is always evaluated as (-1)^kappa sin(zeta + pi kappa) so that no
precision is lost against the endpoint values zeta(0) = -pi kappa and
zeta(tau_max) ~ 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from .model import ModelParams
from .quadrature import QuadratureGrid, build_grid, principal_value
from .spectral import (
    SpectrumResult,
    ThetaProfile,
    _theta_cached,
    boundary_values,
    index_kappa,
)

TWO_PI = 2.0 * np.pi

#: |Im z| below which off-cut Cauchy integrals get pole-adjacent refinement.
_NEAR_CUT = 0.1


@dataclass(frozen=True)
class RiemannFactorization:
    """Immutable factorization data; all evaluators are pure.

    Attributes:
        params: problem parameters.
        kappa: winding index of G, in {0, 1}.
        profile: unwrapped argument of G (exact pointwise evaluator).
        grid: master quadrature grid shared by every integral downstream.
        zeta_taus / zeta_samples: zeta sampled along the profile walk,
            kept for diagnostics and endpoint checks.
        warnings: propagated near-critical warnings.
    """

    params: ModelParams
    kappa: int
    profile: ThetaProfile
    grid: QuadratureGrid
    zeta_taus: np.ndarray
    zeta_samples: np.ndarray
    warnings: tuple[str, ...] = ()
    _vp_cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        self.zeta_taus.setflags(write=False)
        self.zeta_samples.setflags(write=False)

    # -- pointwise data on the cut ------------------------------------------

    def _q(self, tau):
        """q(tau) = theta/2 - (i/2) ln|G| = zeta + pi kappa, exact pointwise."""
        tau = np.atleast_1d(np.asarray(tau, dtype=float))
        lam_p, lam_m = boundary_values(tau, self.params)
        g = lam_p / lam_m
        approx = np.interp(tau, self.profile.taus, self.profile.thetas)
        principal = np.angle(g)
        theta = principal + TWO_PI * np.round((approx - principal) / TWO_PI)
        theta[tau == 0.0] = 0.0
        return 0.5 * theta - 0.5j * np.log(np.abs(g))

    def zeta(self, tau):
        """zeta(tau) = q(tau) - pi kappa."""
        out = self._q(tau) - np.pi * self.kappa
        return complex(out[0]) if np.ndim(tau) == 0 else out

    def sin_zeta(self, tau):
        """sin zeta(tau), computed from q to stay exact near the endpoints."""
        out = (-1.0) ** self.kappa * np.sin(self._q(tau))
        return complex(out[0]) if np.ndim(tau) == 0 else out

    # -- Cauchy integral off the cut ----------------------------------------

    def V(self, z: complex) -> complex:
        """Cauchy-type integral of zeta/pi; analytic off [0, tau_max]."""
        z = complex(z)
        if not np.isfinite(z):
            raise DomainError("V requires finite z")
        if z.imag == 0.0 and z.real >= 0.0:
            raise DomainError("z lies on the cut; use V_principal / X_principal")
        grid = self.grid
        if abs(z.imag) < _NEAR_CUT and 0.0 < z.real < grid.tau_max:
            grid = grid.with_pole(z.real, scale=max(abs(z.imag), 1e-3))
        vals = self.zeta(grid.nodes) / (grid.nodes - z)
        return grid.integrate(vals) / np.pi

    def V_principal(self, mu: float) -> complex:
        """Principal value of the Cauchy integral at mu on the cut."""
        mu = float(mu)
        cached = self._vp_cache.get(mu)
        if cached is not None:
            return cached
        out = principal_value(self.zeta, mu, self.grid) / np.pi
        self._vp_cache[mu] = out
        return out

    def _vp_nodes(self) -> np.ndarray:
        """V_P at every master-grid node (computed once, then cached)."""
        cached = self._vp_cache.get("nodes")
        if cached is None:
            cached = np.array([self.V_principal(t) for t in self.grid.nodes])
            self._vp_cache["nodes"] = cached
        return cached

    # -- the factor -----------------------------------------------------------

    def X(self, z: complex) -> complex:
        """X(z) = z^(-kappa) exp V(z) off the cut."""
        z = complex(z)
        if z == 0.0:
            raise DomainError("X has a pole/branch structure at z = 0")
        return z ** (-self.kappa) * np.exp(self.V(z))

    def X_principal(self, mu):
        """X_P(mu) = mu^(-kappa) exp V_P(mu) strictly inside (0, tau_max)."""
        if np.ndim(mu) == 0:
            mu = float(mu)
            if not (0.0 < mu < self.grid.tau_max):
                raise DomainError(f"mu must lie inside (0, {self.grid.tau_max})")
            return mu ** (-self.kappa) * np.exp(self.V_principal(mu))
        return np.array([self.X_principal(float(m)) for m in np.asarray(mu)])

    def X_plus(self, mu):
        """Boundary value from above: mu^(-kappa) exp(V_P + i zeta)."""
        return self.X_principal(mu) * np.exp(1j * self.zeta(mu))

    def X_minus(self, mu):
        """Boundary value from below: mu^(-kappa) exp(V_P - i zeta)."""
        return self.X_principal(mu) * np.exp(-1j * self.zeta(mu))

    def inv_X_principal(self, tau):
        """1/X_P on an array of cut points, from cached node values if possible."""
        tau = np.asarray(tau, dtype=float)
        if tau.shape == self.grid.nodes.shape and np.array_equal(tau, self.grid.nodes):
            vp = self._vp_nodes()
        else:
            vp = np.array([self.V_principal(float(t)) for t in np.atleast_1d(tau)])
        return np.atleast_1d(tau) ** self.kappa * np.exp(-vp)


def build_factorization(
    params: ModelParams,
    grid: QuadratureGrid | None = None,
    profile: ThetaProfile | None = None,
    spectrum: SpectrumResult | None = None,
) -> RiemannFactorization:
    """Solve the homogeneous boundary problem for the given parameters.

    Near-critical index ambiguity propagates from the winding computation as
    an exception; the declared warning band only attaches a warning.
    """
    prof = profile if profile is not None else _theta_cached(params)
    spec = spectrum if spectrum is not None else index_kappa(params, prof)
    grid = grid if grid is not None else build_grid()
    fact = RiemannFactorization(
        params=params,
        kappa=spec.kappa,
        profile=prof,
        grid=grid,
        zeta_taus=prof.taus.copy(),
        zeta_samples=np.empty(0),
        warnings=spec.warnings,
    )
    object.__setattr__(fact, "zeta_samples", fact.zeta(prof.taus))
    fact.zeta_samples.setflags(write=False)
    return fact

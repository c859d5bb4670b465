"""Expansion coefficients of the half-space solution.

The general solution is a discrete mode (index regime kappa = 1 only) plus a
continuous-spectrum integral with density a(eta).  Feeding the expansion into
the diffuse wall condition gives a one-sided singular integral equation whose
closed-form solution, via the Riemann factor X, is

    kappa = 0:  a(eta) = 2 u0 sin zeta(eta) / (sqrt(pi) (1 + b J0) eta
                          (1 - b eta^2) X(eta)),
    kappa = 1:  a0 = 2 u0 sqrt(pi) / [b eta0^2 + eta0 (1 - b eta0^2) X(eta0)
                          (1 + b J1)],
                a(eta) = -C1 sin zeta(eta) / (sqrt(pi) eta (1 - b eta^2)
                          (eta - eta0) X(eta)),

with the moment integrals

    J0 = (1/pi) int t sin zeta(t) / ((1 - b t^2) X(t)) dt,
    J1 = (1/pi) int t sin zeta(t) / ((1 - b t^2) (t - eta0) X(t)) dt.

The sign in (1 + b J1) follows from eliminating the pole of the sectionally
analytic auxiliary function at eta0 together with its decay at infinity and
the closure A = b/sqrt(pi) * int eta^2 a(eta) d eta; the same elimination
gives A = 2 u0 b J0 / (1 + b J0) for kappa = 0 and A = -b C1 J1 for
kappa = 1.  Both regimes are validated downstream by reconstructing the wall
condition itself.
"""

from __future__ import annotations

import warnings as _warnings
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateDenominatorError, RegimeError
from .model import ModelParams
from .plasma import SQRT_PI
from .riemann import RiemannFactorization
from .spectral import find_eta0


@dataclass(frozen=True)
class ExpansionCoefficients:
    """Closed-form coefficients; discrete entries are None when kappa = 0."""

    kappa: int
    A: complex
    J0: complex | None = None
    J1: complex | None = None
    a0: complex | None = None
    C1: complex | None = None
    y0: complex | None = None
    eta0: complex | None = None


def compute_J0(fact: RiemannFactorization) -> complex:
    """Moment integral J0 of the kappa = 0 regime."""
    if fact.kappa != 0:
        raise RegimeError("J0 belongs to the kappa = 0 regime")
    t = fact.grid.nodes
    b = fact.params.b
    vals = t * fact.sin_zeta(t) * fact.inv_X_principal(t) / (1.0 - b * t * t)
    return fact.grid.integrate(vals) / np.pi


def compute_J1(fact: RiemannFactorization, eta0: complex) -> complex:
    """Moment integral J1 of the kappa = 1 regime; eta0 must lie off the cut."""
    if fact.kappa != 1:
        raise RegimeError("J1 belongs to the kappa = 1 regime")
    if abs(eta0.imag) < 1e-6:
        _warnings.warn(
            "eta0 is within 1e-6 of the real axis; J1 is nearly singular",
            stacklevel=2,
        )
    t = fact.grid.nodes
    b = fact.params.b
    vals = (
        t * fact.sin_zeta(t) * fact.inv_X_principal(t)
        / ((1.0 - b * t * t) * (t - eta0))
    )
    return fact.grid.integrate(vals) / np.pi


def continuous_density_k0(eta, fact: RiemannFactorization, J0: complex):
    """Continuous-spectrum density a(eta) in the kappa = 0 regime."""
    if fact.kappa != 0:
        raise RegimeError("kappa = 0 density requested in the kappa = 1 regime")
    p = fact.params
    denom = 1.0 + p.b * J0
    if abs(denom) < 1e-12:
        raise DegenerateDenominatorError("1 + b J0 vanished; unsupported parameters")
    eta_arr = np.atleast_1d(np.asarray(eta, dtype=float))
    out = (
        2.0 * p.u0 * fact.sin_zeta(eta_arr) * fact.inv_X_principal(eta_arr)
        / (SQRT_PI * denom * eta_arr * (1.0 - p.b * eta_arr**2))
    )
    return complex(out[0]) if np.ndim(eta) == 0 else out


def discrete_coefficient(
    fact: RiemannFactorization, eta0: complex, J1: complex
) -> tuple[complex, complex]:
    """Discrete coefficient a0 and the constant C1 of the kappa = 1 regime.

    C1 = -a0 eta0 (1 - b eta0^2) X(eta0) / sqrt(pi) holds by construction
    (it is the pole-removal condition).
    """
    if fact.kappa != 1:
        raise RegimeError("discrete coefficient exists only for kappa = 1")
    p = fact.params
    x0 = fact.X(eta0)
    w = eta0 * (1.0 - p.b * eta0**2) * x0
    denom = p.b * eta0**2 + w * (1.0 + p.b * J1)
    if abs(denom) < 1e-12:
        raise DegenerateDenominatorError(
            f"discrete-coefficient denominator vanished ({denom:.3e})"
        )
    a0 = 2.0 * p.u0 * SQRT_PI / denom
    C1 = -a0 * w / SQRT_PI
    return a0, C1


def continuous_density_k1(eta, fact: RiemannFactorization, eta0: complex, C1: complex):
    """Continuous-spectrum density a(eta) in the kappa = 1 regime."""
    if fact.kappa != 1:
        raise RegimeError("kappa = 1 density requested in the kappa = 0 regime")
    p = fact.params
    eta_arr = np.atleast_1d(np.asarray(eta, dtype=float))
    out = (
        -C1 * fact.sin_zeta(eta_arr) * fact.inv_X_principal(eta_arr)
        / (SQRT_PI * eta_arr * (1.0 - p.b * eta_arr**2) * (eta_arr - eta0))
    )
    return complex(out[0]) if np.ndim(eta) == 0 else out


def solve_expansion(
    fact: RiemannFactorization, eta0: complex | None = None
) -> ExpansionCoefficients:
    """Compute every coefficient for the regime selected by fact.kappa."""
    p = fact.params
    if fact.kappa == 0:
        J0 = compute_J0(fact)
        denom = 1.0 + p.b * J0
        if abs(denom) < 1e-12:
            raise DegenerateDenominatorError("1 + b J0 vanished; unsupported parameters")
        A = 2.0 * p.u0 * p.b * J0 / denom
        return ExpansionCoefficients(kappa=0, A=A, J0=J0)
    if eta0 is None:
        eta0 = find_eta0(p, fact.profile)
    J1 = compute_J1(fact, eta0)
    a0, C1 = discrete_coefficient(fact, eta0, J1)
    y0 = eta0 * (1.0 - p.b * eta0**2) * fact.X(eta0) * (1.0 + p.b * J1)
    A = -p.b * C1 * J1
    return ExpansionCoefficients(
        kappa=1, A=A, J1=J1, a0=a0, C1=C1, y0=y0, eta0=eta0
    )


def density_on_nodes(fact: RiemannFactorization, coeffs: ExpansionCoefficients) -> np.ndarray:
    """a(eta) sampled on the master grid nodes (used by every field integral)."""
    t = fact.grid.nodes
    p = fact.params
    common = fact.sin_zeta(t) * fact.inv_X_principal(t) / (1.0 - p.b * t * t)
    if coeffs.kappa == 0:
        return 2.0 * p.u0 * common / (SQRT_PI * (1.0 + p.b * coeffs.J0) * t)
    return -coeffs.C1 * common / (SQRT_PI * t * (t - coeffs.eta0))


def density_at(fact: RiemannFactorization, coeffs: ExpansionCoefficients, eta):
    """a(eta) at arbitrary points of (0, tau_max)."""
    if coeffs.kappa == 0:
        return continuous_density_k0(eta, fact, coeffs.J0)
    return continuous_density_k1(eta, fact, coeffs.eta0, coeffs.C1)

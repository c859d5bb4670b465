"""Plasma dispersion integral lambda0 and its real-axis building blocks.

lambda0 is the Hilbert-type transform of the Gaussian,

    lambda0(z) = (1/sqrt(pi)) int exp(-t^2) t / (t - z) dt,

a sectionally analytic function with a jump across the real axis.  Off the
axis it is evaluated through the Faddeeva function w(z) via the plasma
dispersion function Z(z) = i sqrt(pi) w(z) and lambda0 = 1 + z Z(z); this is
accurate to machine precision and yields the closed derivative

    lambda0'(z) = (lambda0(z) - 1)/z - 2 z lambda0(z).

On the axis the boundary values are lambda0+-(mu) = l(mu) +- i s(mu) with

    s(mu) = sqrt(pi) mu exp(-mu^2),      l(mu) = 1 - 2 mu D(mu),

where D is Dawson's integral.  Real-axis values are always computed from
(l, s), never as limits of off-axis calls, which would lose digits next to
the cut.
"""

from __future__ import annotations

import numpy as np
from scipy.special import dawsn, wofz

from .errors import DomainError

SQRT_PI = float(np.sqrt(np.pi))

#: Accepted branch selectors for real arguments.
BRANCHES = ("plus", "minus", "principal")


def l_s_pair(tau):
    """Real and imaginary building blocks of the boundary values.

    Returns (l(tau), s(tau)) for tau >= 0; both accept scalars or arrays.
    """
    tau = np.asarray(tau, dtype=float)
    if np.any(~np.isfinite(tau)) or np.any(tau < 0.0):
        raise DomainError("tau must be finite and nonnegative")
    l = 1.0 - 2.0 * tau * dawsn(tau)
    s = SQRT_PI * tau * np.exp(-tau * tau)
    if tau.ndim == 0:
        return float(l), float(s)
    return l, s


def _offaxis(z):
    """lambda0 strictly off the real axis (scalar or array, Im z != 0)."""
    z = np.asarray(z, dtype=complex)
    upper = z.imag > 0.0
    zu = np.where(upper, z, np.conj(z))
    lam = 1.0 + zu * (1j * SQRT_PI * wofz(zu))
    return np.where(upper, lam, np.conj(lam))


def lambda0(z, branch: str | None = None):
    """Plasma dispersion integral on the cut plane or on the cut itself.

    Args:
        z: complex point off the real axis, or a real number together with an
           explicit ``branch``.
        branch: one of "plus", "minus", "principal" selecting the boundary
           value l +- i s or the principal value l; required for real z.
    """
    arr = np.asarray(z)
    if np.any(~np.isfinite(arr)):
        raise DomainError("lambda0 requires finite input")
    if branch is None:
        if np.any(np.asarray(arr, dtype=complex).imag == 0.0):
            raise DomainError("real argument needs an explicit branch selector")
        out = _offaxis(arr)
        return complex(out) if out.ndim == 0 else out
    if branch not in BRANCHES:
        raise DomainError(f"unknown branch {branch!r}; expected one of {BRANCHES}")
    mu = np.asarray(arr, dtype=float)
    l, s = 1.0 - 2.0 * mu * dawsn(mu), SQRT_PI * mu * np.exp(-mu * mu)
    if branch == "plus":
        out = l + 1j * s
    elif branch == "minus":
        out = l - 1j * s
    else:
        out = l + 0j
    return complex(out) if np.ndim(out) == 0 else out


def lambda0_prime(z):
    """Derivative of lambda0 off the real axis via the closed recurrence."""
    arr = np.asarray(z, dtype=complex)
    if np.any(~np.isfinite(arr)) or np.any(arr.imag == 0.0):
        raise DomainError("lambda0_prime requires finite input off the real axis")
    lam = _offaxis(arr)
    out = (lam - 1.0) / arr - 2.0 * arr * lam
    return complex(out) if out.ndim == 0 else out

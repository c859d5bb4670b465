"""Dispersion function, winding index, critical frequency, discrete zero.

The separated kinetic equation leads to the dispersion function

    lambda(z) = -i omega1 + (1 - b z^2) lambda0(z),

whose zeros form the discrete spectrum.  They come in a pair +-eta0 and exist
exactly when the winding index kappa of G(tau) = lambda+ / lambda- along the
positive half-line equals 1, which happens below a critical frequency
omega1*(a).  kappa is computed by continuously unwrapping arg G from
theta(0) = 0; the zero count is N = 2 kappa.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.optimize import minimize_scalar
from scipy.special import dawsn

from .errors import (
    ConvergenceError,
    DomainError,
    NearCriticalError,
    NoDiscreteSpectrumError,
    ResolutionError,
    SingularityError,
)
from .model import ModelParams
from .plasma import SQRT_PI, l_s_pair, lambda0, lambda0_prime
from .quadrature import DEFAULT_TAU_MAX

TWO_PI = 2.0 * np.pi

#: Width of the band around omega1*(a) in which spectrum results carry a
#: near-critical warning: the discrete zero approaches the cut there and
#: quadrature accuracy degrades.
NEAR_CRITICAL_BAND = 0.01

#: Maximum admissible winding step between neighbouring samples.
_STEP_BOUND = 0.5 * np.pi
_MAX_DEPTH = 48


@dataclass(frozen=True)
class SpectrumResult:
    """Classification of the discrete spectrum for one parameter set.

    eta0 (the zero with positive real part) and its residual are present only
    in the kappa = 1 regime.
    """

    kappa: int
    n_zeros: int
    omega1_star: float
    eta0: complex | None = None
    eta0_residual: float | None = None
    warnings: tuple[str, ...] = ()


# ---------------------------------------------------------------------------
# Dispersion function and its boundary values
# ---------------------------------------------------------------------------

def dispersion(z, params: ModelParams, branch: str | None = None):
    """lambda(z) = -i omega1 + (1 - b z^2) lambda0(z) on the selected branch.

    Off-axis points need no branch; real points require one of
    "plus" / "minus" / "principal" exactly as in :func:`plasma.lambda0`.
    """
    z = np.asarray(z, dtype=complex if branch is None else float)
    lam0 = lambda0(z, branch)
    out = -1j * params.omega1 + (1.0 - params.b * np.asarray(z) ** 2) * lam0
    return complex(out) if np.ndim(out) == 0 else out


def dispersion_prime(z, params: ModelParams):
    """Analytic derivative lambda'(z), off the real axis only."""
    z = np.asarray(z, dtype=complex)
    lam0 = lambda0(z)
    dlam0 = lambda0_prime(z)
    out = -2.0 * params.b * z * lam0 + (1.0 - params.b * z * z) * dlam0
    return complex(out) if np.ndim(out) == 0 else out


def boundary_values(tau, params: ModelParams):
    """(lambda+, lambda-) on the real axis, from the (l, s) pair.

    Valid for any real tau: l is even and s odd in these closed forms.
    """
    tau = np.asarray(tau, dtype=float)
    l = 1.0 - 2.0 * tau * dawsn(tau)
    s = SQRT_PI * tau * np.exp(-tau * tau)
    pref = 1.0 - params.b * tau * tau
    lam_plus = -1j * params.omega1 + pref * (l + 1j * s)
    lam_minus = -1j * params.omega1 + pref * (l - 1j * s)
    return lam_plus, lam_minus


def coefficient_G(tau, params: ModelParams):
    """Ratio G(tau) = lambda+(tau) / lambda-(tau) for tau >= 0.

    Raises SingularityError if either boundary value (numerically) vanishes,
    which for omega1 > 0 can only happen on the critical set.
    """
    tau = np.asarray(tau, dtype=float)
    if np.any(~np.isfinite(tau)) or np.any(tau < 0.0):
        raise DomainError("tau must be finite and nonnegative")
    lam_plus, lam_minus = boundary_values(tau, params)
    floor = 1e-13 * abs(params.z0)
    bad = np.minimum(np.abs(lam_plus), np.abs(lam_minus)) < floor
    if np.any(bad):
        where = float(np.atleast_1d(tau)[np.argmax(np.atleast_1d(bad))])
        raise SingularityError(
            f"boundary value of the dispersion function vanishes near tau={where:.6g}",
            where=where,
        )
    out = lam_plus / lam_minus
    return complex(out) if out.ndim == 0 else out


def g_decomposition(tau, params: ModelParams):
    """Explicit decomposition G = (g1 + i g2) / g0 in terms of l and s.

    With p = (1 - b1 t^2) l, q = b2 t^2 s, p1 = (1 - b1 t^2) s, q1 = b2 t^2 l:

        g1 = p^2 - q^2 + (omega1 + q1)^2 - p1^2
        g2 = 2 [p p1 + q (omega1 + q1)]
        g0 = (p - q)^2 + (omega1 + p1 + q1)^2

    The (omega1 + q1)^2 square must be expanded with its cross term; dropping
    2 omega1 q1 breaks the identity G = lambda+/lambda- for a < 0.
    """
    tau = np.asarray(tau, dtype=float)
    l, s = l_s_pair(tau)
    w1 = params.omega1
    c = 1.0 - params.b1 * tau * tau
    d = params.b2 * tau * tau
    p, q = c * l, d * s
    p1, q1 = c * s, d * l
    g1 = p * p - q * q + (w1 + q1) ** 2 - p1 * p1
    g2 = 2.0 * (p * p1 + q * (w1 + q1))
    g0 = (p - q) ** 2 + (w1 + p1 + q1) ** 2
    return g0, g1, g2


# ---------------------------------------------------------------------------
# Winding profile of arg G and the index
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ThetaProfile:
    """Continuously unwrapped argument of G along (0, tau_max), theta(0) = 0.

    The stored samples satisfy |theta_{i+1} - theta_i| < pi/2; pointwise
    evaluation snaps the principal argument of G onto the branch interpolated
    from the samples, so returned values are exact, not interpolated.
    """

    params: ModelParams
    taus: np.ndarray
    thetas: np.ndarray
    tau_max: float

    def __post_init__(self):
        self.taus.setflags(write=False)
        self.thetas.setflags(write=False)

    @property
    def endpoint(self) -> float:
        return float(self.thetas[-1])

    def __call__(self, tau):
        tau = np.asarray(tau, dtype=float)
        scalar = tau.ndim == 0
        t = np.atleast_1d(tau)
        approx = np.interp(t, self.taus, self.thetas)
        principal = np.angle(np.atleast_1d(coefficient_G(t, self.params)))
        out = principal + TWO_PI * np.round((approx - principal) / TWO_PI)
        out[t == 0.0] = 0.0
        return float(out[0]) if scalar else out


def _walk(params, t0, g0, th0, t1, g1, depth, out_t, out_th):
    step = float(np.angle(g1 / g0))
    if abs(step) < _STEP_BOUND:
        out_t.append(t1)
        out_th.append(th0 + step)
        return th0 + step
    if depth >= _MAX_DEPTH:
        raise ResolutionError(
            f"arg G step bound not met after {_MAX_DEPTH} refinements near tau={t0:.6g}"
        )
    tm = 0.5 * (t0 + t1)
    gm = complex(coefficient_G(tm, params))
    thm = _walk(params, t0, g0, th0, tm, gm, depth + 1, out_t, out_th)
    return _walk(params, tm, gm, thm, t1, g1, depth + 1, out_t, out_th)


def theta_profile(params: ModelParams, tau_max: float = DEFAULT_TAU_MAX) -> ThetaProfile:
    """Unwrap arg G(tau) from 0 to tau_max with adaptive refinement."""
    seeds = np.unique(np.concatenate((
        [0.0],
        np.geomspace(1e-4, tau_max, 160),
        np.linspace(tau_max / 200.0, tau_max, 200),
    )))
    gs = np.empty(seeds.size, dtype=complex)
    gs[0] = 1.0 + 0j  # s(0) = 0 makes both boundary values coincide
    gs[1:] = coefficient_G(seeds[1:], params)
    out_t, out_th = [0.0], [0.0]
    th = 0.0
    for i in range(seeds.size - 1):
        th = _walk(params, seeds[i], gs[i], th, seeds[i + 1], gs[i + 1], 0, out_t, out_th)
    return ThetaProfile(
        params=params,
        taus=np.asarray(out_t),
        thetas=np.asarray(out_th),
        tau_max=float(tau_max),
    )


@lru_cache(maxsize=64)
def _theta_cached(params: ModelParams) -> ThetaProfile:
    return theta_profile(params)


def index_kappa(params: ModelParams, profile: ThetaProfile | None = None) -> SpectrumResult:
    """Winding index kappa = round(theta(tau_max) / 2 pi) and zero count N."""
    prof = profile if profile is not None else _theta_cached(params)
    turns = prof.endpoint / TWO_PI
    kappa = int(round(turns))
    if abs(turns - kappa) > 0.05:
        raise NearCriticalError(
            f"winding endpoint {turns:.4f} turns is too far from an integer; "
            "parameters are too close to the critical frequency"
        )
    if kappa not in (0, 1):
        raise NearCriticalError(f"unexpected winding index {kappa}")
    star = critical_frequency(params.a)
    warn = ()
    if abs(params.omega1 - star) < NEAR_CRITICAL_BAND:
        warn = (
            f"omega1={params.omega1:.6g} is within {NEAR_CRITICAL_BAND} of the "
            f"critical frequency {star:.6g}; quadrature accuracy degrades",
        )
    return SpectrumResult(
        kappa=kappa, n_zeros=2 * kappa, omega1_star=star, warnings=warn
    )


# ---------------------------------------------------------------------------
# Critical frequency
# ---------------------------------------------------------------------------

def capital_omega(tau, a: float):
    """Positive root Omega(tau, a) of w^4 - s1 w^2 - s0 = 0, or 0 if none.

    Here s0 = s^2 - l^2 and s1 = s0 (1 + a tau^2)^2 - 1.
    """
    if not np.isfinite(a) or not (-1.0 <= a <= 0.0):
        raise DomainError("a must lie in [-1, 0]")
    tau = np.asarray(tau, dtype=float)
    l, s = l_s_pair(tau)
    s0 = s * s - l * l
    s1 = s0 * (1.0 + a * tau * tau) ** 2 - 1.0
    disc = 0.25 * s1 * s1 + s0
    inner = np.where(disc >= 0.0, 0.5 * s1 + np.sqrt(np.maximum(disc, 0.0)), -1.0)
    out = np.where(inner > 0.0, np.sqrt(np.maximum(inner, 0.0)), 0.0)
    return float(out) if out.ndim == 0 else out


@lru_cache(maxsize=256)
def critical_frequency(a: float, tau_max: float = DEFAULT_TAU_MAX) -> float:
    """omega1*(a) = max over tau in (0, tau_max] of Omega(tau, a).

    Coarse scan plus bounded golden/parabolic refinement; the maximum is
    located to well below 1e-6 in omega.
    """
    a = float(a)
    taus = np.linspace(1e-4, tau_max, 4001)
    vals = capital_omega(taus, a)
    i = int(np.argmax(vals))
    lo = taus[max(i - 1, 0)]
    hi = taus[min(i + 1, taus.size - 1)]
    res = minimize_scalar(
        lambda t: -capital_omega(t, a), bounds=(lo, hi), method="bounded",
        options={"xatol": 1e-10},
    )
    return float(max(vals[i], -res.fun))


# ---------------------------------------------------------------------------
# Discrete zero eta0
# ---------------------------------------------------------------------------

def eta0_asymptotic(params: ModelParams) -> complex:
    """Closed-form small-omega1 estimate of the zero with Re > 0."""
    z0, a, w1 = params.z0, params.a, params.omega1
    val = 1j * (1.0 - 1.5j * w1 * a / z0) / (w1 * (2.0 - a / z0))
    r = complex(np.sqrt(complex(val)))
    if r.real < 0.0 or (r.real == 0.0 and r.imag < 0.0):
        r = -r
    return r


def _newton(params: ModelParams, z: complex, tol: float, max_iter: int) -> complex | None:
    """Damped Newton iteration for lambda(z) = 0 inside the first quadrant."""
    f = dispersion(z, params)
    for _ in range(max_iter):
        if abs(f) < tol:
            return z
        step = f / dispersion_prime(z, params)
        lam = 1.0
        for _ in range(10):
            cand = z - lam * step
            if cand.real > 0.0 and cand.imag > 0.0:
                fc = dispersion(cand, params)
                if abs(fc) < abs(f):
                    z, f = cand, fc
                    break
            lam *= 0.5
        else:
            return None
    return z if abs(f) < tol else None


def _winding_on_loop(params: ModelParams, pts: np.ndarray) -> int:
    """Winding number of lambda along a closed polyline (adaptive)."""
    def arc(z0, f0, z1, f1, depth):
        if abs(f0) < 1e-13 or abs(f1) < 1e-13:
            raise ConvergenceError("dispersion function vanishes on the contour")
        step = float(np.angle(f1 / f0))
        if abs(step) < _STEP_BOUND:
            return step
        if depth >= _MAX_DEPTH:
            raise ResolutionError("contour refinement limit reached")
        zm = 0.5 * (z0 + z1)
        fm = dispersion(zm, params)
        return arc(z0, f0, zm, fm, depth + 1) + arc(zm, fm, z1, f1, depth + 1)

    vals = dispersion(pts, params)
    total = 0.0
    for i in range(pts.size - 1):
        total += arc(pts[i], vals[i], pts[i + 1], vals[i + 1], 0)
    return int(round(total / TWO_PI))


def count_zeros_rectangle(
    params: ModelParams,
    re_lo: float,
    re_hi: float,
    im_lo: float,
    im_hi: float,
    samples_per_edge: int = 64,
) -> int:
    """Argument-principle zero count of lambda inside an upper-half-plane box."""
    if not (0.0 < im_lo < im_hi) or not (re_lo < re_hi):
        raise DomainError("rectangle must lie strictly inside the upper half-plane")
    corners = [
        complex(re_lo, im_lo), complex(re_hi, im_lo),
        complex(re_hi, im_hi), complex(re_lo, im_hi), complex(re_lo, im_lo),
    ]
    pts = []
    for c0, c1 in zip(corners[:-1], corners[1:]):
        seg = c0 + (c1 - c0) * np.linspace(0.0, 1.0, samples_per_edge, endpoint=False)
        pts.append(seg)
    pts.append(np.array([corners[-1]]))
    return _winding_on_loop(params, np.concatenate(pts))


def _eta0_by_winding(params: ModelParams) -> complex:
    """Locate eta0 by rectangle subdivision on the argument principle."""
    seed = eta0_asymptotic(params)
    size = max(4.0, 3.0 * abs(seed))
    box = [1e-4, size, 1e-6, size]
    for _ in range(6):
        n = count_zeros_rectangle(params, *box)
        if n == 1:
            break
        if n == 0:
            box[1] *= 2.0
            box[3] *= 2.0
        else:
            raise ConvergenceError(f"unexpected zero count {n} in the search box")
    else:
        raise ConvergenceError("no zero of the dispersion function found in the right half-plane")
    while (box[1] - box[0]) + (box[3] - box[2]) > 1e-6:
        if box[1] - box[0] >= box[3] - box[2]:
            mid = 0.5 * (box[0] + box[1])
            half = [box[0], mid, box[2], box[3]]
            other = [mid, box[1], box[2], box[3]]
        else:
            mid = 0.5 * (box[2] + box[3])
            half = [box[0], box[1], box[2], mid]
            other = [box[0], box[1], mid, box[3]]
        box = half if count_zeros_rectangle(params, *half) == 1 else other
    return complex(0.5 * (box[0] + box[1]), 0.5 * (box[2] + box[3]))


def find_eta0(params: ModelParams, profile: ThetaProfile | None = None) -> complex:
    """Discrete zero eta0 (Re > 0, Im > 0) with |lambda(eta0)| < 1e-12.

    Newton from the asymptotic seed, falling back to argument-principle
    rectangle subdivision when Newton leaves the first quadrant or stalls.
    """
    spectrum = index_kappa(params, profile)
    if spectrum.kappa == 0:
        raise NoDiscreteSpectrumError(
            f"omega1={params.omega1:.6g} exceeds the critical frequency "
            f"{spectrum.omega1_star:.6g}; the discrete spectrum is empty"
        )
    z = _newton(params, eta0_asymptotic(params), tol=1e-13, max_iter=80)
    if z is None:
        center = _eta0_by_winding(params)
        z = _newton(params, center, tol=1e-13, max_iter=80)
        if z is None:
            z = center
    residual = abs(dispersion(z, params))
    if residual > 1e-12:
        raise ConvergenceError(
            f"discrete-zero residual {residual:.3e} exceeds 1e-12", residual=residual
        )
    return complex(z)


def analyze_spectrum(params: ModelParams) -> SpectrumResult:
    """Full spectrum classification: index, zero count, eta0 when present."""
    base = index_kappa(params)
    if base.kappa == 0:
        return base
    eta0 = find_eta0(params)
    return SpectrumResult(
        kappa=base.kappa,
        n_zeros=base.n_zeros,
        omega1_star=base.omega1_star,
        eta0=eta0,
        eta0_residual=abs(dispersion(eta0, params)),
        warnings=base.warnings,
    )

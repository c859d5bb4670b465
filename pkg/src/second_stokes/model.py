"""Problem parameters and the Prandtl-number map.

Lengths are in mean free paths, time in collision times, velocities in
thermal units.  The wall at x1 = 0 oscillates in its own plane with
dimensionless frequency omega1 and velocity amplitude u0; the collision model
parameter a in [-1, 0] sets the Prandtl number Pr = 2/(2 - a), with a = -1
giving the physical value 2/3 and a = 0 the single-relaxation-time (BGK)
limit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class ModelParams:
    """Validated, immutable parameter set.

    Attributes:
        omega1: wall oscillation frequency in collision-rate units, > 0.  The
            stationary limit omega1 = 0 is a degenerate problem and rejected.
        a: collision-model parameter, -1 <= a <= 0.
        u0: wall velocity amplitude in thermal units (enters linearly).
    """

    omega1: float
    a: float
    u0: float = 1.0

    def __post_init__(self):
        for name in ("omega1", "a", "u0"):
            v = getattr(self, name)
            if not (np.isscalar(v) and np.isfinite(v)):
                raise DomainError(f"{name} must be a finite real number")
            object.__setattr__(self, name, float(v))
        if self.omega1 <= 0.0:
            raise DomainError("omega1 must be positive (omega1 = 0 is rejected)")
        if not (-1.0 <= self.a <= 0.0):
            raise DomainError("a must lie in [-1, 0]")
        if self.u0 <= 0.0:
            raise DomainError("u0 must be positive")

    @property
    def z0(self) -> complex:
        """Complex absorption rate z0 = 1 - i omega1."""
        return complex(1.0, -self.omega1)

    @property
    def b(self) -> complex:
        """Coupling b = i omega1 a / z0 (0 exactly in the BGK limit a = 0)."""
        if self.a == 0.0:
            return 0j
        return 1j * self.omega1 * self.a / self.z0

    @property
    def b1(self) -> float:
        """Real part of b: b1 = -a omega1^2 / (1 + omega1^2)."""
        return -self.a * self.omega1**2 / (1.0 + self.omega1**2)

    @property
    def b2(self) -> float:
        """Imaginary part of b: b2 = a omega1 / (1 + omega1^2)."""
        return self.a * self.omega1 / (1.0 + self.omega1**2)

    @property
    def prandtl(self) -> float:
        return prandtl_from_a(self.a)

    @classmethod
    def from_prandtl(cls, omega1: float, prandtl: float, u0: float = 1.0) -> "ModelParams":
        return cls(omega1=omega1, a=a_from_prandtl(prandtl), u0=u0)

    def with_u0(self, u0: float) -> "ModelParams":
        return ModelParams(omega1=self.omega1, a=self.a, u0=u0)


def prandtl_from_a(a: float) -> float:
    """Pr = 2/(2 - a) for a in [-1, 0]."""
    if not np.isfinite(a) or not (-1.0 <= a <= 0.0):
        raise DomainError("a must lie in [-1, 0]")
    return 2.0 / (2.0 - a)


def a_from_prandtl(prandtl: float) -> float:
    """Inverse map a = -2 (1 - Pr)/Pr for Pr in [2/3, 1]."""
    if not np.isfinite(prandtl) or not (2.0 / 3.0 <= prandtl <= 1.0):
        raise DomainError("prandtl must lie in [2/3, 1]")
    # keep round-off at the Pr = 2/3 endpoint inside the admissible box
    return float(np.clip(-2.0 * (1.0 - prandtl) / prandtl, -1.0, 0.0))

"""Second Stokes problem for a rarefied gas over an oscillating wall.

Analytic solution of the linearized kinetic half-space problem with the
ellipsoidal-statistical collision model (Prandtl number 2/(2 - a)), plus an
independent discrete-ordinates solver used for validation.
"""

__version__ = "0.1.0"

from .errors import (
    ConvergenceError,
    DegenerateDenominatorError,
    DomainError,
    NearCriticalError,
    NoDiscreteSpectrumError,
    RegimeError,
    ResolutionError,
    SecondStokesError,
    SingularityError,
    UsageError,
)
from .expansion import ExpansionCoefficients, solve_expansion
from .fields import HalfSpaceSolution, SolutionField, hydrodynamic_reference, phi_moment, solve
from .model import ModelParams, a_from_prandtl, prandtl_from_a
from .oracle import LatticeConfig, OracleSolution, compare_with_analytic, solve_halfspace
from .quadrature import QuadratureGrid, build_grid, principal_value
from .riemann import RiemannFactorization, build_factorization
from .spectral import (
    SpectrumResult,
    analyze_spectrum,
    capital_omega,
    coefficient_G,
    critical_frequency,
    dispersion,
    eta0_asymptotic,
    find_eta0,
    index_kappa,
    theta_profile,
)

__all__ = [
    "ConvergenceError",
    "DegenerateDenominatorError",
    "DomainError",
    "ExpansionCoefficients",
    "HalfSpaceSolution",
    "LatticeConfig",
    "ModelParams",
    "NearCriticalError",
    "NoDiscreteSpectrumError",
    "OracleSolution",
    "QuadratureGrid",
    "RegimeError",
    "ResolutionError",
    "RiemannFactorization",
    "SecondStokesError",
    "SingularityError",
    "SolutionField",
    "SpectrumResult",
    "UsageError",
    "a_from_prandtl",
    "analyze_spectrum",
    "build_factorization",
    "build_grid",
    "capital_omega",
    "coefficient_G",
    "compare_with_analytic",
    "critical_frequency",
    "dispersion",
    "eta0_asymptotic",
    "find_eta0",
    "hydrodynamic_reference",
    "index_kappa",
    "phi_moment",
    "prandtl_from_a",
    "principal_value",
    "solve",
    "solve_expansion",
    "solve_halfspace",
    "theta_profile",
]

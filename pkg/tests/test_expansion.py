"""Expansion coefficients and continuous-spectrum densities."""

import numpy as np
import pytest

from second_stokes.expansion import (
    compute_J0,
    compute_J1,
    continuous_density_k0,
    continuous_density_k1,
    density_at,
    discrete_coefficient,
    solve_expansion,
)
from second_stokes.errors import RegimeError
from second_stokes.model import ModelParams
from second_stokes.plasma import SQRT_PI
from second_stokes.riemann import build_factorization
from second_stokes.spectral import find_eta0

P_K0 = ModelParams(1.0, -1.0)
P_K1 = ModelParams(0.3, -1.0)
P_BGK_K0 = ModelParams(1.2, 0.0)
P_BGK_K1 = ModelParams(0.5, 0.0)


@pytest.fixture(scope="module")
def fact_k0():
    return build_factorization(P_K0)


@pytest.fixture(scope="module")
def fact_k1():
    return build_factorization(P_K1)


class TestMomentIntegrals:
    def test_regime_guards(self, fact_k0, fact_k1):
        with pytest.raises(RegimeError):
            compute_J0(fact_k1)
        with pytest.raises(RegimeError):
            compute_J1(fact_k0, 1.0 + 1.0j)
        with pytest.raises(RegimeError):
            continuous_density_k0(1.0, fact_k1, 0.0 + 0.0j)
        with pytest.raises(RegimeError):
            discrete_coefficient(fact_k0, 1.0 + 1.0j, 0.0 + 0.0j)

    def test_j0_stable_under_refinement(self, fact_k0):
        fine = build_factorization(P_K0, grid=fact_k0.grid.refined(2))
        assert abs(compute_J0(fact_k0) - compute_J0(fine)) < 1e-8

    def test_j1_stable_under_refinement(self, fact_k1):
        e0 = find_eta0(P_K1)
        fine = build_factorization(P_K1, grid=fact_k1.grid.refined(2))
        assert abs(compute_J1(fact_k1, e0) - compute_J1(fine, e0)) < 1e-8

    def test_j1_triangle_bound(self, fact_k1):
        e0 = find_eta0(P_K1)
        t = fact_k1.grid.nodes
        b = fact_k1.params.b
        mags = np.abs(
            t * fact_k1.sin_zeta(t) * fact_k1.inv_X_principal(t)
            / ((1.0 - b * t * t) * (t - e0))
        )
        assert abs(compute_J1(fact_k1, e0)) <= fact_k1.grid.integrate(mags) / np.pi

    def test_j1_near_axis_warning(self, fact_k1):
        with pytest.warns(UserWarning, match="nearly singular"):
            compute_J1(fact_k1, 1.0 + 1e-8j)

    def test_integrand_vanishes_at_endpoint(self, fact_k0):
        t = fact_k0.grid.tau_max * (1.0 - 1e-10)
        b = fact_k0.params.b
        val = t * fact_k0.sin_zeta(t) * fact_k0.inv_X_principal(np.array([t]))[0] / (1.0 - b * t * t)
        assert abs(val) < 1e-12


class TestDensities:
    def test_bgk_reduction_k0(self):
        # at a = 0 the generic density must collapse to
        # 2 u0 sin zeta / (sqrt(pi) eta X)
        fact = build_factorization(P_BGK_K0)
        coeffs = solve_expansion(fact)
        eta = np.array([0.2, 0.8, 2.0])
        direct = (
            2.0 * fact.params.u0 * fact.sin_zeta(eta) * fact.inv_X_principal(eta)
            / (SQRT_PI * eta)
        )
        assert np.max(np.abs(density_at(fact, coeffs, eta) - direct)) < 1e-14

    def test_bgk_reduction_k1_coefficients(self):
        fact = build_factorization(P_BGK_K1)
        e0 = find_eta0(P_BGK_K1)
        J1 = compute_J1(fact, e0)
        a0, C1 = discrete_coefficient(fact, e0, J1)
        x0 = fact.X(e0)
        assert abs(a0 - 2.0 * fact.params.u0 * SQRT_PI / (e0 * x0)) < 1e-12 * abs(a0)
        assert abs(C1 + 2.0 * fact.params.u0) < 1e-12

    def test_pole_removal_identity(self, fact_k1):
        coeffs = solve_expansion(fact_k1)
        expected = (
            -coeffs.a0 * coeffs.eta0
            * (1.0 - fact_k1.params.b * coeffs.eta0**2)
            * fact_k1.X(coeffs.eta0) / SQRT_PI
        )
        assert abs(coeffs.C1 - expected) < 1e-14 * abs(expected)

    def test_linearity_in_wall_velocity(self, fact_k1):
        coeffs = solve_expansion(fact_k1)
        fact2 = build_factorization(P_K1.with_u0(2.0))
        coeffs2 = solve_expansion(fact2)
        assert abs(coeffs2.a0 - 2.0 * coeffs.a0) < 1e-12 * abs(coeffs.a0)
        eta = np.array([0.3, 1.1])
        d1 = density_at(fact_k1, coeffs, eta)
        d2 = density_at(fact2, coeffs2, eta)
        assert np.max(np.abs(d2 - 2.0 * d1)) < 1e-12 * np.max(np.abs(d1))

    def test_density_finite_on_support(self, fact_k0, fact_k1):
        eta = np.array([1e-3, 0.01, 0.1, 1.0, 5.0, 6.9])
        for fact in (fact_k0, fact_k1):
            coeffs = solve_expansion(fact)
            vals = density_at(fact, coeffs, eta)
            assert np.all(np.isfinite(vals))
            assert np.max(np.abs(vals)) < 10.0

    def test_density_by_second_moment_substitution(self, fact_k0):
        # independent route: recompute A from the density by quadrature and
        # substitute it into the (2 u0 - A) form of the density
        coeffs = solve_expansion(fact_k0)
        p = fact_k0.params
        t = fact_k0.grid.nodes
        dens = density_at(fact_k0, coeffs, t)
        A = p.b * fact_k0.grid.integrate(t * t * dens) / SQRT_PI
        eta = 0.5
        via_A = (
            (2.0 * p.u0 - A) * fact_k0.sin_zeta(eta)
            * fact_k0.inv_X_principal(np.array([eta]))[0]
            / (SQRT_PI * eta * (1.0 - p.b * eta * eta))
        )
        assert abs(density_at(fact_k0, coeffs, eta) - via_A) < 1e-10

    def test_k1_density_stable_under_refinement(self, fact_k1):
        coeffs = solve_expansion(fact_k1)
        fine = build_factorization(P_K1, grid=fact_k1.grid.refined(2))
        coeffs_f = solve_expansion(fine, eta0=coeffs.eta0)
        assert abs(
            continuous_density_k1(1.0, fact_k1, coeffs.eta0, coeffs.C1)
            - continuous_density_k1(1.0, fine, coeffs_f.eta0, coeffs_f.C1)
        ) < 1e-8


class TestSecondMomentConstant:
    @pytest.mark.parametrize("params", [P_K0, P_K1], ids=["k0", "k1"])
    def test_self_consistency(self, params):
        fact = build_factorization(params)
        coeffs = solve_expansion(fact)
        t = fact.grid.nodes
        recomputed = (
            fact.params.b * fact.grid.integrate(t * t * density_at(fact, coeffs, t)) / SQRT_PI
        )
        assert abs(coeffs.A - recomputed) < 1e-6 * max(abs(coeffs.A), 1e-12)

    def test_hydrodynamic_discrete_coefficient(self):
        # a0 -> 2 u0 sqrt(pi) as the zero recedes to infinity; the approach
        # is O(sqrt(omega1)) (measured 0.26 / 0.125 / 0.061 at 0.04 / 0.01 /
        # 0.0025), so halving sqrt(omega1) halves the deviation
        devs = []
        for omega1 in (0.04, 0.01, 0.0025):
            params = ModelParams(omega1, -1.0)
            coeffs = solve_expansion(build_factorization(params))
            devs.append(abs(coeffs.a0 / (2.0 * params.u0 * SQRT_PI) - 1.0))
        assert devs[0] > devs[1] > devs[2]
        assert devs[2] < 0.07
        assert devs[1] / devs[0] == pytest.approx(0.5, abs=0.1)

"""Plasma dispersion integral and its real-axis building blocks."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from second_stokes.errors import DomainError
from second_stokes.plasma import l_s_pair, lambda0, lambda0_prime

SQRT_PI = np.sqrt(np.pi)


def lambda0_quadrature(z: complex) -> complex:
    """Independent evaluation by direct adaptive quadrature of the defining integral."""
    def integrand(t, part):
        val = np.exp(-t * t) * t / (t - z)
        return val.real if part == "re" else val.imag

    re, _ = quad(integrand, -np.inf, np.inf, args=("re",), limit=400, epsabs=1e-13)
    im, _ = quad(integrand, -np.inf, np.inf, args=("im",), limit=400, epsabs=1e-13)
    return (re + 1j * im) / SQRT_PI


class TestLSPair:
    def test_origin(self):
        assert l_s_pair(0.0) == (1.0, 0.0)

    def test_s_closed_form(self):
        _, s = l_s_pair(1.0)
        assert abs(s - SQRT_PI / np.e) < 1e-15

    def test_l_against_independent_quadrature(self):
        # l(tau) = 1 - 2 tau^2 int_0^1 exp(-tau^2 (1 - x^2)) dx
        tau = 1.0
        inner, _ = quad(lambda x: np.exp(-tau * tau * (1.0 - x * x)), 0.0, 1.0, epsabs=1e-14)
        l, _ = l_s_pair(tau)
        assert abs(l - (1.0 - 2.0 * tau * tau * inner)) < 1e-12

    def test_rejects_negative(self):
        with pytest.raises(DomainError):
            l_s_pair(-0.1)


class TestLambda0:
    def test_principal_value_at_origin(self):
        assert lambda0(0.0, branch="principal") == 1.0

    def test_jump_at_unity(self):
        jump = lambda0(1.0, branch="plus") - lambda0(1.0, branch="minus")
        assert abs(jump - 2j * SQRT_PI / np.e) < 1e-14

    def test_jump_identity_on_interval(self):
        mu = np.linspace(0.1, 4.0, 79)
        jump = lambda0(mu, branch="plus") - lambda0(mu, branch="minus")
        expected = 2j * SQRT_PI * mu * np.exp(-mu * mu)
        assert np.max(np.abs(jump - expected)) < 1e-10

    def test_imaginary_axis_asymptotics(self):
        z = 50j
        assert abs(z * z * lambda0(z) + 0.5) < 1e-3

    def test_against_quadrature_oracle(self):
        z = 0.5 + 0.5j
        assert abs(lambda0(z) - lambda0_quadrature(z)) < 1e-10

    def test_lower_half_plane_against_quadrature(self):
        z = 1.2 - 0.7j
        assert abs(lambda0(z) - lambda0_quadrature(z)) < 1e-10

    @settings(max_examples=40, deadline=None)
    @given(
        x=st.floats(-3.0, 3.0),
        y=st.floats(0.05, 3.0),
        lower=st.booleans(),
    )
    def test_conjugate_symmetry(self, x, y, lower):
        z = complex(x, -y if lower else y)
        assert lambda0(np.conj(z)) == pytest.approx(np.conj(lambda0(z)), abs=1e-15)

    def test_real_requires_branch(self):
        with pytest.raises(DomainError):
            lambda0(1.0 + 0j)

    def test_rejects_nonfinite(self):
        with pytest.raises(DomainError):
            lambda0(np.inf + 1j)

    def test_unknown_branch(self):
        with pytest.raises(DomainError):
            lambda0(1.0, branch="upward")


class TestLambda0Prime:
    @pytest.mark.parametrize("z", [0.8 + 0.6j, -1.5 + 2.0j, 0.2 - 1.1j])
    def test_matches_finite_differences(self, z):
        h = 1e-6
        fd = (lambda0(z + h) - lambda0(z - h)) / (2.0 * h)
        assert abs(lambda0_prime(z) - fd) < 1e-8

    def test_rejects_real(self):
        with pytest.raises(DomainError):
            lambda0_prime(2.0 + 0j)

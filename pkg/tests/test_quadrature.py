"""Grid construction and principal-value integration."""

import numpy as np
import pytest

from second_stokes.errors import DomainError
from second_stokes.plasma import l_s_pair
from second_stokes.quadrature import build_grid, principal_value

SQRT_PI = np.sqrt(np.pi)


@pytest.fixture(scope="module")
def grid():
    return build_grid()


class TestGrid:
    def test_nodes_inside_and_increasing(self, grid):
        assert grid.nodes[0] > 0.0
        assert grid.nodes[-1] < grid.tau_max
        assert np.all(np.diff(grid.nodes) > 0.0)

    def test_weights_positive_and_sum_to_interval(self, grid):
        assert np.all(grid.weights > 0.0)
        assert abs(grid.weights.sum() - grid.tau_max) < 1e-12 * grid.tau_max

    def test_gaussian_integral(self, grid):
        val = grid.integrate_fn(lambda t: np.exp(-t * t))
        assert abs(val - 0.5 * SQRT_PI) < 1e-12

    def test_refined_grid_agrees(self, grid):
        fine = grid.refined(2)
        a = grid.integrate_fn(lambda t: np.exp(-t * t) * np.cos(t))
        b = fine.integrate_fn(lambda t: np.exp(-t * t) * np.cos(t))
        assert abs(a - b) < 1e-13

    def test_with_pole_keeps_interval(self, grid):
        split = grid.with_pole(1.234)
        assert abs(split.weights.sum() - grid.tau_max) < 1e-12 * grid.tau_max
        assert 1.234 in split.breakpoints

    def test_with_pole_rejects_exterior(self, grid):
        with pytest.raises(DomainError):
            grid.with_pole(-0.5)
        with pytest.raises(DomainError):
            grid.with_pole(grid.tau_max + 1.0)

    def test_bad_breakpoints_rejected(self):
        with pytest.raises(DomainError):
            build_grid(breakpoints=(0.0, 3.0, 2.0, 7.0))
        with pytest.raises(DomainError):
            build_grid(tau_max=-1.0)


class TestPrincipalValue:
    def test_constant_integrand_exact_log(self, grid):
        c = 1.7
        val = principal_value(lambda t: np.ones_like(t), c, grid)
        assert abs(val - np.log((grid.tau_max - c) / c)) < 1e-13

    def test_removable_singularity(self, grid):
        c = 0.9
        val = principal_value(lambda t: t - c, c, grid)
        assert abs(val - grid.tau_max) < 1e-12

    def test_exact_on_affine(self, grid):
        # PV int (alpha + beta t)/(t - c) = (alpha + beta c) log((T-c)/c) + beta T
        alpha, beta, c = 0.3 - 0.2j, 1.1 + 0.7j, 2.4
        val = principal_value(lambda t: alpha + beta * t, c, grid)
        exact = (alpha + beta * c) * np.log((grid.tau_max - c) / c) + beta * grid.tau_max
        assert abs(val - exact) < 1e-12

    def test_linearity(self, grid):
        c = 1.1
        f = lambda t: np.exp(-t * t)
        g = lambda t: np.cos(t)
        lhs = principal_value(lambda t: 2.0 * f(t) - 3.5j * g(t), c, grid)
        rhs = 2.0 * principal_value(f, c, grid) - 3.5j * principal_value(g, c, grid)
        assert abs(lhs - rhs) < 1e-12

    def test_gaussian_kernel_recovers_l(self, grid):
        # PV over (0, T) plus the mirrored regular piece reconstructs the
        # full-line Hilbert transform of t exp(-t^2), which is sqrt(pi) l(mu).
        mu = 1.0
        pv = principal_value(lambda t: np.exp(-t * t) * t, mu, grid)
        mirrored = grid.integrate_fn(lambda t: np.exp(-t * t) * t / (t + mu))
        l, _ = l_s_pair(mu)
        assert abs((pv + mirrored) - SQRT_PI * l) < 1e-12

    def test_pole_outside_support(self, grid):
        with pytest.raises(DomainError):
            principal_value(lambda t: np.ones_like(t), grid.tau_max + 0.5, grid)
        with pytest.raises(DomainError):
            principal_value(lambda t: np.ones_like(t), 0.0, grid)

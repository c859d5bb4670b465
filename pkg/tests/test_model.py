"""Parameter validation and the Prandtl map."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from second_stokes.errors import DomainError
from second_stokes.model import ModelParams, a_from_prandtl, prandtl_from_a


class TestModelParams:
    def test_z0_exact(self):
        p = ModelParams(0.37, -0.4)
        assert p.z0 == complex(1.0, -0.37)

    def test_b_times_z0(self):
        p = ModelParams(0.8, -0.9)
        assert abs(p.b * p.z0 - 1j * 0.8 * (-0.9)) < 1e-15

    def test_b_split_into_real_imag(self):
        p = ModelParams(0.65, -0.25)
        assert abs(complex(p.b1, p.b2) - p.b) < 1e-15

    def test_bgk_coupling_is_exactly_zero(self):
        assert ModelParams(0.5, 0.0).b == 0j

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"omega1": 0.0, "a": -1.0},
            {"omega1": -0.1, "a": -1.0},
            {"omega1": 0.5, "a": 0.1},
            {"omega1": 0.5, "a": -1.2},
            {"omega1": 0.5, "a": -1.0, "u0": 0.0},
            {"omega1": np.nan, "a": -1.0},
        ],
    )
    def test_rejects_bad_input(self, kwargs):
        with pytest.raises(DomainError):
            ModelParams(**kwargs)

    def test_hashable_and_frozen(self):
        p = ModelParams(0.5, -1.0)
        assert hash(p) == hash(ModelParams(0.5, -1.0))
        with pytest.raises(Exception):
            p.omega1 = 0.6

    def test_with_u0(self):
        p = ModelParams(0.5, -1.0).with_u0(3.0)
        assert p.u0 == 3.0 and p.omega1 == 0.5


class TestPrandtlMap:
    def test_reference_points(self):
        assert prandtl_from_a(-1.0) == pytest.approx(2.0 / 3.0, abs=1e-15)
        assert prandtl_from_a(0.0) == 1.0
        assert a_from_prandtl(0.8) == pytest.approx(-0.5, abs=1e-15)

    @settings(max_examples=50, deadline=None)
    @given(a=st.floats(-1.0, 0.0))
    def test_round_trip(self, a):
        assert a_from_prandtl(prandtl_from_a(a)) == pytest.approx(a, abs=1e-14)

    def test_out_of_range(self):
        with pytest.raises(DomainError):
            prandtl_from_a(0.2)
        with pytest.raises(DomainError):
            a_from_prandtl(0.5)

    def test_from_prandtl_constructor(self):
        p = ModelParams.from_prandtl(0.4, 2.0 / 3.0)
        assert p.a == pytest.approx(-1.0, abs=1e-14)

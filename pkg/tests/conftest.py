"""Shared fixtures: expensive solutions are built once per session."""

from __future__ import annotations

import pytest

from second_stokes.fields import HalfSpaceSolution
from second_stokes.model import ModelParams
from second_stokes.oracle import LatticeConfig, solve_halfspace

#: The four parameter sets exercised by the cross-validation suite:
#: both index regimes for the physical Prandtl number and in the BGK limit.
PAIR_K1 = ModelParams(0.3, -1.0)
PAIR_K0 = ModelParams(1.0, -1.0)
PAIR_BGK_K1 = ModelParams(0.5, 0.0)
PAIR_BGK_K0 = ModelParams(1.2, 0.0)
ALL_PAIRS = (PAIR_K1, PAIR_K0, PAIR_BGK_K1, PAIR_BGK_K0)


@pytest.fixture(scope="session")
def analytic():
    """Factory returning a cached HalfSpaceSolution per parameter set."""
    cache: dict[ModelParams, HalfSpaceSolution] = {}

    def build(params: ModelParams) -> HalfSpaceSolution:
        if params not in cache:
            cache[params] = HalfSpaceSolution(params)
        return cache[params]

    return build


@pytest.fixture(scope="session")
def oracle():
    """Factory returning a cached default-lattice oracle run per parameter set."""
    cache = {}

    def build(params: ModelParams, config: LatticeConfig | None = None):
        key = (params, config)
        if key not in cache:
            cache[key] = solve_halfspace(params, config)
        return cache[key]

    return build

import random

import pytest

from src.algebra import PolyRing, PrimeField, Polynomial
from src.algebra.monomial import monomials_of_degree
from src.catalog import embedded_point, plane, plane_and_line, quadric, space, two_planes
from src.config import PipelineConfig

PRIME = 32003


@pytest.fixture
def P2() -> PolyRing:
    return PolyRing(PrimeField(PRIME), ("x", "y"))


@pytest.fixture
def P3() -> PolyRing:
    return PolyRing(PrimeField(PRIME), ("x", "y", "z"))


@pytest.fixture
def plane_ring():
    return plane()


@pytest.fixture
def space_ring():
    return space()


@pytest.fixture
def quadric_ring():
    return quadric()


@pytest.fixture
def embedded_point_ring():
    return embedded_point()


@pytest.fixture
def two_planes_ring():
    return two_planes()


@pytest.fixture
def plane_and_line_ring():
    return plane_and_line()


@pytest.fixture
def small_config() -> PipelineConfig:
    return PipelineConfig(trials=4, reduction_trials=6, seed=0, n_max=6, horizon=12)


def random_form(ring: PolyRing, degree: int, rng: random.Random) -> Polynomial:
    """A random homogeneous polynomial of the given degree."""
    result = ring.zero()
    for exps in monomials_of_degree(ring.nvars, degree):
        result = result + ring.monomial(exps, rng.randrange(ring.p))
    return result

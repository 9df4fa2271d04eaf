import pytest

from friezes import Dissection


@pytest.fixture(scope="session")
def quad10() -> Dissection:
    """The running example: a 4-angulation of the 10-gon into four quads."""
    return Dissection(10, [(1, 4), (4, 9), (5, 8)])


@pytest.fixture(scope="session")
def hex18() -> Dissection:
    """A 6-angulation of the 18-gon into four hexagons."""
    return Dissection(18, [(1, 6), (6, 15), (8, 13)])

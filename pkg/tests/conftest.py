import pytest

from recolor.generators import gen_interval_colorings, gen_interval_family
from recolor.graph import Graph


@pytest.fixture(scope="session")
def interval8():
    return gen_interval_family(8)


@pytest.fixture(scope="session")
def interval8_pair():
    """The two p=8 family colorings; they differ only on vertices 4 and 5."""
    return gen_interval_colorings(8, frozenset()), gen_interval_colorings(
        8, frozenset({1})
    )


@pytest.fixture
def triangle():
    return Graph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def path4():
    return Graph(4, [(0, 1), (1, 2), (2, 3)])

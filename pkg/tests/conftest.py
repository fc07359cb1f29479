import pytest

from pottsmotive.multigraph import MultiGraph, banana, disjoint_union, polygon


@pytest.fixture
def loop():
    return polygon(1)


@pytest.fixture
def single_edge():
    return banana(1)


@pytest.fixture
def two_banana():
    return banana(2)


@pytest.fixture
def triangle():
    return polygon(3)


@pytest.fixture
def square():
    return polygon(4)


@pytest.fixture
def path2():
    return MultiGraph(3, (("1", 0, 1), ("2", 1, 2)))


@pytest.fixture
def two_edges():
    return disjoint_union(banana(1), banana(1))

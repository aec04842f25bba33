import pytest

from srg2048 import build_code, build_graph, build_reps
from srg2048.coset_graph import Graph


@pytest.fixture(scope="session")
def code():
    return build_code()


@pytest.fixture(scope="session")
def reps():
    return build_reps()


@pytest.fixture(scope="session")
def graph(code, reps):
    return build_graph(code, reps)


@pytest.fixture(scope="session")
def cycle5():
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])

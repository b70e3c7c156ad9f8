import pytest

from graphalg import OMEGA, Family, Graph, truncation


@pytest.fixture
def single_loop() -> Graph:
    g = Graph()
    g.add_vertex("v")
    g.add_edge("v", "v")
    return g


@pytest.fixture
def two_isolated() -> Graph:
    g = Graph()
    g.add_vertex("a")
    g.add_vertex("b")
    return g


@pytest.fixture
def path_graph() -> Graph:
    g = Graph()
    g.add_vertex("a")
    g.add_vertex("b")
    g.add_edge("a", "b")
    return g


@pytest.fixture
def breaking_fixture() -> Graph:
    # v emits infinitely many edges to the sink w plus a single loop,
    # so for H = {w} the loop is the only escape and v is breaking.
    g = Graph()
    g.add_vertex("v")
    g.add_vertex("w")
    g.add_edge("v", "w", OMEGA)
    g.add_edge("v", "v")
    return g


@pytest.fixture
def chain_with_branch() -> Graph:
    # a feeds both a terminal sink and a two-cycle with an exit.
    g = Graph()
    for label in ("a", "b", "c", "d"):
        g.add_vertex(label)
    g.add_edge("a", "b")
    g.add_edge("b", "c")
    g.add_edge("c", "b")
    g.add_edge("c", "d")
    return g


@pytest.fixture
def ea2() -> Graph:
    return truncation(Family.EA, 2)


@pytest.fixture
def el2() -> Graph:
    return truncation(Family.EL, 2)


@pytest.fixture
def ek1() -> Graph:
    return truncation(Family.EK, 1)


@pytest.fixture
def ekappa3() -> Graph:
    return truncation(Family.EKAPPA, 3)

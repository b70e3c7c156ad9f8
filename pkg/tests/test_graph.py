"""Construction, multiplicity arithmetic, and isomorphism invariance."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphalg import (
    OMEGA,
    CapExceededError,
    DuplicateLabelError,
    Graph,
    GraphError,
    UnknownVertexError,
    VertexClass,
    canonical_form,
    is_isomorphic,
    is_omega,
)
from graphalg.graph import add_multiplicities, check_multiplicity

from .strategies import graphs


def permuted_copy(g: Graph, order: list[int]) -> Graph:
    h = Graph()
    for i in order:
        h.add_vertex(g.vertex(i).label)
    for grp in g.edge_groups():
        h.add_edge(grp.source.label, grp.target.label, grp.multiplicity)
    return h


def test_vertex_identity_round_trips():
    g = Graph()
    a = g.add_vertex("a")
    b = g.add_vertex("b")
    assert g.vertex_count == 2
    assert a.index == 0 and b.index == 1
    assert g.vertex(1) is b
    assert g.vertex_by_label("a") is a
    assert g.index_of(a) == 0
    assert g.index_of("b") == 1
    assert g.index_of(1) == 1


def test_unknown_vertices_rejected():
    g = Graph()
    g.add_vertex("a")
    with pytest.raises(UnknownVertexError):
        g.vertex_by_label("zz")
    with pytest.raises(UnknownVertexError):
        g.vertex(5)
    with pytest.raises(UnknownVertexError):
        g.index_of("zz")
    with pytest.raises(UnknownVertexError):
        g.index_of(1)
    with pytest.raises(UnknownVertexError):
        g.index_of(True)
    # a handle carrying the same label and index denotes the same vertex,
    # so it resolves; a mismatched foreign handle does not
    other = Graph()
    matching = other.add_vertex("a")
    assert g.index_of(matching) == 0
    other.add_vertex("b")
    with pytest.raises(UnknownVertexError):
        g.index_of(other.vertex_by_label("b"))


def test_label_validation():
    g = Graph()
    g.add_vertex("ok")
    with pytest.raises(DuplicateLabelError):
        g.add_vertex("ok")
    with pytest.raises(GraphError):
        g.add_vertex("")
    with pytest.raises(GraphError):
        g.add_vertex("two words")
    with pytest.raises(GraphError):
        g.add_vertex("tab\tin")


def test_multiplicity_validation():
    assert check_multiplicity(1) == 1
    assert is_omega(check_multiplicity(OMEGA))
    for bad in (0, -3, True, False, 1.5, "2"):
        with pytest.raises(GraphError):
            check_multiplicity(bad)


def test_multiplicity_addition():
    assert add_multiplicities(1, 1) == 2
    assert is_omega(add_multiplicities(1, OMEGA))
    assert is_omega(add_multiplicities(OMEGA, 4))
    assert is_omega(add_multiplicities(OMEGA, OMEGA))


def test_parallel_edges_merge():
    g = Graph()
    g.add_vertex("a")
    g.add_vertex("b")
    g.add_edge("a", "b")
    g.add_edge("a", "b")
    assert g.multiplicity(0, 1) == 2
    g.add_edge("a", "b", OMEGA)
    assert is_omega(g.multiplicity(0, 1))
    g.add_edge("a", "b", 7)
    assert is_omega(g.multiplicity(0, 1))
    assert g.multiplicity(1, 0) is None


@given(
    st.lists(st.sampled_from([1, 2, 3, OMEGA]), min_size=1, max_size=6),
    st.randoms(use_true_random=False),
)
def test_merge_order_irrelevant(mults, rng):
    shuffled = list(mults)
    rng.shuffle(shuffled)
    first, second = Graph(), Graph()
    for g in (first, second):
        g.add_vertex("a")
        g.add_vertex("b")
    for m in mults:
        first.add_edge("a", "b", m)
    for m in shuffled:
        second.add_edge("a", "b", m)
    assert first == second


def test_vertex_classes():
    g = Graph()
    g.add_vertex("sink")
    g.add_vertex("reg")
    g.add_vertex("inf")
    g.add_edge("reg", "sink", 3)
    g.add_edge("inf", "sink", OMEGA)
    assert g.vertex_class("sink") is VertexClass.SINK
    assert g.vertex_class("reg") is VertexClass.REGULAR
    assert g.vertex_class("inf") is VertexClass.INFINITE_EMITTER
    assert g.total_out_multiplicity("reg") == 3
    assert is_omega(g.total_out_multiplicity("inf"))
    assert g.total_out_multiplicity("sink") == 0


def test_edge_groups_sorted():
    g = Graph()
    for label in ("a", "b", "c"):
        g.add_vertex(label)
    g.add_edge("c", "a")
    g.add_edge("a", "c")
    g.add_edge("a", "b")
    pairs = [(grp.source.index, grp.target.index) for grp in g.edge_groups()]
    assert pairs == [(0, 1), (0, 2), (2, 0)]


def test_structural_equality():
    first, second = Graph(), Graph()
    for g in (first, second):
        g.add_vertex("a")
        g.add_vertex("b")
        g.add_edge("a", "b", 2)
    assert first == second
    second.add_edge("b", "a")
    assert first != second


def test_canonical_form_detects_isomorphism():
    loop, other = Graph(), Graph()
    for g in (loop, other):
        g.add_vertex("a")
        g.add_vertex("b")
    loop.add_edge("a", "a")
    other.add_edge("a", "b")
    assert canonical_form(loop) != canonical_form(other)
    assert not is_isomorphic(loop, other)


def test_canonical_form_cap():
    g = Graph()
    for i in range(9):
        g.add_vertex(f"v{i}")
    with pytest.raises(CapExceededError):
        canonical_form(g)
    with pytest.raises(CapExceededError):
        is_isomorphic(g, g)


@given(graphs(max_vertices=4), st.randoms(use_true_random=False))
def test_canonical_form_permutation_invariant(g, rng):
    order = list(range(g.vertex_count))
    rng.shuffle(order)
    h = permuted_copy(g, order)
    assert canonical_form(g) == canonical_form(h)
    assert is_isomorphic(g, h)


@given(graphs(max_vertices=4))
def test_isomorphism_is_reflexive(g):
    assert is_isomorphic(g, g)
    assert canonical_form(g) == canonical_form(g)

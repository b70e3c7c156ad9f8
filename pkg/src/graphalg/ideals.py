"""Hereditary and saturated vertex sets, the saturation closure, and the
admissible-pair lattice that indexes gauge-invariant ideal structure.

A set H is hereditary when every edge leaving H lands in H, and saturated
when every regular vertex emitting only into H already lies in H.  The
saturation closure adds such forced regular vertices stage by stage; the
full stage list is kept as an audit trail.

Pairs (H, S) extend the picture to infinite emitters: S picks breaking
vertices of H, infinite emitters outside H with a finite, nonzero number
of edges escaping H.  The pair order is (H, S) <= (H', S') iff H is
contained in H' and S is contained in H' together with S'.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graph import (
    CapExceededError,
    Graph,
    GraphError,
    GraphMismatchError,
    VertexClass,
    is_omega,
)
from .reachability import VertexSet, descendant_masks


class NotHereditaryError(GraphError):
    pass


class NotSaturatedError(GraphError):
    pass


DEFAULT_ENUMERATION_CAP = 20


def _check_owner(g: Graph, vs: VertexSet) -> None:
    if vs.graph is not g:
        raise GraphMismatchError("vertex set belongs to a different graph")


def _out_masks(g: Graph) -> list[int]:
    masks = []
    for i in range(g.vertex_count):
        m = 0
        for t in g.out_targets(i):
            m |= 1 << t
        masks.append(m)
    return masks


def _regular_flags(g: Graph) -> list[bool]:
    return [g.vertex_class(i) is VertexClass.REGULAR for i in range(g.vertex_count)]


def _hereditary_mask(out_masks: list[int], mask: int) -> bool:
    probe = mask
    while probe:
        low = probe & -probe
        if out_masks[low.bit_length() - 1] & ~mask:
            return False
        probe ^= low
    return True


def _saturated_mask(out_masks: list[int], regular: list[bool], mask: int) -> bool:
    for i, is_regular in enumerate(regular):
        if is_regular and not (mask >> i) & 1 and out_masks[i] & ~mask == 0:
            return False
    return True


def is_hereditary(g: Graph, vs: VertexSet) -> bool:
    _check_owner(g, vs)
    return _hereditary_mask(_out_masks(g), vs.mask)


def is_saturated(g: Graph, vs: VertexSet) -> bool:
    _check_owner(g, vs)
    return _saturated_mask(_out_masks(g), _regular_flags(g), vs.mask)


@dataclass(frozen=True)
class SaturationTrace:
    """Stages of the saturation closure, strictly growing to the fixpoint.
    A single stage means the input was already saturated."""

    stages: tuple[VertexSet, ...]


def saturate(g: Graph, hereditary: VertexSet) -> tuple[VertexSet, SaturationTrace]:
    """Smallest saturated set containing a hereditary set, with its trace.

    Each stage adds exactly the regular vertices all of whose edges point
    into the previous stage; the result stays hereditary.
    """
    _check_owner(g, hereditary)
    out_masks = _out_masks(g)
    if not _hereditary_mask(out_masks, hereditary.mask):
        raise NotHereditaryError(f"input set {hereditary!r} is not hereditary")
    regular = _regular_flags(g)
    stages = [hereditary]
    current = hereditary.mask
    while True:
        grown = current
        for i, is_regular in enumerate(regular):
            if is_regular and not (current >> i) & 1 and out_masks[i] & ~current == 0:
                grown |= 1 << i
        if grown == current:
            break
        current = grown
        stages.append(VertexSet(g, current))
    return VertexSet(g, current), SaturationTrace(tuple(stages))


def hereditary_closure(g: Graph, vs: VertexSet) -> VertexSet:
    """Smallest hereditary superset: the union of descendant cones."""
    _check_owner(g, vs)
    masks = descendant_masks(g)
    closure = 0
    for i in vs.indices():
        closure |= masks[i]
    return VertexSet(g, closure)


def enumerate_saturated_hereditary(
    g: Graph, max_vertices: int = DEFAULT_ENUMERATION_CAP
) -> list[VertexSet]:
    """Every saturated hereditary set, ordered by size then members.

    Scans all subsets, so the vertex count must stay under the cap
    (raise the cap explicitly to force larger graphs through).
    """
    n = g.vertex_count
    if n > max_vertices:
        raise CapExceededError(
            f"lattice enumeration over {n} vertices exceeds the cap of {max_vertices}"
        )
    out_masks = _out_masks(g)
    regular = _regular_flags(g)
    hits = [
        mask
        for mask in range(1 << n)
        if _hereditary_mask(out_masks, mask) and _saturated_mask(out_masks, regular, mask)
    ]
    hits.sort(key=lambda m: (m.bit_count(), _member_tuple(m)))
    return [VertexSet(g, m) for m in hits]


def _member_tuple(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def breaking_vertices(g: Graph, h: VertexSet) -> VertexSet:
    """Infinite emitters outside H with finitely many, but at least one,
    edges escaping H."""
    _require_saturated_hereditary(g, h)
    result = 0
    for i in range(g.vertex_count):
        if (h.mask >> i) & 1:
            continue
        if g.vertex_class(i) is not VertexClass.INFINITE_EMITTER:
            continue
        escaping = 0
        infinite_escape = False
        for t in g.out_targets(i):
            if (h.mask >> t) & 1:
                continue
            m = g.multiplicity(i, t)
            if is_omega(m):
                infinite_escape = True
                break
            escaping += m
        if not infinite_escape and escaping > 0:
            result |= 1 << i
    return VertexSet(g, result)


def _require_saturated_hereditary(g: Graph, h: VertexSet) -> None:
    _check_owner(g, h)
    out_masks = _out_masks(g)
    if not _hereditary_mask(out_masks, h.mask):
        raise NotHereditaryError(f"{h!r} is not hereditary")
    if not _saturated_mask(out_masks, _regular_flags(g), h.mask):
        raise NotSaturatedError(f"{h!r} is not saturated")


@dataclass(frozen=True)
class AdmissiblePair:
    """A saturated hereditary set H with a chosen set S of its breaking
    vertices."""

    h: VertexSet
    s: VertexSet

    def __repr__(self) -> str:
        return f"({self.h!r},{self.s!r})"


def admissible_pairs(
    g: Graph, max_vertices: int = DEFAULT_ENUMERATION_CAP
) -> list[AdmissiblePair]:
    """All pairs (H, S) with H saturated hereditary and S a subset of the
    breaking vertices of H, in lattice order of H then subset order of S."""
    pairs = []
    for h in enumerate_saturated_hereditary(g, max_vertices):
        candidates = breaking_vertices(g, h).indices()
        for size in range(len(candidates) + 1):
            for combo in itertools.combinations(candidates, size):
                s_mask = 0
                for i in combo:
                    s_mask |= 1 << i
                pairs.append(AdmissiblePair(h, VertexSet(g, s_mask)))
    return pairs


def pair_leq(p: AdmissiblePair, q: AdmissiblePair) -> bool:
    """Pair order: H inside H', and S inside H' union S'."""
    if p.h.graph is not q.h.graph:
        raise GraphMismatchError("pairs belong to different graphs")
    return p.h.mask & ~q.h.mask == 0 and p.s.mask & ~(q.h.mask | q.s.mask) == 0


def maximal_proper_pairs(
    g: Graph, max_vertices: int = DEFAULT_ENUMERATION_CAP
) -> list[AdmissiblePair]:
    """Maximal admissible pairs strictly below the top pair (all vertices,
    no breaking choice).  These index the maximal gauge-invariant ideals."""
    pairs = admissible_pairs(g, max_vertices)
    top = AdmissiblePair(VertexSet.full(g), VertexSet.empty(g))
    proper = [p for p in pairs if p != top]
    return [
        p
        for p in proper
        if not any(q != p and pair_leq(p, q) for q in proper)
    ]


def restriction_graph(g: Graph, h: VertexSet) -> Graph:
    """Subgraph on a hereditary set H: H's vertices and every edge leaving
    them (all such edges stay inside H)."""
    _check_owner(g, h)
    if not is_hereditary(g, h):
        raise NotHereditaryError(f"{h!r} is not hereditary")
    sub = Graph()
    for v in h.members():
        sub.add_vertex(v.label)
    for grp in g.edge_groups():
        if grp.source in h:
            sub.add_edge(grp.source.label, grp.target.label, grp.multiplicity)
    return sub


def quotient_graph(g: Graph, h: VertexSet) -> Graph:
    """Complement graph of a saturated hereditary set H: vertices outside
    H and the edges that stay outside."""
    _require_saturated_hereditary(g, h)
    keep = [v for v in g.vertices if v not in h]
    out = Graph()
    for v in keep:
        out.add_vertex(v.label)
    for grp in g.edge_groups():
        if grp.source not in h and grp.target not in h:
            out.add_edge(grp.source.label, grp.target.label, grp.multiplicity)
    return out

"""Reachability layer: descendant and ancestor cones, strongly connected
components, downward directedness, cofinality, and countable separation.

Reachability is multiplicity-blind: one edge or OMEGA parallel edges give
the same arrows.  Vertex subsets are dense bitmasks tied to their graph.

Cofinality is decided through the finite shadow of infinite paths: in a
finitely presented graph every infinite path eventually cycles inside a
strongly connected component, so a vertex sees the tail of every infinite
path exactly when it reaches every component that contains a cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .graph import (
    Graph,
    GraphMismatchError,
    VertexClass,
    VertexId,
)


class VertexSet:
    """Subset of one graph's vertices, stored as a dense bitmask.

    Instances are immutable by convention and hashable; all set operators
    insist that both operands belong to the same graph object.
    """

    __slots__ = ("graph", "mask")

    def __init__(self, graph: Graph, mask: int = 0) -> None:
        if mask < 0 or mask >> graph.vertex_count:
            raise GraphMismatchError("mask has bits outside the graph's vertex range")
        self.graph = graph
        self.mask = mask

    @classmethod
    def empty(cls, graph: Graph) -> VertexSet:
        return cls(graph, 0)

    @classmethod
    def full(cls, graph: Graph) -> VertexSet:
        return cls(graph, (1 << graph.vertex_count) - 1)

    @classmethod
    def of(cls, graph: Graph, members: Iterable[VertexId | str | int]) -> VertexSet:
        mask = 0
        for member in members:
            mask |= 1 << graph.index_of(member)
        return cls(graph, mask)

    def indices(self) -> list[int]:
        return [i for i in range(self.graph.vertex_count) if (self.mask >> i) & 1]

    def members(self) -> list[VertexId]:
        return [self.graph.vertex(i) for i in self.indices()]

    def labels(self) -> list[str]:
        return [v.label for v in self.members()]

    def _check(self, other: VertexSet) -> None:
        if not isinstance(other, VertexSet) or other.graph is not self.graph:
            raise GraphMismatchError("vertex sets belong to different graphs")

    def __contains__(self, item: VertexId | str | int) -> bool:
        return bool((self.mask >> self.graph.index_of(item)) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices())

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __or__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.graph, self.mask | other.mask)

    def __and__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.graph, self.mask & other.mask)

    def __sub__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.graph, self.mask & ~other.mask)

    def __le__(self, other: VertexSet) -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: VertexSet) -> bool:
        self._check(other)
        return self.mask != other.mask and self.mask & ~other.mask == 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.graph is other.graph and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((id(self.graph), self.mask))

    def __repr__(self) -> str:
        return "{" + ",".join(self.labels()) + "}"


def _descendant_mask(g: Graph, start: int) -> int:
    seen = 1 << start
    stack = [start]
    while stack:
        u = stack.pop()
        for w in g.out_targets(u):
            if not (seen >> w) & 1:
                seen |= 1 << w
                stack.append(w)
    return seen


def descendant_masks(g: Graph) -> list[int]:
    """Transitive-closure row per vertex, as bitmasks (vertex included)."""
    return [_descendant_mask(g, i) for i in range(g.vertex_count)]


def descendants(g: Graph, v: VertexId | str | int) -> VertexSet:
    """All vertices reachable from v by a (possibly empty) path."""
    return VertexSet(g, _descendant_mask(g, g.index_of(v)))


def ancestors(g: Graph, w: VertexId | str | int) -> VertexSet:
    """All vertices that reach w by a (possibly empty) path."""
    start = g.index_of(w)
    seen = 1 << start
    stack = [start]
    while stack:
        u = stack.pop()
        for s in g.in_sources(u):
            if not (seen >> s) & 1:
                seen |= 1 << s
                stack.append(s)
    return VertexSet(g, seen)


def reaches(g: Graph, v: VertexId | str | int, w: VertexId | str | int) -> bool:
    return bool((_descendant_mask(g, g.index_of(v)) >> g.index_of(w)) & 1)


@dataclass(frozen=True)
class Scc:
    """One strongly connected component; has_cycle means it supports an
    infinite path (more than one vertex, or a vertex with a loop)."""

    indices: tuple[int, ...]
    has_cycle: bool


def sccs(g: Graph) -> list[Scc]:
    """Strongly connected components (Tarjan), ordered by smallest member."""
    n = g.vertex_count
    idx = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    components: list[list[int]] = []
    counter = 0

    for root in range(n):
        if idx[root] != -1:
            continue
        idx[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        work: list[tuple[int, Iterator[int]]] = [(root, iter(g.out_targets(root)))]
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if idx[w] == -1:
                    idx[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(g.out_targets(w))))
                    advanced = True
                    break
                if on_stack[w] and idx[w] < low[v]:
                    low[v] = idx[w]
            if advanced:
                continue
            work.pop()
            if work and low[v] < low[work[-1][0]]:
                low[work[-1][0]] = low[v]
            if low[v] == idx[v]:
                component = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    component.append(w)
                    if w == v:
                        break
                components.append(sorted(component))

    components.sort(key=lambda c: c[0])
    out = []
    for members in components:
        cyclic = len(members) > 1 or g.multiplicity(members[0], members[0]) is not None
        out.append(Scc(tuple(members), cyclic))
    return out


def is_downward_directed(g: Graph) -> bool:
    return downward_directed_witness(g) is None


def downward_directed_witness(g: Graph) -> tuple[VertexId, VertexId] | None:
    """First vertex pair (by index) with no common descendant, if any."""
    masks = descendant_masks(g)
    n = g.vertex_count
    for i in range(n):
        for j in range(i, n):
            if masks[i] & masks[j] == 0:
                return (g.vertex(i), g.vertex(j))
    return None


@dataclass(frozen=True)
class CofinalityFailure:
    """A vertex that misses a singular vertex or a cycle-bearing component."""

    source: VertexId
    target: VertexId
    kind: str  # "singular" or "cycle"


def is_cofinal(g: Graph) -> bool:
    return cofinality_witness(g) is None


def cofinality_witness(g: Graph) -> CofinalityFailure | None:
    """First failure of cofinality in scan order, if any.

    The graph is cofinal when every vertex reaches every singular vertex
    (sink or infinite emitter) and every strongly connected component that
    contains a cycle.
    """
    masks = descendant_masks(g)
    n = g.vertex_count
    for t in range(n):
        if g.vertex_class(t) is VertexClass.REGULAR:
            continue
        for v in range(n):
            if not (masks[v] >> t) & 1:
                return CofinalityFailure(g.vertex(v), g.vertex(t), "singular")
    for component in sccs(g):
        if not component.has_cycle:
            continue
        cmask = 0
        for i in component.indices:
            cmask |= 1 << i
        for v in range(n):
            if masks[v] & cmask == 0:
                return CofinalityFailure(g.vertex(v), g.vertex(component.indices[0]), "cycle")
    return None


def has_csp(g: Graph) -> bool:
    """Countable separation: some countable vertex set meets the ancestor
    cone of every vertex.  A finitely presented graph has finitely many
    vertices, so the full vertex set itself always separates."""
    return True


def csp_witness(g: Graph) -> VertexSet:
    """A countable separating set; the full vertex set always works here."""
    return VertexSet.full(g)

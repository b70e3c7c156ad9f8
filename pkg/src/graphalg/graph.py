"""Directed multigraph model with possibly infinite edge multiplicities.

Vertices carry a label and a stable insertion index.  Parallel edges
between the same ordered pair of vertices are stored as a single group
whose multiplicity is either a positive integer or OMEGA (countably
infinite), so infinite emitters stay finitely representable.  Every
enumeration downstream is deterministic in insertion order.

Graphs are built once (add_vertex / add_edge) and treated as immutable
afterwards; all analysis functions only read them.
"""

from __future__ import annotations

import itertools
from bisect import insort
from dataclasses import dataclass
from enum import Enum


class GraphError(ValueError):
    """Structural misuse of the graph model."""


class DuplicateLabelError(GraphError):
    pass


class UnknownVertexError(GraphError):
    pass


class GraphMismatchError(GraphError):
    """A vertex set or pair was applied to a graph it does not belong to."""


class CapExceededError(RuntimeError):
    """An enumeration or construction would exceed its configured size cap."""


class Omega:
    """Countably infinite edge multiplicity.  Use the OMEGA singleton."""

    _instance: Omega | None = None

    def __new__(cls) -> Omega:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "OMEGA"


OMEGA = Omega()

# Edge multiplicity: a positive int, or OMEGA for countably many parallel edges.
Multiplicity = int | Omega


def is_omega(m: Multiplicity) -> bool:
    return isinstance(m, Omega)


def check_multiplicity(m: Multiplicity) -> Multiplicity:
    if is_omega(m):
        return m
    if isinstance(m, bool) or not isinstance(m, int):
        raise GraphError(f"multiplicity must be a positive integer or OMEGA, got {m!r}")
    if m < 1:
        raise GraphError(f"multiplicity must be at least 1, got {m}")
    return m


def add_multiplicities(a: Multiplicity, b: Multiplicity) -> Multiplicity:
    """Merge parallel-edge counts.  OMEGA absorbs any addition."""
    if is_omega(a) or is_omega(b):
        return OMEGA
    return a + b


class VertexClass(Enum):
    SINK = "sink"
    INFINITE_EMITTER = "infinite_emitter"
    REGULAR = "regular"


@dataclass(frozen=True)
class VertexId:
    """Handle for one vertex: its label plus its insertion index."""

    label: str
    index: int


@dataclass(frozen=True)
class EdgeGroup:
    """All parallel edges from source to target, collapsed to one count."""

    source: VertexId
    target: VertexId
    multiplicity: Multiplicity


class Graph:
    """Finitely presented directed multigraph.

    A vertex emitting no edges at all is a sink, one emitting an OMEGA
    group is an infinite emitter, and every other vertex is regular
    (its total outgoing multiplicity is finite and nonzero).
    """

    def __init__(self) -> None:
        self._vertices: list[VertexId] = []
        self._index: dict[str, int] = {}
        self._mult: dict[tuple[int, int], Multiplicity] = {}
        self._out: list[list[int]] = []
        self._in: list[list[int]] = []

    @property
    def vertex_count(self) -> int:
        return len(self._vertices)

    @property
    def vertices(self) -> tuple[VertexId, ...]:
        return tuple(self._vertices)

    def vertex(self, index: int) -> VertexId:
        if not 0 <= index < len(self._vertices):
            raise UnknownVertexError(f"no vertex with index {index}")
        return self._vertices[index]

    def vertex_by_label(self, label: str) -> VertexId:
        try:
            return self._vertices[self._index[label]]
        except KeyError:
            raise UnknownVertexError(f"no vertex labelled {label!r}") from None

    def index_of(self, v: VertexId | str | int) -> int:
        """Resolve a VertexId, label, or raw index to this graph's index."""
        if isinstance(v, VertexId):
            if 0 <= v.index < len(self._vertices) and self._vertices[v.index] == v:
                return v.index
            raise UnknownVertexError(f"{v!r} does not belong to this graph")
        if isinstance(v, str):
            try:
                return self._index[v]
            except KeyError:
                raise UnknownVertexError(f"no vertex labelled {v!r}") from None
        if isinstance(v, int) and not isinstance(v, bool):
            if 0 <= v < len(self._vertices):
                return v
            raise UnknownVertexError(f"no vertex with index {v}")
        raise UnknownVertexError(f"cannot resolve vertex from {v!r}")

    def add_vertex(self, label: str) -> VertexId:
        if not isinstance(label, str) or not label:
            raise GraphError("vertex label must be a nonempty string")
        if any(ch.isspace() for ch in label):
            raise GraphError(f"vertex label may not contain whitespace: {label!r}")
        if label in self._index:
            raise DuplicateLabelError(f"duplicate vertex label {label!r}")
        vid = VertexId(label, len(self._vertices))
        self._vertices.append(vid)
        self._index[label] = vid.index
        self._out.append([])
        self._in.append([])
        return vid

    def add_edge(
        self,
        source: VertexId | str | int,
        target: VertexId | str | int,
        multiplicity: Multiplicity = 1,
    ) -> None:
        """Add parallel edges source -> target; repeated groups merge by addition."""
        m = check_multiplicity(multiplicity)
        i = self.index_of(source)
        j = self.index_of(target)
        key = (i, j)
        if key in self._mult:
            self._mult[key] = add_multiplicities(self._mult[key], m)
        else:
            self._mult[key] = m
            insort(self._out[i], j)
            insort(self._in[j], i)

    def multiplicity(
        self, source: VertexId | str | int, target: VertexId | str | int
    ) -> Multiplicity | None:
        """The merged multiplicity of the (source, target) group, or None."""
        return self._mult.get((self.index_of(source), self.index_of(target)))

    def out_targets(self, index: int) -> list[int]:
        """Ascending target indices of the groups leaving this vertex."""
        return self._out[index]

    def in_sources(self, index: int) -> list[int]:
        """Ascending source indices of the groups entering this vertex."""
        return self._in[index]

    def edge_groups(self) -> list[EdgeGroup]:
        return [
            EdgeGroup(self._vertices[i], self._vertices[j], m)
            for (i, j), m in sorted(self._mult.items())
        ]

    def total_out_multiplicity(self, v: VertexId | str | int) -> Multiplicity | int:
        """Total number of edges leaving v: 0, a positive int, or OMEGA."""
        i = self.index_of(v)
        total: Multiplicity | int = 0
        for j in self._out[i]:
            m = self._mult[(i, j)]
            if is_omega(m):
                return OMEGA
            total += m
        return total

    def vertex_class(self, v: VertexId | str | int) -> VertexClass:
        total = self.total_out_multiplicity(v)
        if is_omega(total):
            return VertexClass.INFINITE_EMITTER
        if total == 0:
            return VertexClass.SINK
        return VertexClass.REGULAR

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            [v.label for v in self._vertices] == [v.label for v in other._vertices]
            and self._mult == other._mult
        )

    def __repr__(self) -> str:
        return f"Graph({self.vertex_count} vertices, {len(self._mult)} edge groups)"


def _mult_sort_key(m: Multiplicity) -> tuple[int, int]:
    # Finite counts sort by value; OMEGA sorts after every finite count.
    return (1, 0) if is_omega(m) else (0, m)


def canonical_form(g: Graph, max_vertices: int = 8) -> str:
    """Label-independent serialization, equal exactly for isomorphic graphs.

    Brute-forces every vertex permutation, so it is restricted to small
    graphs (raises CapExceededError above max_vertices).
    """
    n = g.vertex_count
    if n > max_vertices:
        raise CapExceededError(f"canonical_form handles at most {max_vertices} vertices, got {n}")
    edges = [(i, j, _mult_sort_key(m)) for (i, j), m in g._mult.items()]
    best: list[tuple[int, int, tuple[int, int]]] | None = None
    for perm in itertools.permutations(range(n)):
        candidate = sorted((perm[i], perm[j], mk) for i, j, mk in edges)
        if best is None or candidate < best:
            best = candidate
    body = ";".join(
        f"{i}>{j}:{'inf' if mk[0] else mk[1]}" for i, j, mk in (best or [])
    )
    return f"{n};{body}"


def is_isomorphic(g: Graph, h: Graph, max_vertices: int = 8) -> bool:
    """Brute-force isomorphism test (vertex permutations, multiplicities kept)."""
    n = g.vertex_count
    if n > max_vertices or h.vertex_count > max_vertices:
        raise CapExceededError(f"is_isomorphic handles at most {max_vertices} vertices")
    if n != h.vertex_count or len(g._mult) != len(h._mult):
        return False
    if sorted(map(_mult_sort_key, g._mult.values())) != sorted(
        map(_mult_sort_key, h._mult.values())
    ):
        return False
    target = h._mult
    for perm in itertools.permutations(range(n)):
        mapped = {(perm[i], perm[j]): m for (i, j), m in g._mult.items()}
        if all(
            (k in target) and _mult_sort_key(target[k]) == _mult_sort_key(m)
            for k, m in mapped.items()
        ):
            return True
    return False

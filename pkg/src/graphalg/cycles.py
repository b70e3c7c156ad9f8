"""Cycle structure: exitless cycles (Condition (L)), based simple-cycle
counts (Condition (K)), acyclicity, and a brute-force cycle enumerator.

A simple cycle based at v is a walk that starts and ends at v and does
not pass through v in between.  Interior vertices may repeat, so a graph
can base infinitely many simple cycles at one vertex; every count here
saturates at two, which is all the classification ever needs.

Two independent routes are kept deliberately separate: the fast decisions
(functional subgraph for exitless cycles, component analysis plus DAG
counting for based cycles) and the exhaustive breadth-first enumerator
used as an oracle against them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator

from .graph import Graph, GraphError, VertexId, is_omega
from .reachability import sccs


@dataclass(frozen=True)
class Cycle:
    """A cyclic walk as (source, target) index steps; the base vertex is
    the source of the first step and the target of the last."""

    graph: Graph = field(compare=False, repr=False)
    steps: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if not self.steps:
            raise GraphError("a cycle has at least one step")
        for (_, a), (b, _) in zip(self.steps, self.steps[1:]):
            if a != b:
                raise GraphError("cycle steps do not chain")
        if self.steps[-1][1] != self.steps[0][0]:
            raise GraphError("cycle does not close")

    @property
    def base(self) -> VertexId:
        return self.graph.vertex(self.steps[0][0])

    def vertex_indices(self) -> set[int]:
        return {src for src, _ in self.steps}

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        labels = [self.graph.vertex(src).label for src, _ in self.steps]
        labels.append(self.base.label)
        return " -> ".join(labels)


class SimpleCycleCount(Enum):
    ZERO = "zero"
    ONE = "one"
    TWO_OR_MORE = "two_or_more"


def _functional_vertices(g: Graph) -> dict[int, int]:
    """Vertices with total outgoing multiplicity exactly one, mapped to
    their unique target.  Exitless cycles live entirely inside this map."""
    out = {}
    for i in range(g.vertex_count):
        if g.total_out_multiplicity(i) == 1:
            out[i] = g.out_targets(i)[0]
    return out


def find_cycle_without_exit(g: Graph) -> Cycle | None:
    """First cycle (by smallest vertex index) none of whose vertices emits
    anything beyond the cycle edge itself, or None."""
    succ = _functional_vertices(g)
    state = {i: 0 for i in succ}  # 0 fresh, 1 on current walk, 2 exhausted
    for start in succ:
        if state[start] != 0:
            continue
        path: list[int] = []
        position: dict[int, int] = {}
        u = start
        while u in succ and state[u] == 0:
            state[u] = 1
            position[u] = len(path)
            path.append(u)
            u = succ[u]
        if u in position:
            loop = path[position[u]:]
            pivot = loop.index(min(loop))
            loop = loop[pivot:] + loop[:pivot]
            steps = tuple(
                (loop[k], loop[(k + 1) % len(loop)]) for k in range(len(loop))
            )
            return Cycle(g, steps)
        for w in path:
            state[w] = 2
    return None


def is_condition_l(g: Graph) -> bool:
    """Condition (L): every cycle has an exit."""
    return find_cycle_without_exit(g) is None


def _forward_mask(g: Graph, seeds: list[int], banned: int) -> int:
    """Vertices reachable from the seeds without entering the banned vertex."""
    seen = 0
    stack = []
    for s in seeds:
        if s != banned and not (seen >> s) & 1:
            seen |= 1 << s
            stack.append(s)
    while stack:
        u = stack.pop()
        for w in g.out_targets(u):
            if w != banned and not (seen >> w) & 1:
                seen |= 1 << w
                stack.append(w)
    return seen


def _backward_mask(g: Graph, seeds: list[int], banned: int) -> int:
    seen = 0
    stack = []
    for s in seeds:
        if s != banned and not (seen >> s) & 1:
            seen |= 1 << s
            stack.append(s)
    while stack:
        u = stack.pop()
        for w in g.in_sources(u):
            if w != banned and not (seen >> w) & 1:
                seen |= 1 << w
                stack.append(w)
    return seen


def _induced_has_cycle(g: Graph, mask: int) -> bool:
    """Cycle detection on the subgraph induced by the mask (loops count)."""
    color: dict[int, int] = {}
    for root in range(g.vertex_count):
        if not (mask >> root) & 1 or color.get(root, 0) != 0:
            continue
        stack: list[tuple[int, Iterator[int]]] = [(root, iter(g.out_targets(root)))]
        color[root] = 1
        while stack:
            u, it = stack[-1]
            advanced = False
            for w in it:
                if not (mask >> w) & 1:
                    continue
                c = color.get(w, 0)
                if c == 1:
                    return True
                if c == 0:
                    color[w] = 1
                    stack.append((w, iter(g.out_targets(w))))
                    advanced = True
                    break
            if not advanced:
                color[u] = 2
                stack.pop()
    return False


def _saturating2(value: int) -> int:
    return 2 if value >= 2 else value


def _cap2(m) -> int:
    return 2 if is_omega(m) else min(m, 2)


def _count_enum(count: int) -> SimpleCycleCount:
    if count >= 2:
        return SimpleCycleCount.TWO_OR_MORE
    return SimpleCycleCount.ONE if count == 1 else SimpleCycleCount.ZERO


def simple_cycle_count_at(g: Graph, v: VertexId | str | int) -> SimpleCycleCount:
    """How many simple cycles are based at v: zero, one, or two_or_more.

    Loops contribute their multiplicity directly.  Other cycles are
    first-return walks through the rest of the graph; if the region those
    walks cross contains its own cycle there are infinitely many, and
    otherwise the region is acyclic and the walks are counted by a
    topological pass with all arithmetic saturated at two.
    """
    base = g.index_of(v)
    count = 0
    loop = g.multiplicity(base, base)
    if loop is not None:
        count = _cap2(loop)
        if count >= 2:
            return SimpleCycleCount.TWO_OR_MORE

    outs = [t for t in g.out_targets(base) if t != base]
    entries = {s: g.multiplicity(s, base) for s in g.in_sources(base) if s != base}
    if not outs or not entries:
        return _count_enum(count)

    relevant = _forward_mask(g, outs, base) & _backward_mask(g, list(entries), base)
    if relevant == 0:
        return _count_enum(count)
    if _induced_has_cycle(g, relevant):
        return SimpleCycleCount.TWO_OR_MORE

    # Kahn order on the relevant region, then count return walks backwards.
    members = [i for i in range(g.vertex_count) if (relevant >> i) & 1]
    indegree = {
        i: sum(1 for s in g.in_sources(i) if (relevant >> s) & 1) for i in members
    }
    ready = [i for i in members if indegree[i] == 0]
    order: list[int] = []
    while ready:
        u = min(ready)
        ready.remove(u)
        order.append(u)
        for w in g.out_targets(u):
            if (relevant >> w) & 1:
                indegree[w] -= 1
                if indegree[w] == 0:
                    ready.append(w)

    walks: dict[int, int] = {}
    for u in reversed(order):
        total = _cap2(entries[u]) if u in entries else 0
        for t in g.out_targets(u):
            if (relevant >> t) & 1:
                total += _cap2(g.multiplicity(u, t)) * walks[t]
        walks[u] = _saturating2(total)

    for t in outs:
        if (relevant >> t) & 1:
            count += _cap2(g.multiplicity(base, t)) * walks[t]
            if count >= 2:
                return SimpleCycleCount.TWO_OR_MORE
    return _count_enum(count)


def condition_k_witness(g: Graph) -> VertexId | None:
    """First vertex basing exactly one simple cycle, or None."""
    for i in range(g.vertex_count):
        if simple_cycle_count_at(g, i) is SimpleCycleCount.ONE:
            return g.vertex(i)
    return None


def is_condition_k(g: Graph) -> bool:
    """Condition (K): no vertex is the base of exactly one simple cycle."""
    return condition_k_witness(g) is None


def is_acyclic(g: Graph) -> bool:
    return not any(c.has_cycle for c in sccs(g))


def cycles_based_at(g: Graph, v: VertexId | str | int, cap: int) -> list[Cycle]:
    """Up to cap simple cycles based at v, shortest first, multiplicity
    expanded (a group of multiplicity m yields m copies of each walk
    through it, OMEGA yielding cap copies).

    Breadth-first over first-return walks, pruned to endpoints that can
    still get back to the base; the pruning guarantees termination when
    fewer than cap cycles exist.
    """
    base = g.index_of(v)
    if cap <= 0:
        return []
    found: list[Cycle] = []

    loop = g.multiplicity(base, base)
    if loop is not None:
        copies = cap if is_omega(loop) else min(loop, cap)
        for _ in range(copies):
            found.append(Cycle(g, ((base, base),)))
            if len(found) == cap:
                return found

    can_return = _backward_mask(g, [s for s in g.in_sources(base) if s != base], base)

    frontier: list[tuple[tuple[tuple[int, int], ...], int]] = []
    for t in g.out_targets(base):
        if t == base:
            continue
        if not (can_return >> t) & 1:
            continue
        m = g.multiplicity(base, t)
        copies = cap if is_omega(m) else min(m, cap)
        for _ in range(copies):
            frontier.append((((base, t),), t))

    while frontier and len(found) < cap:
        next_frontier: list[tuple[tuple[tuple[int, int], ...], int]] = []
        for steps, end in frontier:
            for t in g.out_targets(end):
                m = g.multiplicity(end, t)
                copies = cap if is_omega(m) else min(m, cap)
                if t == base:
                    for _ in range(copies):
                        found.append(Cycle(g, steps + ((end, t),)))
                        if len(found) == cap:
                            return found
                elif (can_return >> t) & 1:
                    for _ in range(copies):
                        next_frontier.append((steps + ((end, t),), t))
        frontier = next_frontier
    return found


def enumerate_simple_cycles(g: Graph, cap: int) -> list[Cycle]:
    """Exhaustive oracle: up to cap simple cycles based at each vertex,
    bases in index order, shortest first within a base."""
    out: list[Cycle] = []
    for i in range(g.vertex_count):
        out.extend(cycles_based_at(g, i, cap))
    return out

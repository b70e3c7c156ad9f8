"""Seeded test corpora and the self-check suite behind the check command.

Every generator takes an explicit random.Random so corpora are exactly
reproducible from a seed.  The checks cross-validate each fast decision
against an independent brute-force route on the same graph:

  saturation        recursion vs intersection of enumerated supersets
  disjointness      disjoint hereditary sets keep disjoint saturations
  Condition (L)/(K) functional/counting routes vs cycle enumeration
  reachability      cofinality and directedness vs their saturation forms
  implications      audit of the derived classification
  round trip        parse(serialize(g)) reproduces g
"""

from __future__ import annotations

import random

from .classify import check_saturation_characterizations, classify, implication_audit
from .cycles import (
    SimpleCycleCount,
    cycles_based_at,
    is_condition_k,
    is_condition_l,
    simple_cycle_count_at,
)
from .formats import parse_graph, serialize_graph
from .families import Family, truncation
from .graph import OMEGA, Graph, Multiplicity
from .ideals import (
    _hereditary_mask,
    _out_masks,
    _regular_flags,
    _saturated_mask,
    saturate,
)
from .reachability import VertexSet


def random_graph(
    rng: random.Random,
    max_vertices: int = 6,
    multiplicities: tuple[Multiplicity, ...] = (1, 2, OMEGA),
) -> Graph:
    """One random graph: size, per-graph edge density, and group
    multiplicities all drawn from the given generator."""
    n = rng.randint(1, max_vertices)
    g = Graph()
    for i in range(n):
        g.add_vertex(f"v{i}")
    density = rng.uniform(0.08, 0.5)
    for i in range(n):
        for j in range(n):
            if rng.random() < density:
                g.add_edge(i, j, rng.choice(multiplicities))
    return g


def family_truncations(max_n: int = 3) -> list[tuple[str, Graph]]:
    out = []
    for kind in Family:
        for n in range(1, max_n + 1):
            out.append((f"{kind.value}({n})", truncation(kind, n)))
    return out


def builtin_corpus(
    seed: int = 0,
    random_count: int = 500,
    max_vertices: int = 6,
    max_family_n: int = 3,
) -> list[tuple[str, Graph]]:
    entries = family_truncations(max_family_n)
    rng = random.Random(seed)
    for k in range(random_count):
        entries.append((f"random-{seed}-{k}", random_graph(rng, max_vertices)))
    return entries


def all_hereditary_masks(g: Graph) -> list[int]:
    out_masks = _out_masks(g)
    return [m for m in range(1 << g.vertex_count) if _hereditary_mask(out_masks, m)]


def least_saturated_superset_mask(g: Graph, hmask: int) -> int:
    """Brute force: intersect every saturated hereditary superset.  The
    family is closed under intersection, so this is the least one."""
    out_masks = _out_masks(g)
    regular = _regular_flags(g)
    best = (1 << g.vertex_count) - 1
    for mask in range(1 << g.vertex_count):
        if (
            mask & hmask == hmask
            and _hereditary_mask(out_masks, mask)
            and _saturated_mask(out_masks, regular, mask)
        ):
            best &= mask
    return best


def check_graph(name: str, g: Graph, pair_limit: int = 64) -> list[str]:
    """All cross-checks on one graph; returns human-readable violations."""
    violations: list[str] = []
    n = g.vertex_count

    hereditary = all_hereditary_masks(g)
    for hmask in hereditary:
        closed, _ = saturate(g, VertexSet(g, hmask))
        expected = least_saturated_superset_mask(g, hmask)
        if closed.mask != expected:
            violations.append(
                f"{name}: saturation of {hmask:#x} gave {closed.mask:#x}, "
                f"brute force says {expected:#x}"
            )

    seen_pairs = 0
    for a in hereditary:
        if seen_pairs >= pair_limit:
            break
        for b in hereditary:
            if a & b:
                continue
            sa, _ = saturate(g, VertexSet(g, a))
            sb, _ = saturate(g, VertexSet(g, b))
            if sa.mask & sb.mask:
                violations.append(
                    f"{name}: disjoint hereditary {a:#x},{b:#x} grew overlapping saturations"
                )
            seen_pairs += 1
            if seen_pairs >= pair_limit:
                break

    exitless_found = False
    for v in range(n):
        cycles = cycles_based_at(g, v, 2)
        count = len(cycles)
        fast = simple_cycle_count_at(g, v)
        expected_count = {0: SimpleCycleCount.ZERO, 1: SimpleCycleCount.ONE}.get(
            count, SimpleCycleCount.TWO_OR_MORE
        )
        if fast is not expected_count:
            violations.append(
                f"{name}: cycle count at index {v} is {fast.value}, "
                f"enumeration says {expected_count.value}"
            )
        for cycle in cycles:
            if all(
                g.total_out_multiplicity(i) == 1 for i in cycle.vertex_indices()
            ):
                exitless_found = True
    if is_condition_l(g) != (not exitless_found):
        violations.append(f"{name}: Condition (L) disagrees with cycle enumeration")
    oracle_k = all(
        len(cycles_based_at(g, v, 2)) != 1 for v in range(n)
    )
    if is_condition_k(g) != oracle_k:
        violations.append(f"{name}: Condition (K) disagrees with cycle enumeration")

    if not check_saturation_characterizations(g):
        violations.append(
            f"{name}: reachability decisions disagree with saturation characterizations"
        )

    report = classify(g)
    audit = implication_audit(report)
    if audit:
        violations.append(f"{name}: implication audit failed: {audit}")

    if parse_graph(serialize_graph(g)) != g:
        violations.append(f"{name}: serialize/parse round trip changed the graph")

    return violations


def run_checks(entries: list[tuple[str, Graph]]) -> list[str]:
    violations: list[str] = []
    for name, g in entries:
        violations.extend(check_graph(name, g))
    return violations

"""Parametric graph families over a point set X (or an ordinal), with
finite truncations and symbolic classification at uncountable sizes.

Families over a set X, vertices being finite subsets of X:
  eA      nonempty finite subsets, edges A -> A' for proper inclusions
  eL      eA plus one loop at every vertex
  eK      eA plus two loops at every vertex
  eP      all finite subsets including the empty set, proper inclusions
  eKappa  ordinal kappa: vertices are indices below kappa, edges upward

Finite truncations instantiate X = {1..n} (or kappa = n) as concrete
graphs.  Symbolic classification answers for infinite parameters by a
fixed lookup table, each cell carrying its mathematical justification;
the derived verdicts reuse exactly the concrete classifier's formulas.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .classify import PropertyReport, build_report, classify
from .graph import CapExceededError, Graph


class UnsupportedFamilyError(ValueError):
    """The requested family/parameter combination has no defined answer."""


class Family(Enum):
    EA = "eA"
    EL = "eL"
    EK = "eK"
    EP = "eP"
    EKAPPA = "eKappa"


class Cardinal(Enum):
    """Symbolic infinite sizes for the point set X.  Finite sizes are
    plain integers.  Order: finite < ALEPH0 < UNCOUNTABLE, and
    AT_LEAST_CONTINUUM is an uncountable size with a known lower bound."""

    ALEPH0 = "aleph0"
    UNCOUNTABLE = "uncountable"
    AT_LEAST_CONTINUUM = "continuum+"


class Cofinality(Enum):
    """Symbolic shapes of an infinite ordinal: whether some countable
    subset is unbounded in it.  Finite ordinals are plain integers."""

    COUNTABLE = "cofinal-omega"
    UNCOUNTABLE = "non-cofinal-omega"


CARDINAL_FAMILIES = (Family.EA, Family.EL, Family.EK, Family.EP)


@dataclass(frozen=True)
class FamilyDescriptor:
    kind: Family
    param: int | Cardinal | Cofinality

    def __post_init__(self) -> None:
        p = self.param
        if isinstance(p, bool) or (isinstance(p, int) and p < 1):
            raise UnsupportedFamilyError(f"finite family size must be at least 1, got {p!r}")
        if self.kind is Family.EKAPPA:
            if not isinstance(p, (int, Cofinality)):
                raise UnsupportedFamilyError(
                    "eKappa takes a finite size or a cofinality marker"
                )
        else:
            if not isinstance(p, (int, Cardinal)):
                raise UnsupportedFamilyError(
                    f"{self.kind.value} takes a finite size or a cardinal marker"
                )

    @property
    def is_finite(self) -> bool:
        return isinstance(self.param, int)


def parse_param(kind: Family, token: str) -> int | Cardinal | Cofinality:
    """Parse a CLI parameter token for the given family."""
    if token.isdigit():
        value = int(token)
        if value < 1:
            raise UnsupportedFamilyError("finite family size must be at least 1")
        return value
    if kind is Family.EKAPPA:
        for member in Cofinality:
            if member.value == token:
                return member
        raise UnsupportedFamilyError(
            f"eKappa parameter must be an integer, 'cofinal-omega' or 'non-cofinal-omega', got {token!r}"
        )
    for member in Cardinal:
        if member.value == token:
            return member
    raise UnsupportedFamilyError(
        f"{kind.value} parameter must be an integer, 'aleph0', 'uncountable' or 'continuum+', got {token!r}"
    )


def format_param(param: int | Cardinal | Cofinality) -> str:
    return str(param) if isinstance(param, int) else param.value


def _subset_label(subset: tuple[int, ...]) -> str:
    return "{" + ",".join(str(x) for x in subset) + "}"


def _finite_subsets(n: int, include_empty: bool) -> list[tuple[int, ...]]:
    subsets: list[tuple[int, ...]] = []
    for size in range(0 if include_empty else 1, n + 1):
        subsets.extend(itertools.combinations(range(1, n + 1), size))
    return subsets


DEFAULT_GENERATION_CAP = 20


def generate_finite(desc: FamilyDescriptor, max_vertices: int = DEFAULT_GENERATION_CAP) -> Graph:
    """Build the finite truncation for a descriptor with integer parameter."""
    if not desc.is_finite:
        raise UnsupportedFamilyError(
            f"generate_finite needs a finite parameter, got {format_param(desc.param)}"
        )
    n = desc.param
    kind = desc.kind
    if kind is Family.EKAPPA:
        vertex_count = n
    elif kind is Family.EP:
        vertex_count = 2**n
    else:
        vertex_count = 2**n - 1
    if vertex_count > max_vertices:
        raise CapExceededError(
            f"{kind.value}({n}) has {vertex_count} vertices, over the cap of {max_vertices}"
        )

    g = Graph()
    if kind is Family.EKAPPA:
        for i in range(n):
            g.add_vertex(str(i))
        for i in range(n):
            for j in range(i + 1, n):
                g.add_edge(str(i), str(j))
        return g

    subsets = _finite_subsets(n, include_empty=kind is Family.EP)
    for subset in subsets:
        g.add_vertex(_subset_label(subset))
    for a in subsets:
        sa = set(a)
        for b in subsets:
            if a != b and sa.issubset(b):
                g.add_edge(_subset_label(a), _subset_label(b))
    if kind in (Family.EL, Family.EK):
        for subset in subsets:
            label = _subset_label(subset)
            g.add_edge(label, label)
            if kind is Family.EK:
                g.add_edge(label, label)
    return g


def truncation(kind: Family, n: int, max_vertices: int = DEFAULT_GENERATION_CAP) -> Graph:
    """Convenience wrapper: the finite truncation of a family at size n."""
    return generate_finite(FamilyDescriptor(kind, n), max_vertices)


def _countable(param: int | Cardinal) -> bool:
    return isinstance(param, int) or param is Cardinal.ALEPH0


def symbolic_classify(desc: FamilyDescriptor) -> PropertyReport:
    """Classify a family at its (possibly infinite) parameter by table
    lookup, justifying every cell in the report's witnesses."""
    kind, p = desc.kind, desc.param
    finite = desc.is_finite
    notes: dict[str, str] = {}

    downward_directed = True
    if kind is Family.EKAPPA:
        notes["downward_directed"] = "any two indices both reach their maximum"
    else:
        notes["downward_directed"] = (
            "any two finite subsets both reach their union"
        )

    if kind is Family.EKAPPA:
        acyclic = True
        notes["acyclic"] = "every edge strictly increases the index"
    elif kind in (Family.EA, Family.EP):
        acyclic = True
        notes["acyclic"] = "every edge strictly enlarges the subset"
    else:
        acyclic = False
        notes["acyclic"] = "every vertex carries a loop"

    if kind is Family.EL:
        condition_l = not finite
        condition_k = False
        notes["condition_k"] = (
            "every vertex is the base of exactly one simple cycle, its loop"
        )
        if finite:
            notes["condition_l"] = "the loop at the maximal subset has no exit"
        else:
            notes["condition_l"] = (
                "every loop exits along an edge to a strictly larger finite subset"
            )
    elif kind is Family.EK:
        condition_l = True
        condition_k = True
        notes["condition_l"] = "the two loops at each vertex exit one another"
        notes["condition_k"] = "every vertex is the base of at least two loops"
    else:
        condition_l = True
        condition_k = True
        notes["condition_l"] = "no cycles, so no cycle lacks an exit"
        notes["condition_k"] = "no cycles, so no vertex bases exactly one"

    if kind is Family.EKAPPA:
        csp = finite or p is Cofinality.COUNTABLE
        if finite:
            notes["csp"] = "finitely many vertices always separate"
        elif csp:
            notes["csp"] = (
                "a countable unbounded set of indices meets every ancestor cone"
            )
        else:
            notes["csp"] = (
                "no countable set of indices is unbounded, so countably many "
                "vertices always miss some ancestor cone"
            )
    elif kind is Family.EP:
        csp = True
        notes["csp"] = (
            "the empty set reaches every vertex, so one vertex separates"
        )
    else:
        csp = _countable(p)
        if finite:
            notes["csp"] = "finitely many vertices always separate"
        elif csp:
            notes["csp"] = "countably many vertices separate themselves"
        else:
            notes["csp"] = (
                "countably many finite subsets cover only countably many "
                "points, so some singleton vertex escapes their ancestor cones"
            )

    if finite:
        if kind in (Family.EA, Family.EP):
            cofinal = True
            notes["cofinal"] = (
                "every vertex reaches the maximal subset, the unique sink, "
                "and there are no cycles"
            )
        elif kind is Family.EKAPPA:
            cofinal = True
            notes["cofinal"] = (
                "every index reaches the top index, the unique sink, "
                "and there are no cycles"
            )
        else:
            cofinal = p == 1
            if cofinal:
                notes["cofinal"] = "a single vertex reaches its own loops"
            else:
                notes["cofinal"] = (
                    "the maximal subset cannot reach the loop at a singleton"
                )
    else:
        cofinal = False
        if kind is Family.EKAPPA:
            notes["cofinal"] = "larger indices never reach smaller singular ones"
        else:
            notes["cofinal"] = "distinct singletons are unreachable from each other"

    return build_report(
        condition_l=condition_l,
        condition_k=condition_k,
        downward_directed=downward_directed,
        cofinal=cofinal,
        csp=csp,
        acyclic=acyclic,
        witnesses=notes,
    )


def maximal_ideal_cardinality(desc: FamilyDescriptor) -> int | Cardinal:
    """How many maximal ideals the family's graph algebra has, when the
    counting argument applies.

    For eA and eK with an infinite point set the maximal ideals biject
    with the points: deleting one singleton vertex leaves a saturated
    hereditary set exactly because singletons are infinite emitters.  For
    eL the loops contribute a circle of primitive quotients per point, so
    the count collapses to the point count only once the point set is at
    least continuum sized.
    """
    kind, p = desc.kind, desc.param
    if kind in (Family.EA, Family.EK):
        if isinstance(p, int):
            raise UnsupportedFamilyError(
                "finite point sets leave singleton vertices regular, so the "
                "deleted-singleton sets are not saturated and the count does not apply"
            )
        return p
    if kind is Family.EL:
        if p is Cardinal.AT_LEAST_CONTINUUM:
            return p
        raise UnsupportedFamilyError(
            "the eL count needs at least continuum many points to absorb the "
            "circle factor on each loop"
        )
    raise UnsupportedFamilyError(
        f"no maximal-ideal count is defined for {kind.value}"
    )


STRICT_FIELDS = ("downward_directed", "condition_k", "acyclic")

SIZE_SENSITIVE_FIELDS = (
    "condition_l",
    "cofinal",
    "csp",
    "cstar_simple",
    "cstar_prime",
    "cstar_primitive",
    "lpa_prime",
    "lpa_primitive",
    "all_ideals_gauge_invariant",
    "af",
    "real_rank_zero",
)


@dataclass
class ConsistencyResult:
    """Comparison of a finite truncation against the symbolic table.

    Discrepancies are disagreements on size-independent fields and mean a
    real bug.  Expected divergences are disagreements on fields that
    legitimately change between finite and infinite parameters."""

    discrepancies: list[str]
    expected_divergences: list[str]

    @property
    def consistent(self) -> bool:
        return not self.discrepancies


def consistency_check(
    desc: FamilyDescriptor, n: int, max_vertices: int = DEFAULT_GENERATION_CAP
) -> ConsistencyResult:
    """Classify the size-n truncation concretely and compare it with the
    symbolic answer for the descriptor."""
    concrete = classify(generate_finite(FamilyDescriptor(desc.kind, n), max_vertices))
    symbolic = symbolic_classify(desc)
    discrepancies = []
    divergences = []
    for name in STRICT_FIELDS:
        a, b = getattr(concrete, name), getattr(symbolic, name)
        if a != b:
            discrepancies.append(f"{name}: truncation says {a}, table says {b}")
    for name in SIZE_SENSITIVE_FIELDS:
        a, b = getattr(concrete, name), getattr(symbolic, name)
        if a != b:
            divergences.append(
                f"{name}: truncation at n={n} says {_fmt(a)}, "
                f"{format_param(desc.param)} says {_fmt(b)}"
            )
    return ConsistencyResult(discrepancies, divergences)


def _fmt(value) -> str:
    return value.value if isinstance(value, Enum) else str(value).lower()

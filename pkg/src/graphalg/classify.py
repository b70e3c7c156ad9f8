"""Structure verdicts for the graph C*-algebra and the Leavitt path
algebra of a graph, decided purely from graph invariants.

Decision rules:
  C*(E) simple      iff Condition (L) and cofinal
  C*(E) prime       iff Condition (L) and downward directed
  C*(E) primitive   iff prime and countable separation
  L_K(E) prime      iff downward directed
  L_K(E) primitive  iff C*(E) primitive (independent of the field)
  AF                yes when acyclic, otherwise undecided here
  real rank zero    yes when Condition (K) holds, otherwise undecided
  all ideals gauge invariant iff Condition (K)

Every report passes an implication audit before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .cycles import (
    condition_k_witness,
    find_cycle_without_exit,
    is_acyclic,
)
from .graph import Graph
from .ideals import saturate
from .reachability import (
    cofinality_witness,
    descendants,
    downward_directed_witness,
    has_csp,
    is_cofinal,
    is_downward_directed,
    sccs,
)


class TriState(Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass
class PropertyReport:
    condition_l: bool
    condition_k: bool
    downward_directed: bool
    cofinal: bool
    csp: bool
    acyclic: bool
    cstar_simple: bool
    cstar_prime: bool
    cstar_primitive: bool
    lpa_prime: bool
    lpa_primitive: bool
    af: TriState
    real_rank_zero: TriState
    all_ideals_gauge_invariant: bool
    witnesses: dict[str, str] = field(default_factory=dict)


BOOLEAN_FIELDS = (
    "condition_l",
    "condition_k",
    "downward_directed",
    "cofinal",
    "csp",
    "acyclic",
    "cstar_simple",
    "cstar_prime",
    "cstar_primitive",
    "lpa_prime",
    "lpa_primitive",
    "all_ideals_gauge_invariant",
)

TRISTATE_FIELDS = ("af", "real_rank_zero")


def build_report(
    *,
    condition_l: bool,
    condition_k: bool,
    downward_directed: bool,
    cofinal: bool,
    csp: bool,
    acyclic: bool,
    witnesses: dict[str, str],
) -> PropertyReport:
    """Derive the algebra verdicts from the six base graph conditions.

    Shared by the concrete classifier and the symbolic family tables so
    both use exactly the same formulas.
    """
    cstar_simple = condition_l and cofinal
    cstar_prime = condition_l and downward_directed
    cstar_primitive = cstar_prime and csp
    lpa_prime = downward_directed

    notes = dict(witnesses)
    if not cstar_simple:
        missing = []
        if not condition_l:
            missing.append("Condition (L)")
        if not cofinal:
            missing.append("cofinality")
        notes.setdefault("cstar_simple", "missing " + " and ".join(missing))
    if not cstar_prime:
        missing = []
        if not condition_l:
            missing.append("Condition (L)")
        if not downward_directed:
            missing.append("downward directedness")
        notes.setdefault("cstar_prime", "missing " + " and ".join(missing))
    if not cstar_primitive:
        missing = []
        if not cstar_prime:
            missing.append("primeness of the C*-algebra")
        if not csp:
            missing.append("countable separation")
        notes.setdefault("cstar_primitive", "missing " + " and ".join(missing))
        notes.setdefault("lpa_primitive", notes["cstar_primitive"])
    if not lpa_prime:
        notes.setdefault("lpa_prime", "not downward directed")
    if not acyclic:
        notes.setdefault("af", "graph has a cycle, so acyclicity gives no verdict")
        if not condition_k:
            notes.setdefault(
                "real_rank_zero", "Condition (K) fails, so no verdict from it"
            )

    report = PropertyReport(
        condition_l=condition_l,
        condition_k=condition_k,
        downward_directed=downward_directed,
        cofinal=cofinal,
        csp=csp,
        acyclic=acyclic,
        cstar_simple=cstar_simple,
        cstar_prime=cstar_prime,
        cstar_primitive=cstar_primitive,
        lpa_prime=lpa_prime,
        lpa_primitive=cstar_primitive,
        af=TriState.YES if acyclic else TriState.UNKNOWN,
        real_rank_zero=TriState.YES if condition_k else TriState.UNKNOWN,
        all_ideals_gauge_invariant=condition_k,
        witnesses=notes,
    )
    violations = implication_audit(report)
    if violations:
        raise RuntimeError(f"internal classification inconsistency: {violations}")
    return report


def classify(g: Graph) -> PropertyReport:
    """Classify one finitely presented graph, with failure witnesses."""
    witnesses: dict[str, str] = {}

    exitless = find_cycle_without_exit(g)
    condition_l = exitless is None
    if exitless is not None:
        witnesses["condition_l"] = f"cycle without exit: {exitless}"

    singly_cycled = condition_k_witness(g)
    condition_k = singly_cycled is None
    if singly_cycled is not None:
        witnesses["condition_k"] = (
            f"vertex {singly_cycled.label} is the base of exactly one simple cycle"
        )

    dd_pair = downward_directed_witness(g)
    downward_directed = dd_pair is None
    if dd_pair is not None:
        witnesses["downward_directed"] = (
            f"vertices {dd_pair[0].label} and {dd_pair[1].label} have no common descendant"
        )

    cof = cofinality_witness(g)
    cofinal = cof is None
    if cof is not None:
        what = (
            "singular vertex"
            if cof.kind == "singular"
            else "the cycle-bearing component of"
        )
        witnesses["cofinal"] = (
            f"vertex {cof.source.label} does not reach {what} {cof.target.label}"
        )

    acyclic = is_acyclic(g)
    if not acyclic:
        cyclic = next(c for c in sccs(g) if c.has_cycle)
        labels = ",".join(g.vertex(i).label for i in cyclic.indices)
        witnesses.setdefault("acyclic", f"cycle inside the component {{{labels}}}")

    csp = has_csp(g)
    witnesses["csp"] = "the vertex set itself is a countable separating family"

    return build_report(
        condition_l=condition_l,
        condition_k=condition_k,
        downward_directed=downward_directed,
        cofinal=cofinal,
        csp=csp,
        acyclic=acyclic,
        witnesses=witnesses,
    )


def implication_audit(report: PropertyReport) -> list[str]:
    """Consistency gate over a report; an empty list means coherent."""
    violations = []
    if report.cstar_simple and not report.cstar_primitive:
        violations.append("simple C*-algebra must be primitive")
    if report.cstar_primitive and not report.cstar_prime:
        violations.append("primitive C*-algebra must be prime")
    if report.cstar_prime and not report.lpa_prime:
        violations.append("prime C*-algebra forces a prime Leavitt path algebra")
    if report.lpa_primitive != report.cstar_primitive:
        violations.append("primitivity must agree between the two algebras")
    if report.cofinal and not report.downward_directed:
        violations.append("cofinal graphs are downward directed")
    return violations


def check_saturation_characterizations(g: Graph) -> bool:
    """Cross-check the reachability decisions against their saturation
    characterizations.

    Cofinality must match 'the saturation of every descendant cone is the
    whole vertex set', and downward directedness must match 'saturations
    of any two descendant cones intersect'.  (The countable-separation
    analogue is trivially satisfied at finite presentation on both
    routes, so there is nothing to compare.)
    """
    n = g.vertex_count
    full = (1 << n) - 1
    saturations = [saturate(g, descendants(g, i))[0].mask for i in range(n)]
    cofinal_by_saturation = all(s == full for s in saturations)
    dd_by_saturation = all(
        saturations[i] & saturations[j] != 0 for i in range(n) for j in range(i, n)
    )
    return (
        is_cofinal(g) == cofinal_by_saturation
        and is_downward_directed(g) == dd_by_saturation
    )

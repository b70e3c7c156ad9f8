"""Plain-text graph documents and report rendering.

Graph document grammar, one directive per line:

    vertex <label>
    edge <source> <target>          single edge
    edge <source> <target> x<n>     n parallel edges, n >= 1
    edge <source> <target> xinf     countably many parallel edges

Blank lines and lines starting with '#' are ignored.  Labels are
whitespace-free tokens.  Serialization writes vertices in insertion
order and edge groups sorted by endpoint indices, so parsing a
serialized document reproduces the graph byte for byte.
"""

from __future__ import annotations

from .classify import BOOLEAN_FIELDS, TRISTATE_FIELDS, PropertyReport, TriState
from .graph import (
    OMEGA,
    DuplicateLabelError,
    Graph,
    GraphError,
    Multiplicity,
    UnknownVertexError,
    is_omega,
)
from .ideals import (
    AdmissiblePair,
    admissible_pairs,
    breaking_vertices,
    enumerate_saturated_hereditary,
    maximal_proper_pairs,
    pair_leq,
)
from .reachability import VertexSet


class ParseError(ValueError):
    def __init__(self, line_number: int, message: str) -> None:
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


def parse_graph(text: str) -> Graph:
    """Parse a graph document; errors carry the offending line number."""
    g = Graph()
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        keyword = parts[0]
        if keyword == "vertex":
            if len(parts) != 2:
                raise ParseError(line_number, "expected: vertex <label>")
            try:
                g.add_vertex(parts[1])
            except (DuplicateLabelError, GraphError) as exc:
                raise ParseError(line_number, str(exc)) from None
        elif keyword == "edge":
            if len(parts) not in (3, 4):
                raise ParseError(
                    line_number, "expected: edge <source> <target> [x<n>|xinf]"
                )
            multiplicity: Multiplicity = 1
            if len(parts) == 4:
                multiplicity = _parse_multiplicity(line_number, parts[3])
            try:
                g.add_edge(parts[1], parts[2], multiplicity)
            except UnknownVertexError as exc:
                raise ParseError(line_number, str(exc)) from None
        else:
            raise ParseError(line_number, f"unknown directive {keyword!r}")
    return g


def _parse_multiplicity(line_number: int, token: str) -> Multiplicity:
    if token == "xinf":
        return OMEGA
    if token.startswith("x") and token[1:].isdigit():
        value = int(token[1:])
        if value == 0:
            raise ParseError(line_number, "zero multiplicity is not an edge")
        return value
    raise ParseError(line_number, f"bad multiplicity token {token!r}")


def serialize_graph(g: Graph) -> str:
    lines = [f"vertex {v.label}" for v in g.vertices]
    for grp in g.edge_groups():
        suffix = ""
        if is_omega(grp.multiplicity):
            suffix = " xinf"
        elif grp.multiplicity != 1:
            suffix = f" x{grp.multiplicity}"
        lines.append(f"edge {grp.source.label} {grp.target.label}{suffix}")
    return "\n".join(lines) + "\n"


def _token(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, TriState):
        return value.value
    return str(value)


def render_report(
    report: PropertyReport,
    subject: list[tuple[str, str]],
    extra: list[tuple[str, str]] | None = None,
) -> str:
    """Stable key-value report document with a human summary appended as
    comment lines."""
    lines = ["format 1"]
    for key, value in subject:
        lines.append(f"{key} {value}")
    for name in BOOLEAN_FIELDS:
        lines.append(f"{name} {_token(getattr(report, name))}")
    for name in TRISTATE_FIELDS:
        lines.append(f"{name} {_token(getattr(report, name))}")
    for key, value in extra or []:
        lines.append(f"{key} {value}")
    for name in sorted(report.witnesses):
        lines.append(f"witness {name} {report.witnesses[name]}")
    lines.append("#")
    lines.append("# summary")
    lines.append("# property     L_K(E)    C*(E)")
    lines.append(
        f"# simple       {_token(report.cstar_simple):<9} {_token(report.cstar_simple)}"
    )
    lines.append(
        f"# prime        {_token(report.lpa_prime):<9} {_token(report.cstar_prime)}"
    )
    lines.append(
        f"# primitive    {_token(report.lpa_primitive):<9} {_token(report.cstar_primitive)}"
    )
    return "\n".join(lines) + "\n"


def format_vertex_set(vs: VertexSet) -> str:
    return "{" + ",".join(vs.labels()) + "}"


def format_pair(pair: AdmissiblePair) -> str:
    return f"({format_vertex_set(pair.h)},{format_vertex_set(pair.s)})"


def render_lattice(g: Graph, max_vertices: int = 20) -> str:
    """List the saturated hereditary sets, their breaking vertices, all
    admissible pairs, and the maximal proper pairs."""
    sets = enumerate_saturated_hereditary(g, max_vertices)
    lines = [f"saturated_hereditary {len(sets)}"]
    for vs in sets:
        lines.append(
            f"set {format_vertex_set(vs)} breaking "
            f"{format_vertex_set(breaking_vertices(g, vs))}"
        )
    pairs = admissible_pairs(g, max_vertices)
    lines.append(f"admissible_pairs {len(pairs)}")
    for pair in pairs:
        lines.append(f"pair {format_pair(pair)}")
    maximal = maximal_proper_pairs(g, max_vertices)
    lines.append(f"maximal_proper {len(maximal)}")
    for pair in maximal:
        lines.append(f"maximal {format_pair(pair)}")
    return "\n".join(lines) + "\n"


def render_lattice_dot(g: Graph, max_vertices: int = 20) -> str:
    """The admissible-pair order as a DOT digraph (covering edges only)."""
    pairs = admissible_pairs(g, max_vertices)

    def strictly_below(p: AdmissiblePair, q: AdmissiblePair) -> bool:
        return p != q and pair_leq(p, q)

    lines = ["digraph admissible_pairs {", "  rankdir=BT;"]
    for pair in pairs:
        lines.append(f'  "{format_pair(pair)}";')
    for p in pairs:
        for q in pairs:
            if strictly_below(p, q) and not any(
                strictly_below(p, r) and strictly_below(r, q) for r in pairs
            ):
                lines.append(f'  "{format_pair(p)}" -> "{format_pair(q)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"

"""graphalg: structure decisions for graph C*-algebras and Leavitt path
algebras, computed directly from directed-multigraph data."""

from .classify import (
    PropertyReport,
    TriState,
    build_report,
    check_saturation_characterizations,
    classify,
    implication_audit,
)
from .cycles import (
    Cycle,
    SimpleCycleCount,
    condition_k_witness,
    cycles_based_at,
    enumerate_simple_cycles,
    find_cycle_without_exit,
    is_acyclic,
    is_condition_k,
    is_condition_l,
    simple_cycle_count_at,
)
from .families import (
    Cardinal,
    Cofinality,
    ConsistencyResult,
    Family,
    FamilyDescriptor,
    UnsupportedFamilyError,
    consistency_check,
    generate_finite,
    maximal_ideal_cardinality,
    parse_param,
    symbolic_classify,
    truncation,
)
from .formats import (
    ParseError,
    parse_graph,
    render_lattice,
    render_lattice_dot,
    render_report,
    serialize_graph,
)
from .graph import (
    OMEGA,
    CapExceededError,
    DuplicateLabelError,
    EdgeGroup,
    Graph,
    GraphError,
    GraphMismatchError,
    Multiplicity,
    UnknownVertexError,
    VertexClass,
    VertexId,
    canonical_form,
    is_isomorphic,
    is_omega,
)
from .ideals import (
    AdmissiblePair,
    NotHereditaryError,
    NotSaturatedError,
    SaturationTrace,
    admissible_pairs,
    breaking_vertices,
    enumerate_saturated_hereditary,
    hereditary_closure,
    is_hereditary,
    is_saturated,
    maximal_proper_pairs,
    pair_leq,
    quotient_graph,
    restriction_graph,
    saturate,
)
from .reachability import (
    CofinalityFailure,
    Scc,
    VertexSet,
    ancestors,
    cofinality_witness,
    csp_witness,
    descendants,
    downward_directed_witness,
    has_csp,
    is_cofinal,
    is_downward_directed,
    reaches,
    sccs,
)

__version__ = "0.1.0"

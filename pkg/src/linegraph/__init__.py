"""Finite line graph toolkit: recognition, Krausz decompositions, line graph
relations, root graph reconstruction and Whitney lifting."""

from .catalog import (
    CatalogEntry,
    beineke_graphs,
    exceptional_graphs,
    k0_truncation,
    singular_graphs,
    star_forest,
    table1_pairs,
)
from .errors import (
    CapExceeded,
    InvalidStructure,
    LineGraphError,
    NotALineGraph,
    NotALineGraphIsomorphism,
    ParseError,
    SelfLoopError,
)
from .graph import (
    Graph,
    all_isomorphisms,
    connected_components,
    emit_edge_list,
    emit_graph6,
    find_induced_copy,
    induced_subgraph,
    is_clique,
    is_isomorphic,
    line_graph,
    parse_edge_list,
    parse_graph6,
)
from .krausz import (
    Decomposition,
    LineGraphRelation,
    Violation,
    canonical_relation,
    decomposition_of,
    enumerate_decompositions,
    is_singular,
    relation_of,
    restrict_relation,
    singular_components,
    validate_decomposition,
    validate_relation,
)
from .recognition import (
    ForbiddenWitness,
    forbidden_witness_all,
    is_line_graph,
    is_line_graph_beineke,
    is_line_graph_krausz,
)
from .rootgraph import (
    RootWitness,
    WhitneyResult,
    chromatic_number_exact,
    root_from_decomposition,
    root_from_relation,
    verify_roundtrip,
    whitney_lift,
)

__version__ = "0.1.0"

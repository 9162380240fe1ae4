"""Exact facet enumeration for adjacency polytopes of connected graphs.

The configuration of a connected graph G on vertices 1..N is the set of
signed edge vectors +-(e_{i-1} - e_{j-1}) in R^(N-1) (the vertex set of
the symmetric edge polytope).  Facets of this configuration correspond to
maximal bipartite subgraphs of G; this package enumerates them through
that correspondence, verifies them against a brute-force geometric oracle,
and exports the support data used by algebraic solvers.
"""

from .counting import (
    FacetCensus,
    count_sum_two,
    count_sum_zero,
    cycle_graph,
    even_cycle_facet_count,
    facet_census,
    joined_cycles_count,
    joined_cycles_graph,
)
from .errors import (
    AdjPolyError,
    DomainError,
    EdgeInTree,
    EmptyFace,
    EmptySubset,
    InternalInconsistency,
    NotAFacet,
    ParseError,
    TooLarge,
    ValidationError,
    ZeroNormal,
)
from .facets import (
    CycleConstraintSystem,
    FaceProperties,
    FacetClass,
    balancing_check,
    build_cycle_system,
    canonical_facet_pair,
    enumerate_all_facets,
    enumerate_facet_classes,
    enumerate_sign_vectors,
    face_properties,
    facet_from_sign_vector,
    is_simplicial,
)
from .geometry import (
    Facet,
    InnerNormal,
    PointConfiguration,
    affine_dimension,
    brute_force_facets,
    configuration_from_graph,
    incidence_matrix,
    verify_facet,
)
from .graphs import (
    Bipartition,
    CycleVector,
    Graph,
    MaxBipartiteSubgraph,
    SpanningTree,
    cyclomatic_number,
    enumerate_maximal_bipartite_subgraphs,
    fundamental_cycle,
    has_even_cycle,
    parse_edge_list,
    spanning_tree,
)
from .kuramoto import (
    HomogenizationData,
    SupportSet,
    face_system_support,
    facet_subsystem_support,
    homogenization_data,
    homotopy_lift,
    unmixed_support,
)

__version__ = "0.1.0"

"""domlab: exact total / Grundy total domination invariants, design-theoretic
extremal constructions, and desk-scale exhaustive graph searches."""

from .designs import (
    Design,
    FieldTable,
    LatinSquare,
    OrthogonalArray,
    affine_plane_from_mols,
    are_orthogonal,
    field,
    mols_family,
    mols_to_oa,
    oa_to_mols,
    projective_from_affine,
    validate_bibd,
    validate_oa,
)
from .domination import (
    DominationCertificate,
    grundy_bipartite,
    grundy_oracle,
    grundy_total_domination_number,
    is_legal_sequence,
    is_total_dominating_set,
    total_domination_number,
)
from .enumeration import SearchReport, SearchSpec, enumerate_unlabeled, run_search, stream_graph6
from .extremal import (
    ExtractionContext,
    classify_equal,
    complete_multipartite_parts,
    figure1_graph,
    graph_from_oa,
    knn_minus_matching,
    oa_from_graph,
    recognize_knn_minus_matching,
    verify_pair_domination,
)
from .graph import (
    Bipartition,
    Graph,
    TwinPartition,
    bipartition,
    canonical_form,
    degree_sequence,
    false_twin_partition,
    has_isolated_vertex,
    is_chordal,
    is_connected,
    parse_graph6,
    quotient_false_twins,
    simplicial_vertices,
    to_graph6,
)
from .hypergraph import (
    Hypergraph,
    covering_number,
    grundy_covering_number,
    grundy_transversal_number,
    incidence_graph,
    open_neighborhood_hypergraph,
)

__version__ = "0.1.0"

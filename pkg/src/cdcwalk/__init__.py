"""Walk matrices, main eigenvalues and canonical double covers of small graphs."""

from .canon import TfWitness, certificate, cdc_certificate, isomorphic, tf_isomorphism, verify_tf
from .census import CensusReport, run_census
from .cover import CdcGraph, cdc
from .errors import (
    CdcWalkError,
    ConsistencyError,
    DimensionError,
    MalformedGraph6,
    NumericFailure,
    RankDeficient,
    ToleranceFailure,
    UnsupportedSize,
)
from .exact import column_space_equal, int_rank, solve_rational
from .graph import (
    Bipartition,
    Graph,
    add_isolated,
    bipartition,
    components,
    disjoint_union,
    parse_graph6,
    read_graph6_file,
    write_graph6,
)
from .hierarchy import RelationProfile, check_question_cdc_implies_comain, implication_violations, relation_profile
from .spectral import MainDecomposition, Spectrum, comain, main_decomposition, same_principal_main_vectors, spectrum, walk_count_total
from .walks import (
    main_eigenspace_equal,
    main_polynomial,
    related_walk_matrices,
    same_walk_matrices_all_k,
    same_walk_matrix,
    walk_matrix,
    walk_matrix_k,
)

__version__ = "0.1.0"

"""Geodesic cup-stacking games on finite connected graphs.

Every vertex starts with one cup; a move carries a whole stack of r cups to
an occupied vertex at hop distance exactly r.  This package provides the
game engine and verifier, constructive stacking strategies, exhaustive
searches with resource budgets, non-stackability certificates, graph family
generators, and a command line front end.
"""

from ._backend import backend_name, compiled_available
from .engine import (
    GameState,
    Move,
    MoveSequence,
    Verdict,
    apply_move,
    initial_state,
    legal_moves,
    verify_sequence,
)
from .graphs import (
    Bipartition,
    DistanceMatrix,
    Graph,
    PathPartition,
    all_pairs_distances,
    automorphism_orbits,
    bipartition,
    canonical_form,
    cartesian_product,
    enumerate_connected_graphs,
    find_hamilton_path,
    graph_power,
    is_tree,
    path_partition,
    read_graph,
    subdivide,
    to_dot,
    tree_spread_and_diameter,
    write_graph,
)
from .solvers import (
    Chunk,
    Chunking,
    canonical_hamilton_path,
    check_tree_power_hypotheses,
    chunk_partition,
    min_power_for_stackability,
    solve_bipartite_paths,
    solve_power,
    solve_via_hamilton,
    stack_chunked_path,
    stack_path,
    tree_path_partition,
)
from .search import (
    MinWeightResult,
    StackabilityReport,
    TargetResult,
    WeightTable,
    census_stackable_nonhamiltonian,
    decide_stackable,
    decide_t_stackable,
    find_alternating_chain,
    min_weight,
    weight_table,
)
from .certificates import (
    IndepSetCertificate,
    PendantPairCertificate,
    StrongNonStackabilityProof,
    cactus_threshold,
    check_indep_certificate,
    check_pendant_certificate,
    classify_complete_bipartite,
    find_indep_certificate,
    prove_strongly_nonstackable,
    validate_certificate,
)
from . import families

__version__ = "0.1.0"

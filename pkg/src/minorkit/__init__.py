"""Graph minors on small graphs, with a checkable certificate behind every answer."""

from .graph import (
    EditStep,
    Graph,
    GraphError,
    GuardError,
    PreconditionError,
    all_graphs,
    apply_edit,
    apply_edits,
    bfs_layers,
    complete,
    complete_bipartite,
    cycle,
    find_subgraph,
    is_isomorphic,
    path,
    petersen,
    random_graph,
    wheel,
)
from .minors import (
    BranchSets,
    MinimalWitness,
    find_minor_model,
    has_minor,
    has_minor_oracle,
    minimize_minor_witness,
    model_to_edit_sequence,
    verify_model,
)
from .topological import (
    SubdivisionEmbedding,
    find_subdivision,
    minor_to_subdivision,
    subdivision_to_model,
    verify_subdivision,
)
from .connectivity import Fan, disjoint_paths, fan, is_fan, vertex_connectivity
from .planarity import (
    KuratowskiWitness,
    classify_branch_trees,
    is_planar,
    kuratowski_witness,
    planarity_oracle,
)
from .chromatic import (
    Coloring,
    chromatic_number,
    extract_clique_minor,
    extract_k3,
    extract_k4,
    hadwiger_scan,
    max_chromatic_layer,
    optimal_coloring,
)
from .formats import ParseError, emit_dot, parse_graph

__version__ = "0.1.0"

__all__ = [
    "BranchSets",
    "Coloring",
    "EditStep",
    "Fan",
    "Graph",
    "GraphError",
    "GuardError",
    "KuratowskiWitness",
    "MinimalWitness",
    "ParseError",
    "PreconditionError",
    "SubdivisionEmbedding",
    "all_graphs",
    "apply_edit",
    "apply_edits",
    "bfs_layers",
    "chromatic_number",
    "classify_branch_trees",
    "complete",
    "complete_bipartite",
    "cycle",
    "disjoint_paths",
    "emit_dot",
    "extract_clique_minor",
    "extract_k3",
    "extract_k4",
    "fan",
    "find_minor_model",
    "find_subdivision",
    "find_subgraph",
    "hadwiger_scan",
    "has_minor",
    "has_minor_oracle",
    "is_fan",
    "is_isomorphic",
    "is_planar",
    "kuratowski_witness",
    "max_chromatic_layer",
    "minimize_minor_witness",
    "minor_to_subdivision",
    "model_to_edit_sequence",
    "optimal_coloring",
    "parse_graph",
    "path",
    "petersen",
    "planarity_oracle",
    "random_graph",
    "subdivision_to_model",
    "verify_model",
    "verify_subdivision",
    "vertex_connectivity",
    "wheel",
]

"""Graphs whose squares are complete multipartite, and certificates that
their squares separate list chromatic number from chromatic number.

The pipeline: orthogonal Latin squares of prime order n give a graph G
on 2n^2 - n vertices whose square is the complete multipartite graph
with 2n - 1 parts of size n.  An exact solver pins the chromatic number
of that square at 2n - 1, and an exhaustive refutation of a structured
list assignment shows the list chromatic number is at least 3(n - 1) + 1,
so the gap is at least n - 1.
"""

from .errors import CapacityError, SearchBudgetExceeded
from .latin import (
    LatinSquare,
    MolsFamily,
    are_orthogonal,
    build_latin,
    build_mols_family,
    is_latin,
    is_prime,
    require_prime,
)
from .graphcore import (
    ExpandedGraph,
    PartitionWitness,
    SimpleGraph,
    complete_multipartite,
    induced_subgraph,
    is_clique,
    is_complete_multipartite,
    is_independent_set,
    square,
    square_oracle,
    subdivision,
    total_graph,
)
from .construction import (
    ConstructedGraph,
    VertexLabel,
    construct_counterexample,
    neighbors_of_w,
)
from .verification import (
    LemmaReport,
    check_claim_congruence,
    check_independence,
    check_lemma_nv,
    check_lemma_nw,
    check_pq_adjacency,
    check_square_structure,
    run_all_checks,
)
from .coloring import (
    GapCertificate,
    ListAssignment,
    ListColoringResult,
    SearchAttestation,
    VetrikAssignment,
    certify_gap,
    chromatic_number_exact,
    greedy_clique,
    greedy_coloring,
    is_list_colorable,
    multipartite_list_colorable,
    validate_coloring,
    vetrik_assignment,
    vetrik_lower_bound,
    vetrik_on_witness,
)
from . import serialize

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "SearchBudgetExceeded",
    "LatinSquare",
    "MolsFamily",
    "are_orthogonal",
    "build_latin",
    "build_mols_family",
    "is_latin",
    "is_prime",
    "require_prime",
    "ExpandedGraph",
    "PartitionWitness",
    "SimpleGraph",
    "complete_multipartite",
    "induced_subgraph",
    "is_clique",
    "is_complete_multipartite",
    "is_independent_set",
    "square",
    "square_oracle",
    "subdivision",
    "total_graph",
    "ConstructedGraph",
    "VertexLabel",
    "construct_counterexample",
    "neighbors_of_w",
    "LemmaReport",
    "check_claim_congruence",
    "check_independence",
    "check_lemma_nv",
    "check_lemma_nw",
    "check_pq_adjacency",
    "check_square_structure",
    "run_all_checks",
    "GapCertificate",
    "ListAssignment",
    "ListColoringResult",
    "SearchAttestation",
    "VetrikAssignment",
    "certify_gap",
    "chromatic_number_exact",
    "greedy_clique",
    "greedy_coloring",
    "is_list_colorable",
    "multipartite_list_colorable",
    "validate_coloring",
    "vetrik_assignment",
    "vetrik_lower_bound",
    "vetrik_on_witness",
    "serialize",
]

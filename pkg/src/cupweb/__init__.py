"""Exact calculus for two-row standard tableaux and cup diagrams.

The package enumerates standard tableaux of shape (n, n), builds the
directed tableau graph and its partial order, maps tableaux to cup
diagrams and to column matchings, resolves crossings into the noncrossing
basis, straightens arbitrary two-row fillings over the standard basis,
and assembles and verifies the exact integer change-of-basis matrix
between the two pictures.
"""

from .actions import (
    DiagramVector,
    TabloidVector,
    TwoRowTableau,
    act_matching,
    act_polytabloid,
    act_web,
    canonicalize_columns,
    column_matching_vector,
    cup_polytabloid,
    garnir_straighten,
    shifted_product,
    to_web_basis,
)
from .diagrams import (
    Crossing,
    CupDiagram,
    Matching,
    column_matching,
    crossings,
    cup_of_tableau,
    is_noncrossing,
    render_ascii,
    render_tikz,
    swap_dots,
    tableau_of_cup,
)
from .errors import BudgetExceededError, DominanceError, SizeLimitError
from .resolution import (
    Move,
    MoveKind,
    ResolutionGraph,
    build_resolution_graph,
    check_witness,
    resolution_graph_dot,
    resolve_full,
    resolve_step,
    witness_path,
)
from .transition import (
    TransitionMatrix,
    VerificationReport,
    inverse_matrix,
    order_conjecture_report,
    transition_matrix,
    verify_positivity,
    verify_psi,
    verify_unitriangular,
)
from .young import (
    DEFAULT_MAX_N,
    EntryCase,
    Permutation,
    StandardTableau,
    TableauGraph,
    build_tableau_graph,
    classify,
    coxeter_length,
    enumerate_syt,
    first_row_dominates,
    leq,
    paths_between,
    perm_between,
    rank,
    swap_entries,
    t0,
)

__all__ = [
    "BudgetExceededError",
    "Crossing",
    "CupDiagram",
    "DEFAULT_MAX_N",
    "DiagramVector",
    "DominanceError",
    "EntryCase",
    "Matching",
    "Move",
    "MoveKind",
    "Permutation",
    "ResolutionGraph",
    "SizeLimitError",
    "StandardTableau",
    "TableauGraph",
    "TabloidVector",
    "TransitionMatrix",
    "TwoRowTableau",
    "VerificationReport",
    "act_matching",
    "act_polytabloid",
    "act_web",
    "build_resolution_graph",
    "build_tableau_graph",
    "canonicalize_columns",
    "check_witness",
    "classify",
    "column_matching",
    "column_matching_vector",
    "coxeter_length",
    "crossings",
    "cup_of_tableau",
    "cup_polytabloid",
    "enumerate_syt",
    "first_row_dominates",
    "garnir_straighten",
    "inverse_matrix",
    "is_noncrossing",
    "leq",
    "order_conjecture_report",
    "paths_between",
    "perm_between",
    "rank",
    "render_ascii",
    "render_tikz",
    "resolution_graph_dot",
    "resolve_full",
    "resolve_step",
    "shifted_product",
    "swap_dots",
    "swap_entries",
    "t0",
    "tableau_of_cup",
    "to_web_basis",
    "transition_matrix",
    "verify_positivity",
    "verify_psi",
    "verify_unitriangular",
    "witness_path",
]

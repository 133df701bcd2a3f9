"""Deciding k-recoloring reachability between proper graph colorings.

The generic engine runs a dynamic program over nice tree decompositions
whose states are contracted solution graphs; a structural fast path
answers (k-2)-connected chordal instances in polynomial time; a
brute-force oracle over the full solution graph backs both up on small
inputs.
"""

from .errors import (
    BudgetExceededError,
    Check,
    InputError,
    PreconditionError,
    RecolorError,
    SizeCapError,
)
from .graph import (
    ColorListAssignment,
    Coloring,
    Graph,
    TerminalGraph,
    colorings_adjacent,
    is_proper_coloring,
    restrict_coloring,
)
from .structure import (
    greedy_chordal_coloring,
    is_chordal,
    is_l_connected,
    max_clique_chordal,
    perfect_elimination_ordering,
    reduce_low_degree,
)
from .treedecomp import (
    NiceTreeDecomposition,
    build_chordal_nice_td,
    build_generic_nice_td,
    classify_next_operation,
    td_size_budget,
    td_width,
    validate_nice_td,
)
from .csg import (
    CSG,
    NodeBudget,
    csg_forget,
    csg_introduce,
    csg_join,
    csg_leaf,
    csg_over_decomposition,
    csg_reachable,
    evaluate_decomposition,
)
from .oracle import (
    SolutionGraph,
    contract_solution_graph,
    enumerate_solution_graph,
    label_components,
    labeled_isomorphic,
    oracle_reachable,
    verify_csg_certificate,
)
from .essential import (
    EssentialInfo,
    essential_forget,
    essential_introduce,
    essential_join,
    essential_leaf,
    fast_reachability,
    fast_reachability_report,
    is_color_complete,
    path_node_weights,
    path_weight,
    satisfies_inp_forest,
)
from .generators import (
    gen_interval_colorings,
    gen_interval_family,
    gen_quadratic_family,
    gen_random_connected_chordal,
    gen_star_blowup,
    star_gadget,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CSG",
    "Check",
    "ColorListAssignment",
    "Coloring",
    "EssentialInfo",
    "Graph",
    "InputError",
    "NiceTreeDecomposition",
    "NodeBudget",
    "PreconditionError",
    "RecolorError",
    "SizeCapError",
    "SolutionGraph",
    "TerminalGraph",
    "build_chordal_nice_td",
    "build_generic_nice_td",
    "classify_next_operation",
    "colorings_adjacent",
    "contract_solution_graph",
    "csg_forget",
    "csg_introduce",
    "csg_join",
    "csg_leaf",
    "csg_over_decomposition",
    "csg_reachable",
    "enumerate_solution_graph",
    "essential_forget",
    "essential_introduce",
    "essential_join",
    "essential_leaf",
    "evaluate_decomposition",
    "fast_reachability",
    "fast_reachability_report",
    "gen_interval_colorings",
    "gen_interval_family",
    "gen_quadratic_family",
    "gen_random_connected_chordal",
    "gen_star_blowup",
    "greedy_chordal_coloring",
    "is_chordal",
    "is_color_complete",
    "is_l_connected",
    "is_proper_coloring",
    "label_components",
    "labeled_isomorphic",
    "max_clique_chordal",
    "oracle_reachable",
    "path_node_weights",
    "path_weight",
    "perfect_elimination_ordering",
    "reduce_low_degree",
    "restrict_coloring",
    "satisfies_inp_forest",
    "star_gadget",
    "td_size_budget",
    "td_width",
    "validate_nice_td",
    "verify_csg_certificate",
]

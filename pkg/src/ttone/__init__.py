"""t-tone graph coloring: budgeted colorers, an exact solver and a verifier."""

from .bounds import (
    BoundReport,
    ary_tree_lower_bound,
    budget_2tone_bipartite,
    budget_2tone_chordal,
    budget_2tone_general,
    budget_ttone_degenerate,
    budget_ttone_general,
    color_2tone_bipartite,
    color_2tone_chordal,
    color_2tone_greedy,
    color_tree_ttone,
    color_ttone_degenerate,
    color_ttone_greedy,
    tree_tau2,
)
from .coloring import (
    Label,
    PartialToneColoring,
    ToneParams,
    Violation,
    candidate_labels,
    extend,
    forbids,
    free_colors,
    label_colors,
    make_label,
    obstructions,
    parse_label,
    restrict_tones,
    valid_labels,
    verify_coloring,
)
from .cubic import color_cubic_8
from .exact import exact_tau, find_coloring, heawood_tau2
from .graph import Graph, VertexOrdering, build_graph

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "Graph",
    "Label",
    "PartialToneColoring",
    "ToneParams",
    "VertexOrdering",
    "Violation",
    "ary_tree_lower_bound",
    "budget_2tone_bipartite",
    "budget_2tone_chordal",
    "budget_2tone_general",
    "budget_ttone_degenerate",
    "budget_ttone_general",
    "build_graph",
    "candidate_labels",
    "color_2tone_bipartite",
    "color_2tone_chordal",
    "color_2tone_greedy",
    "color_cubic_8",
    "color_tree_ttone",
    "color_ttone_degenerate",
    "color_ttone_greedy",
    "exact_tau",
    "extend",
    "find_coloring",
    "forbids",
    "free_colors",
    "heawood_tau2",
    "label_colors",
    "make_label",
    "obstructions",
    "parse_label",
    "restrict_tones",
    "tree_tau2",
    "valid_labels",
    "verify_coloring",
]

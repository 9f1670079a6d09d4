"""Weisfeiler-Leman dimension of labeled graph motif parameters.

Homomorphism counting over tree decompositions, per-colour count tables,
subgraph and induced-subgraph parameters in the homomorphism basis, and CFI
counterexample pairs.
"""

from .canon import automorphism_count, canonical_form, is_isomorphic
from .cfi import ccfi, ccfi_twist, counterexample_pair, find_weak_oddomorphism, gf2_hom_count
from .errors import GuardExceeded, WLMotifError
from .graph import (
    LabeledGraph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    el_transform,
    empty_graph,
    load_graph,
    parse_graph,
    path_graph,
    star_graph,
)
from .homcount import count_homs, count_homs_bruteforce, count_homs_td, evaluate_theta
from .motif import (
    MotifParameter,
    evaluate_parameter,
    graphlet_parameter,
    ind_to_hom,
    independent_set_parameter,
    sub_to_hom,
)
from .spasm import enumerate_spasm
from .treewidth import exact_treewidth, tree_decomposition
from .wl import ColorRegistry, stable_coloring, wl_equivalent
from .wldim import (
    hereditary_treewidth,
    wl_dimension_graphlet,
    wl_dimension_ind,
    wl_dimension_parameter,
    wl_dimension_sub,
)

__version__ = "0.1.0"

__all__ = [
    "ColorRegistry",
    "GuardExceeded",
    "LabeledGraph",
    "MotifParameter",
    "WLMotifError",
    "automorphism_count",
    "canonical_form",
    "ccfi",
    "ccfi_twist",
    "complete_graph",
    "count_homs",
    "count_homs_bruteforce",
    "count_homs_td",
    "counterexample_pair",
    "cycle_graph",
    "disjoint_union",
    "el_transform",
    "empty_graph",
    "enumerate_spasm",
    "evaluate_parameter",
    "evaluate_theta",
    "exact_treewidth",
    "find_weak_oddomorphism",
    "gf2_hom_count",
    "graphlet_parameter",
    "hereditary_treewidth",
    "ind_to_hom",
    "independent_set_parameter",
    "is_isomorphic",
    "load_graph",
    "parse_graph",
    "path_graph",
    "stable_coloring",
    "star_graph",
    "sub_to_hom",
    "tree_decomposition",
    "wl_dimension_graphlet",
    "wl_dimension_ind",
    "wl_dimension_parameter",
    "wl_dimension_sub",
    "wl_equivalent",
]

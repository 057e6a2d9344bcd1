"""DP-coloring toolkit for squares of subcubic graphs.

Thin Python veneer over the C++ core: graph construction, squares, exact
maximum average degree, DP-colorability checks, reducible-configuration
detection, discharging, and the named reducibility lemmas.
"""

from ._core import (  # noqa: F401
    BudgetError,
    Graph,
    InputError,
    all_lemma_ids,
    audit_theorem,
    build_graph,
    chromatic_number,
    detect_reducible,
    discharge_min,
    dp_chromatic,
    enumerate_subcubic,
    generate,
    girth,
    girth_mad_bound,
    is_connected,
    is_dp_k_colorable,
    is_isomorphic,
    is_subcubic,
    mad,
    max_clique,
    random_subcubic,
    square,
    verify_lemma,
)

__all__ = [
    "BudgetError",
    "Graph",
    "InputError",
    "all_lemma_ids",
    "audit_theorem",
    "build_graph",
    "chromatic_number",
    "detect_reducible",
    "discharge_min",
    "dp_chromatic",
    "enumerate_subcubic",
    "generate",
    "girth",
    "girth_mad_bound",
    "is_connected",
    "is_dp_k_colorable",
    "is_isomorphic",
    "is_subcubic",
    "mad",
    "max_clique",
    "random_subcubic",
    "square",
    "verify_lemma",
]

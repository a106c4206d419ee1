"""Multi-sweep graph searches (LexBFS+, LexDFS+, BFS+), cycle detection and ordering checks."""

from ._lexcycle import (
    BudgetExhausted,
    Graph,
    GraphError,
    ParseError,
    asteroidal_number,
    check,
    cobipartite,
    detect_cycle,
    domino,
    fixture,
    interval,
    iterate_to_fixpoint,
    ladder,
    lex_cycle,
    permutation_graph,
    plus_sweep,
    sort_cols_lex,
    sort_rows_lex,
    starjoin,
    sweep_sequence,
    transitive_orientation,
    tree,
    two_chain,
    unit_interval,
)

__all__ = [
    "BudgetExhausted",
    "Graph",
    "GraphError",
    "ParseError",
    "asteroidal_number",
    "check",
    "cobipartite",
    "detect_cycle",
    "domino",
    "fixture",
    "interval",
    "iterate_to_fixpoint",
    "ladder",
    "lex_cycle",
    "permutation_graph",
    "plus_sweep",
    "sort_cols_lex",
    "sort_rows_lex",
    "starjoin",
    "sweep_sequence",
    "transitive_orientation",
    "tree",
    "two_chain",
    "unit_interval",
]

"""Fractional packing and covering of a fixed directed pattern graph.

All exact values (LP optima, f(H,L), weights) travel as "p/q" strings next to
float renderings; pass weights as ints, floats, or "p/q" strings.
"""

from ._core import (
    Copy,
    CycleDecomposition,
    Digraph,
    NumericError,
    Pattern,
    ResourceLimitError,
    UndirectedGraph,
    ValidationError,
    acyclic_orientation,
    approximate_cover,
    b_param,
    check_complementary_slackness,
    check_ht,
    complete_graph,
    decompose_kn,
    directed_cycle,
    disc,
    enumerate_copies,
    exact_nu,
    exact_tau,
    f_of,
    f_search,
    gamma,
    greedy_packing,
    ht_bound,
    is_acyclic,
    is_h_free,
    is_one_way_bipartite,
    nu_star,
    orient_decomposition,
    packing_from_decomposition,
    parse_digraph,
    parse_pattern,
    perfect_matching,
    random_digraph,
    random_tournament,
    rotational_tournament,
    serialize_digraph,
    solve_fractional,
    to_digraph,
    transitive_tournament,
    undirected_kk_cover,
    validate_decomposition,
)

__all__ = [
    "Copy",
    "CycleDecomposition",
    "Digraph",
    "NumericError",
    "Pattern",
    "ResourceLimitError",
    "UndirectedGraph",
    "ValidationError",
    "acyclic_orientation",
    "approximate_cover",
    "b_param",
    "check_complementary_slackness",
    "check_ht",
    "complete_graph",
    "decompose_kn",
    "directed_cycle",
    "disc",
    "enumerate_copies",
    "exact_nu",
    "exact_tau",
    "f_of",
    "f_search",
    "gamma",
    "greedy_packing",
    "ht_bound",
    "is_acyclic",
    "is_h_free",
    "is_one_way_bipartite",
    "nu_star",
    "orient_decomposition",
    "packing_from_decomposition",
    "parse_digraph",
    "parse_pattern",
    "perfect_matching",
    "random_digraph",
    "random_tournament",
    "rotational_tournament",
    "serialize_digraph",
    "solve_fractional",
    "to_digraph",
    "transitive_tournament",
    "undirected_kk_cover",
    "validate_decomposition",
]

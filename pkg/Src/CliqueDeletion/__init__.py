"""
(Weighted) Clique-Free Vertex Deletion: oracle clique finding, the search
tree, the vertex-pruning kernel, brute-force deciders and the weighted
OR-cross-composition.
"""
from .bruteforce import DEFAULT_CFVD_GUARD, count_k_cliques_bruteforce, solve_cfvd_bruteforce, trivial_yes_shortcut
from .clique_finder import find_clique_via_oracle
from .composition import compose_wcfvd_or
from .encoding import encode_clique_query, exactly_k_sequential_counter
from .generators import gen_random_cfvd
from .graph import CfvdInstance, Graph, enumerate_target_cliques
from .kernel import kernelize_cfvd
from .search_tree import solve_cfvd_searchtree

__all__ = [
    "DEFAULT_CFVD_GUARD",
    "CfvdInstance",
    "Graph",
    "compose_wcfvd_or",
    "count_k_cliques_bruteforce",
    "encode_clique_query",
    "enumerate_target_cliques",
    "exactly_k_sequential_counter",
    "find_clique_via_oracle",
    "gen_random_cfvd",
    "kernelize_cfvd",
    "solve_cfvd_bruteforce",
    "solve_cfvd_searchtree",
    "trivial_yes_shortcut",
]

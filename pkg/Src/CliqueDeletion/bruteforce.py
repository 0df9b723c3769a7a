"""
Oracle-free deciders and counters, used to verify the oracle algorithms.
"""
import itertools
import logging
from typing import FrozenSet, List, Optional

from Src.Shared.errors import GuardExceededError

from .graph import CfvdInstance, Graph, enumerate_target_cliques

logger = logging.getLogger("workbench.cliquedel.bruteforce")

DEFAULT_CFVD_GUARD = 12


def _check_guard(graph: Graph, guard: int) -> None:
    if graph.vertex_count > guard:
        raise GuardExceededError(f"{graph.vertex_count} vertices exceed brute-force guard {guard}")


def count_k_cliques_bruteforce(graph: Graph, k: int, weighted: bool = False, guard: int = DEFAULT_CFVD_GUARD) -> int:
    """Number of cliques of size k (weighted: weight exactly k)."""
    _check_guard(graph, guard)
    return len(enumerate_target_cliques(graph, k, weighted))


def _hits_all(targets: List[FrozenSet[int]], deletion: FrozenSet[int]) -> bool:
    return all(clique & deletion for clique in targets)


def _solve_by_subsets(inst: CfvdInstance, targets: List[FrozenSet[int]]) -> bool:
    vertices = list(inst.graph.vertices())
    for size in range(len(vertices) + 1):
        found_affordable = False
        for subset in itertools.combinations(vertices, size):
            if inst.deletion_cost(subset) > inst.h:
                continue
            found_affordable = True
            if _hits_all(targets, frozenset(subset)):
                return True
        if not found_affordable:
            # weights are >= 1, so larger subsets cost more
            break
    return False


def _solve_by_branching(inst: CfvdInstance, targets: List[FrozenSet[int]]) -> bool:
    def search(unhit: List[FrozenSet[int]], budget: int, forbidden: FrozenSet[int]) -> bool:
        if not unhit:
            return True

        def choices(clique: FrozenSet[int]) -> List[int]:
            return sorted(
                v for v in clique
                if v not in forbidden and inst.deletion_cost([v]) <= budget
            )

        clique = min(unhit, key=lambda c: (len(choices(c)), sorted(c)))
        excluded = set(forbidden)
        for vertex in choices(clique):
            remaining = [c for c in unhit if vertex not in c]
            if search(remaining, budget - inst.deletion_cost([vertex]), frozenset(excluded)):
                return True
            excluded.add(vertex)
        return False

    return search(targets, inst.h, frozenset())


def solve_cfvd_bruteforce(
    inst: CfvdInstance,
    guard: int = DEFAULT_CFVD_GUARD,
    at_least: bool = False,
    method: str = "subsets",
) -> bool:
    """
    Exhaustively decide an instance.

    Args:
        inst: The instance
        guard: Maximum vertex count
        at_least: Target cliques of size (weight) at least k instead of exactly k
        method: "subsets" enumerates deletion sets by size; "branching"
            searches hitting sets of the enumerated target cliques, where
            branch i deletes the i-th vertex and forbids the earlier ones

    Raises:
        GuardExceededError: more vertices than the guard
    """
    _check_guard(inst.graph, guard)
    targets = enumerate_target_cliques(inst.graph, inst.k, inst.weighted, at_least)
    logger.debug(f"Brute force ({method}): {len(targets)} target cliques, budget {inst.h}")
    if method == "subsets":
        return _solve_by_subsets(inst, targets)
    if method == "branching":
        return _solve_by_branching(inst, targets)
    raise ValueError(f"unknown brute-force method {method!r}")


def trivial_yes_shortcut(inst: CfvdInstance, guard: int = DEFAULT_CFVD_GUARD) -> Optional[CfvdInstance]:
    """
    Return the trivial-yes instance when one deletion per target clique fits the budget.

    In weighted mode each clique is charged its lightest vertex.
    """
    _check_guard(inst.graph, guard)
    targets = enumerate_target_cliques(inst.graph, inst.k, inst.weighted)
    if inst.weighted:
        needed = sum(min(inst.graph.weight(v) for v in clique) for clique in targets)
    else:
        needed = len(targets)
    if inst.h >= needed:
        logger.info(f"Budget {inst.h} covers {len(targets)} target cliques: trivial yes")
        return CfvdInstance(Graph.build(0), inst.h, inst.k, inst.weighted)
    return None

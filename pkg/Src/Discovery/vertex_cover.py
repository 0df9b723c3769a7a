"""
Vertex cover helpers and the polynomial-time full kernel.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Set, Tuple

from Src.CliqueDeletion.graph import Graph
from Src.Shared.errors import GuardExceededError

logger = logging.getLogger("workbench.discovery.vertex_cover")


def is_vertex_cover(graph: Graph, cover: Iterable[int]) -> bool:
    members = set(cover)
    return all(u in members or v in members for u, v in graph.edges)


def is_minimal_vertex_cover(graph: Graph, cover: Iterable[int]) -> bool:
    """A cover is minimal iff each member has a neighbor outside it."""
    members = set(cover)
    if not is_vertex_cover(graph, members):
        return False
    return all(graph.neighbors(v) - members for v in members)


def minimal_vertex_covers_upto(graph: Graph, k: int, guard: int = 20) -> List[FrozenSet[int]]:
    """Every minimal vertex cover of size at most k, by exhaustive search."""
    if graph.vertex_count > guard:
        raise GuardExceededError(f"{graph.vertex_count} vertices exceed enumeration guard {guard}")
    covers = []
    for size in range(min(k, graph.vertex_count) + 1):
        for subset in itertools.combinations(graph.vertices(), size):
            if is_minimal_vertex_cover(graph, subset):
                covers.append(frozenset(subset))
    return covers


@dataclass(frozen=True)
class FullKernel:
    """
    Attributes:
        graph: G', the kernel graph
        forced: H, the high-degree vertices (original labels) in every cover of size <= k
        vertex_map: vertex_map[v - 1] is the original vertex of G'-vertex v, None for pendants
    """
    graph: Graph
    forced: FrozenSet[int]
    vertex_map: Tuple[Optional[int], ...]

    def original_to_kernel(self) -> dict:
        return {old: new for new, old in enumerate(self.vertex_map, start=1) if old is not None}


def vc_full_kernel(graph: Graph, k: int) -> Optional[FullKernel]:
    """
    Full kernel for vertex cover.

    Repeatedly force a vertex whose degree in G - H exceeds k - |H|. Then
    keep H and the non-isolated vertices of G - H, and give every forced
    vertex k+1 pendant neighbors so covers of size <= k of G' keep H.

    Returns:
        FullKernel, or None if no vertex cover of size <= k exists
    """
    forced: Set[int] = set()
    while len(forced) <= k:
        budget = k - len(forced)
        high = [
            v for v in graph.vertices()
            if v not in forced and len(graph.neighbors(v) - forced) > budget
        ]
        if not high:
            break
        forced.add(high[0])

    if len(forced) > k:
        logger.debug(f"More than {k} forced vertices: no small cover")
        return None
    residual_edges = [(u, v) for u, v in graph.edges if u not in forced and v not in forced]
    budget = k - len(forced)
    if len(residual_edges) > budget * budget:
        logger.debug(f"{len(residual_edges)} residual edges exceed {budget}^2: no small cover")
        return None

    keep = set(forced)
    for u, v in residual_edges:
        keep.update((u, v))
    core, mapping = graph.induced_subgraph(keep)

    label = {old: new for new, old in enumerate(mapping, start=1)}
    edges = list(core.edges)
    vertex_map: List[Optional[int]] = list(mapping)
    next_vertex = core.vertex_count + 1
    for h in sorted(forced):
        for _ in range(k + 1):
            edges.append((label[h], next_vertex))
            vertex_map.append(None)
            next_vertex += 1

    kernel_graph = Graph.build(next_vertex - 1, edges)
    logger.info(
        f"Full kernel: |H|={len(forced)}, {core.vertex_count} original vertices, "
        f"{kernel_graph.vertex_count - core.vertex_count} pendants"
    )
    return FullKernel(kernel_graph, frozenset(forced), tuple(vertex_map))

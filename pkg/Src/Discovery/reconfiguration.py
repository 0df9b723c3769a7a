"""
Vertex cover reconfiguration by breadth-first search.

Nodes are vertex covers of size at most k; two covers are adjacent when
they differ in one vertex. A shortest walk of m covers from S to T can be
padded with copies of T (zero-difference steps) to any length >= m.
"""
import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Optional, Tuple

from Src.CliqueDeletion.graph import Graph
from Src.Oracle.backends import OracleBackend
from Src.Oracle.ledger import OracleLedger
from Src.Shared.errors import GuardExceededError, InvalidInstanceError, MalformedInstanceError

from .incidence import GRAPH_EDGES, IncidenceSpec, discover_graph, make_trivial_cnf
from .vertex_cover import is_minimal_vertex_cover, is_vertex_cover

logger = logging.getLogger("workbench.discovery.reconfiguration")

DEFAULT_DVCR_GUARD = 20


@dataclass(frozen=True)
class ReconfSequence:
    """
    A shortest walk of covers plus `padding` implicit copies of its last cover.
    """
    covers: Tuple[FrozenSet[int], ...]
    padding: int = 0

    def __len__(self) -> int:
        return len(self.covers) + self.padding

    def is_valid_for(self, graph: Graph, source: Iterable[int], target: Iterable[int], k: int, length: int) -> bool:
        """Check every sequence invariant against a graph."""
        if not self.covers or len(self.covers) + self.padding != length:
            return False
        if self.covers[0] != frozenset(source) or self.covers[-1] != frozenset(target):
            return False
        for cover in self.covers:
            if len(cover) > k or not is_vertex_cover(graph, cover):
                return False
        return all(len(a ^ b) <= 1 for a, b in zip(self.covers, self.covers[1:]))


def _to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def _from_mask(mask: int) -> FrozenSet[int]:
    return frozenset(v + 1 for v in range(mask.bit_length()) if (mask >> v) & 1)


def solve_dvcr_bfs(
    graph: Graph,
    source: Iterable[int],
    target: Iterable[int],
    k: int,
    length: int,
    guard: int = DEFAULT_DVCR_GUARD,
) -> Tuple[bool, Optional[ReconfSequence]]:
    """
    Decide whether a sequence of `length` covers of size <= k leads from
    `source` to `target`.

    Returns:
        (answer, witness); the witness has exactly `length` covers

    Raises:
        GuardExceededError: more vertices than the guard
    """
    if graph.vertex_count > guard:
        raise GuardExceededError(f"{graph.vertex_count} vertices exceed BFS guard {guard}")
    source_set, target_set = frozenset(source), frozenset(target)
    for endpoint in (source_set, target_set):
        if len(endpoint) > k or not is_vertex_cover(graph, endpoint):
            logger.debug(f"Endpoint {sorted(endpoint)} is not a cover of size <= {k}")
            return False, None

    neighbor_masks = {v: _to_mask(graph.neighbors(v)) for v in graph.vertices()}
    start, goal = _to_mask(source_set), _to_mask(target_set)
    parent: Dict[int, Optional[int]] = {start: None}
    queue = deque([start])
    while queue and goal not in parent:
        mask = queue.popleft()
        size = bin(mask).count("1")
        for v in graph.vertices():
            bit = 1 << (v - 1)
            if mask & bit:
                # removal keeps a cover iff every neighbor stays
                if neighbor_masks[v] & ~mask:
                    continue
                successor = mask & ~bit
            else:
                if size >= k:
                    continue
                successor = mask | bit
            if successor not in parent:
                parent[successor] = mask
                queue.append(successor)

    if goal not in parent:
        logger.debug(f"Target unreachable; explored {len(parent)} covers")
        return False, None

    path = []
    node: Optional[int] = goal
    while node is not None:
        path.append(_from_mask(node))
        node = parent[node]
    path.reverse()
    logger.debug(f"Shortest sequence has {len(path)} covers; {len(parent)} covers explored")
    if len(path) > length:
        return False, None
    return True, ReconfSequence(tuple(path), length - len(path))


@dataclass(frozen=True)
class DvcrInstance:
    """
    Discovery Vertex Cover Reconfiguration.

    The graph is hidden in a graph-edges incidence spec. S and T must be
    minimal vertex covers of the discovered graph; this is checked after
    discovery, not at construction.
    """
    incidence: IncidenceSpec
    source: FrozenSet[int]
    target: FrozenSet[int]
    k: int
    length: int

    def __post_init__(self):
        if self.incidence.kind != GRAPH_EDGES:
            raise InvalidInstanceError(f"DVCR needs a graph-edges spec, got {self.incidence.kind}")
        source, target = frozenset(self.source), frozenset(self.target)
        vertices = set(self.incidence.left)
        for name, endpoint in (("S", source), ("T", target)):
            outside = endpoint - vertices
            if outside:
                raise InvalidInstanceError(f"{name} contains vertices {sorted(outside)} outside 1..{len(vertices)}")
        if self.k < 0:
            raise InvalidInstanceError(f"k must be >= 0, got {self.k}")
        if self.length < 1:
            raise InvalidInstanceError(f"sequence length must be >= 1, got {self.length}")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)

    @property
    def vertex_count(self) -> int:
        return self.incidence.vertex_count


def trivial_no_dvcr() -> DvcrInstance:
    """One edge, S={1}, T={2}, k=0: S already exceeds the budget."""
    spec = IncidenceSpec.for_graph(2, {(1, 2): make_trivial_cnf(True)})
    return DvcrInstance(spec, frozenset({1}), frozenset({2}), 0, 1)


def validate_endpoints(graph: Graph, inst: DvcrInstance) -> None:
    """
    Raises:
        MalformedInstanceError: S or T is not a minimal vertex cover of `graph`
    """
    for name, endpoint in (("S", inst.source), ("T", inst.target)):
        if not is_minimal_vertex_cover(graph, endpoint):
            raise MalformedInstanceError(
                f"{name} = {sorted(endpoint)} is not a minimal vertex cover of the discovered graph"
            )


def solve_dvcr(
    inst: DvcrInstance,
    backend: OracleBackend,
    ledger: OracleLedger,
    guard: int = DEFAULT_DVCR_GUARD,
) -> Tuple[bool, Optional[ReconfSequence]]:
    """Discover the graph (C(n,2) queries), check S and T, then search."""
    graph = discover_graph(inst.incidence, backend, ledger)
    validate_endpoints(graph, inst)
    return solve_dvcr_bfs(graph, inst.source, inst.target, inst.k, inst.length, guard)

"""
Vertex-weighted simple graphs and Clique-Free Vertex Deletion instances.

Vertices are 1..vertex_count. Edges are stored as sorted pairs; weights are
positive integers (all 1 for unweighted graphs).
"""
import itertools
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from Src.Shared.errors import InvalidInstanceError

Edge = Tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """
    An undirected graph without self-loops.

    Attributes:
        vertex_count: n; the vertices are 1..n
        edges: Sorted (u, v) pairs with u < v
        weights: weights[v - 1] is the weight of vertex v
    """
    vertex_count: int
    edges: FrozenSet[Edge]
    weights: Tuple[int, ...]
    _adjacency: Dict[int, FrozenSet[int]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.vertex_count
        if not isinstance(n, int) or n < 0:
            raise InvalidInstanceError(f"vertex count must be a nonnegative integer, got {n!r}")
        edges = set()
        for u, v in self.edges:
            if u == v:
                raise InvalidInstanceError(f"self-loop on vertex {u}")
            for w in (u, v):
                if w < 1 or w > n:
                    raise InvalidInstanceError(f"edge ({u}, {v}) uses vertex outside 1..{n}")
            edges.add(normalize_edge(u, v))
        weights = tuple(self.weights)
        if len(weights) != n:
            raise InvalidInstanceError(f"expected {n} weights, got {len(weights)}")
        for v, weight in enumerate(weights, start=1):
            if not isinstance(weight, int) or weight < 1:
                raise InvalidInstanceError(f"vertex {v} has non-positive weight {weight!r}")

        adjacency: Dict[int, set] = {v: set() for v in range(1, n + 1)}
        for u, v in edges:
            adjacency[u].add(v)
            adjacency[v].add(u)
        object.__setattr__(self, "edges", frozenset(edges))
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "_adjacency", {v: frozenset(nbrs) for v, nbrs in adjacency.items()})

    @classmethod
    def build(cls, vertex_count: int, edges: Iterable[Edge] = (), weights: Optional[Sequence[int]] = None) -> "Graph":
        if weights is None:
            weights = (1,) * vertex_count
        return cls(vertex_count, frozenset(edges), tuple(weights))

    @classmethod
    def complete(cls, vertex_count: int) -> "Graph":
        return cls.build(vertex_count, itertools.combinations(range(1, vertex_count + 1), 2))

    @classmethod
    def from_networkx(cls, graph: nx.Graph, weight_attribute: str = "weight") -> "Graph":
        """Relabel the nodes of `graph` in sorted order to 1..n."""
        nodes = sorted(graph.nodes)
        label = {node: index for index, node in enumerate(nodes, start=1)}
        weights = [int(graph.nodes[node].get(weight_attribute, 1)) for node in nodes]
        edges = [(label[u], label[v]) for u, v in graph.edges]
        return cls.build(len(nodes), edges, weights)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from((v, {"weight": self.weight(v)}) for v in self.vertices())
        graph.add_edges_from(self.edges)
        return graph

    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def is_unit_weighted(self) -> bool:
        return all(weight == 1 for weight in self.weights)

    def with_unit_weights(self) -> "Graph":
        return Graph(self.vertex_count, self.edges, (1,) * self.vertex_count)

    def weight(self, v: int) -> int:
        return self.weights[v - 1]

    def total_weight(self, vertices: Iterable[int]) -> int:
        return sum(self.weights[v - 1] for v in vertices)

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self._adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjacency.get(u, frozenset())

    def is_clique(self, vertices: Iterable[int]) -> bool:
        members = list(vertices)
        return all(self.has_edge(u, v) for u, v in itertools.combinations(members, 2))

    def induced_subgraph(self, keep: Iterable[int]) -> Tuple["Graph", Tuple[int, ...]]:
        """
        The subgraph on `keep`, renumbered to 1..len(keep) in ascending order.

        Returns:
            (subgraph, mapping) where mapping[new - 1] is the original vertex
        """
        mapping = tuple(sorted(set(keep)))
        label = {old: new for new, old in enumerate(mapping, start=1)}
        edges = [
            (label[u], label[v]) for u, v in self.edges if u in label and v in label
        ]
        weights = [self.weight(old) for old in mapping]
        return Graph.build(len(mapping), edges, weights), mapping


@dataclass(frozen=True)
class CfvdInstance:
    """
    Clique-Free Vertex Deletion: delete vertices of total weight at most h so
    that no clique of size k (weighted: total weight exactly k) remains.
    """
    graph: Graph
    h: int
    k: int
    weighted: bool = False

    def __post_init__(self):
        if self.h < 0:
            raise InvalidInstanceError(f"deletion budget h must be >= 0, got {self.h}")
        if self.k < 1:
            raise InvalidInstanceError(f"clique parameter k must be >= 1, got {self.k}")
        if not self.weighted and not self.graph.is_unit_weighted():
            raise InvalidInstanceError("unweighted instance carries non-unit weights")

    def deletion_cost(self, vertices: Iterable[int]) -> int:
        if self.weighted:
            return self.graph.total_weight(vertices)
        return len(list(vertices))


def enumerate_target_cliques(graph: Graph, k: int, weighted: bool = False, at_least: bool = False) -> List[FrozenSet[int]]:
    """
    All cliques of size k (weighted: total weight k).

    With `at_least`, cliques of size (weight) at least k are returned instead.
    """
    targets = []
    for clique in nx.enumerate_all_cliques(graph.to_networkx()):
        # cliques come in nondecreasing size and weights are >= 1
        if not at_least and len(clique) > k:
            break
        measure = graph.total_weight(clique) if weighted else len(clique)
        if measure == k or (at_least and measure > k):
            targets.append(frozenset(clique))
    return targets

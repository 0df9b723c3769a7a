"""
OR-cross-composition from unweighted Clique-Free Vertex Deletion into the
weighted problem.

For t' = 2^L inputs sharing (n, h, k):
    - instance i keeps its graph on vertices (i-1)n+1..in, weight 1;
    - selection vertices v_j, v_j' (j = 1..L) of weight n form a clique;
    - each pair v_j, v_j' shares h*+1 dummies of weight k + n(L-2), each
      adjacent to both, so one of v_j, v_j' must be deleted;
    - instance i is wired to v_j when bit j-1 of (i-1) is 1, else to v_j'.
h* = h + nL and k* = k + nL.
"""
import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from Src.Shared.errors import ShapeMismatchError

from .graph import CfvdInstance, Edge, Graph

logger = logging.getLogger("workbench.cliquedel.composition")

MIN_COMPOSITION_WIDTH = 4


@dataclass(frozen=True)
class CompositionLayout:
    """Vertex ranges of a composed instance."""
    n: int
    width: int
    selection_bits: int
    dummies_per_bit: int

    def instance_vertex(self, index: int, v: int) -> int:
        """Vertex v of the index-th (0-based) instance."""
        return index * self.n + v

    def selection_pair(self, j: int) -> Tuple[int, int]:
        base = self.width * self.n
        return base + 2 * j - 1, base + 2 * j

    def dummy(self, j: int, position: int) -> int:
        base = self.width * self.n + 2 * self.selection_bits
        return base + (j - 1) * self.dummies_per_bit + position

    @property
    def vertex_count(self) -> int:
        return self.width * self.n + 2 * self.selection_bits + self.selection_bits * self.dummies_per_bit


def composition_width(count: int) -> int:
    """Smallest power of two >= max(count, 4)."""
    width = MIN_COMPOSITION_WIDTH
    while width < count:
        width *= 2
    return width


def compose_wcfvd_or(instances: Sequence[CfvdInstance]) -> CfvdInstance:
    """
    Compose unweighted instances into one weighted instance that is yes iff
    some input is yes.

    Raises:
        ShapeMismatchError: empty input, weighted input, differing (n, h, k),
            or h, k outside 1..n-1
    """
    if not instances:
        raise ShapeMismatchError("composition needs at least one instance")
    first = instances[0]
    n, h, k = first.graph.vertex_count, first.h, first.k
    for position, inst in enumerate(instances, start=1):
        if inst.weighted:
            raise ShapeMismatchError(f"instance {position} is weighted")
        shape = (inst.graph.vertex_count, inst.h, inst.k)
        if shape != (n, h, k):
            raise ShapeMismatchError(f"instance {position} has (n,h,k) = {shape}, expected {(n, h, k)}")
    if not (n > h >= 1 and n > k >= 1):
        raise ShapeMismatchError(f"composition needs n > h >= 1 and n > k >= 1, got n={n}, h={h}, k={k}")

    width = composition_width(len(instances))
    bits = width.bit_length() - 1
    h_star = h + n * bits
    k_star = k + n * bits
    layout = CompositionLayout(n, width, bits, h_star + 1)
    selection_weight = n
    dummy_weight = k + n * (bits - 2)

    padded = list(instances) + [first] * (width - len(instances))
    edges: List[Edge] = []
    weights: List[int] = []

    for index, inst in enumerate(padded):
        weights.extend(inst.graph.with_unit_weights().weights)
        for u, v in inst.graph.edges:
            edges.append((layout.instance_vertex(index, u), layout.instance_vertex(index, v)))
        for j in range(1, bits + 1):
            v_j, v_j_prime = layout.selection_pair(j)
            target = v_j if (index >> (j - 1)) & 1 else v_j_prime
            for v in range(1, n + 1):
                edges.append((layout.instance_vertex(index, v), target))

    selection = [vertex for j in range(1, bits + 1) for vertex in layout.selection_pair(j)]
    weights.extend([selection_weight] * len(selection))
    for a in range(len(selection)):
        for b in range(a + 1, len(selection)):
            edges.append((selection[a], selection[b]))

    for j in range(1, bits + 1):
        v_j, v_j_prime = layout.selection_pair(j)
        for position in range(1, layout.dummies_per_bit + 1):
            dummy = layout.dummy(j, position)
            edges.append((dummy, v_j))
            edges.append((dummy, v_j_prime))
    weights.extend([dummy_weight] * (bits * layout.dummies_per_bit))

    graph = Graph.build(layout.vertex_count, edges, weights)
    logger.info(
        f"Composed {len(instances)} instances (width {width}): {graph.vertex_count} vertices, "
        f"h*={h_star}, k*={k_star}"
    )
    return CfvdInstance(graph, h_star, k_star, weighted=True)

"""
Incidence specifications: a structure whose incidences are hidden behind
one SAT instance per index pair, and its discovery with the NP-oracle.

Three kinds are supported:
    graph-edges        left = right = vertices 1..n, unordered pairs u < v
    literal-in-clause  left = signed literals, right = clause indices
    element-in-set     left = elements, right = set indices
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Hashable, List, Mapping, Optional, Tuple, Union

from Src.CliqueDeletion.graph import Graph
from Src.Formula.formula import CnfFormula
from Src.Oracle.backends import OracleBackend
from Src.Oracle.ledger import OracleLedger
from Src.Oracle.queries import query_sat
from Src.Shared.errors import InvalidInstanceError

logger = logging.getLogger("workbench.discovery.incidence")

GRAPH_EDGES = "graph-edges"
LITERAL_IN_CLAUSE = "literal-in-clause"
ELEMENT_IN_SET = "element-in-set"
KINDS = (GRAPH_EDGES, LITERAL_IN_CLAUSE, ELEMENT_IN_SET)

PHASE = "discover"

Pair = Tuple[Hashable, Hashable]


def make_trivial_cnf(answer: bool) -> CnfFormula:
    """Constant-size CNF: no clauses if `answer`, else x1 and ~x1."""
    if answer:
        return CnfFormula((), 0)
    return CnfFormula.from_ints([[1], [-1]], 1)


@dataclass(frozen=True)
class IncidenceSpec:
    """
    One CNF per index pair; pairs without an explicit CNF get the trivial-no CNF.
    """
    kind: str
    left: Tuple[Hashable, ...]
    right: Tuple[Hashable, ...]
    instances: Mapping[Pair, CnfFormula]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidInstanceError(f"unknown incidence kind {self.kind!r}")
        left = tuple(self.left)
        right = tuple(self.right)
        if self.kind == GRAPH_EDGES and left != right:
            raise InvalidInstanceError("graph-edges specs index vertex pairs of one vertex set")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

        allowed = set(self._index_pairs())
        instances: Dict[Pair, CnfFormula] = {}
        for pair, cnf in dict(self.instances).items():
            key = self.normalize_pair(*pair)
            if key not in allowed:
                raise InvalidInstanceError(f"pair {pair} is not in the index set")
            if key in instances:
                raise InvalidInstanceError(f"pair {pair} has two instances")
            instances[key] = cnf
        for key in allowed:
            instances.setdefault(key, make_trivial_cnf(False))
        object.__setattr__(self, "instances", instances)

    @classmethod
    def for_graph(cls, vertex_count: int, instances: Optional[Mapping[Pair, CnfFormula]] = None) -> "IncidenceSpec":
        vertices = tuple(range(1, vertex_count + 1))
        return cls(GRAPH_EDGES, vertices, vertices, instances or {})

    def normalize_pair(self, a: Hashable, b: Hashable) -> Pair:
        if self.kind == GRAPH_EDGES and b < a:
            return (b, a)
        return (a, b)

    def _index_pairs(self) -> List[Pair]:
        if self.kind == GRAPH_EDGES:
            return list(itertools.combinations(self.left, 2))
        return [(a, b) for a in self.left for b in self.right]

    def pairs(self) -> List[Pair]:
        """Index pairs in canonical order."""
        return self._index_pairs()

    def instance(self, a: Hashable, b: Hashable) -> CnfFormula:
        return self.instances[self.normalize_pair(a, b)]

    @property
    def vertex_count(self) -> int:
        return len(self.left)


@dataclass(frozen=True)
class IncidenceTable:
    """Discovered incidences of a non-graph spec."""
    kind: str
    left: Tuple[Hashable, ...]
    right: Tuple[Hashable, ...]
    present: FrozenSet[Pair]

    def __contains__(self, pair: Pair) -> bool:
        return pair in self.present


Structure = Union[Graph, IncidenceTable]


def discover_incidences(spec: IncidenceSpec, backend: OracleBackend, ledger: OracleLedger) -> Structure:
    """
    Decide every per-pair CNF, one query each (phase "discover").

    Returns:
        The discovered Graph for graph-edges specs, otherwise an IncidenceTable
    """
    present = []
    for pair in spec.pairs():
        if query_sat(backend, ledger, spec.instances[pair], PHASE).satisfiable:
            present.append(pair)
    logger.info(f"Discovered {len(present)} of {len(spec.pairs())} {spec.kind} incidences")
    if spec.kind == GRAPH_EDGES:
        return Graph.build(spec.vertex_count, present)
    return IncidenceTable(spec.kind, spec.left, spec.right, frozenset(present))


def discover_graph(spec: IncidenceSpec, backend: OracleBackend, ledger: OracleLedger) -> Graph:
    if spec.kind != GRAPH_EDGES:
        raise InvalidInstanceError(f"expected a graph-edges spec, got {spec.kind}")
    return discover_incidences(spec, backend, ledger)


def wrap_structure(structure: Structure) -> IncidenceSpec:
    """Re-encode a concrete structure with trivial constant-size CNFs."""
    if isinstance(structure, Graph):
        return IncidenceSpec.for_graph(
            structure.vertex_count,
            {edge: make_trivial_cnf(True) for edge in structure.edges},
        )
    return IncidenceSpec(
        structure.kind,
        structure.left,
        structure.right,
        {pair: make_trivial_cnf(True) for pair in structure.present},
    )


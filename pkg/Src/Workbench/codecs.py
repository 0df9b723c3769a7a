"""
Text codecs for CFVD graphs and DVCR bundles.

Graph:
    p graph <n> <m> [weighted]
    w <v> <weight>          (weighted files only; absent vertices weigh 1)
    e <u> <v>
    param <h> <k>           (optional)

DVCR bundle:
    p dvcr <n>
    s v1 ... 0
    t v1 ... 0
    k <k>
    l <l>
    pair <u> <v>            (followed by a DIMACS CNF and a line "end")

Canonical output sorts every list ascending and omits unit weights and
trivial-no pair blocks.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Set, Tuple

from Src.CliqueDeletion.graph import CfvdInstance, Graph, normalize_edge
from Src.Discovery.incidence import IncidenceSpec, make_trivial_cnf
from Src.Discovery.reconfiguration import DvcrInstance
from Src.Formula.codecs import Source, parse_dimacs_cnf, parse_int_tokens, parse_zero_terminated, read_lines, serialize_dimacs_cnf
from Src.Formula.formula import CnfFormula
from Src.Shared.errors import FormatError, InvalidInstanceError

logger = logging.getLogger("workbench.cli.codecs")

Params = Tuple[int, int]


@dataclass(frozen=True)
class GraphDocument:
    """A parsed graph file."""
    graph: Graph
    weighted: bool = False
    params: Optional[Params] = None

    def to_instance(self, override: Optional[Params] = None, weighted: bool = False) -> CfvdInstance:
        """
        Build a CFVD instance from the file's (h, k), or from `override`.

        Raises:
            InvalidInstanceError: no parameters in the file and none given
        """
        params = override or self.params
        if params is None:
            raise InvalidInstanceError("graph file has no 'param h k' line; pass --param h,k")
        h, k = params
        return CfvdInstance(self.graph, h, k, self.weighted or weighted)


def _check_vertex(v: int, n: int, line_number: int) -> None:
    if v < 1 or v > n:
        raise FormatError(f"vertex {v} out of range 1..{n}", line_number)


def parse_graph(source: Source) -> GraphDocument:
    """
    Parse a graph file.

    Raises:
        FormatError: malformed header or line, self-loop, repeated edge or
            weight, weight line in an unweighted file, edge count mismatch
    """
    header: Optional[Tuple[int, int, bool]] = None
    weights: Dict[int, int] = {}
    edges: Dict[Tuple[int, int], int] = {}
    params: Optional[Params] = None
    last_line = 0

    for line_number, raw in enumerate(read_lines(source), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        last_line = line_number
        tokens = line.split()

        if header is None:
            if tokens[:2] != ["p", "graph"] or len(tokens) not in (4, 5):
                raise FormatError("expected header 'p graph <n> <m> [weighted]'", line_number)
            if len(tokens) == 5 and tokens[4] != "weighted":
                raise FormatError(f"unknown header flag {tokens[4]!r}", line_number)
            n, m = parse_int_tokens(tokens[2:4], line_number)
            if n < 0 or m < 0:
                raise FormatError("negative count in header", line_number)
            header = (n, m, len(tokens) == 5)
            continue

        n, _, weighted = header
        tag, values = tokens[0], tokens[1:]
        if tag == "p":
            raise FormatError("duplicate header", line_number)
        if tag == "e":
            if len(values) != 2:
                raise FormatError("edge line needs two vertices", line_number)
            u, v = parse_int_tokens(values, line_number)
            _check_vertex(u, n, line_number)
            _check_vertex(v, n, line_number)
            if u == v:
                raise FormatError(f"self-loop on vertex {u}", line_number)
            edge = normalize_edge(u, v)
            if edge in edges:
                raise FormatError(f"edge {edge} repeated (first on line {edges[edge]})", line_number)
            edges[edge] = line_number
        elif tag == "w":
            if not weighted:
                raise FormatError("weight line in an unweighted graph", line_number)
            if len(values) != 2:
                raise FormatError("weight line needs a vertex and a weight", line_number)
            v, weight = parse_int_tokens(values, line_number)
            _check_vertex(v, n, line_number)
            if weight < 1:
                raise FormatError(f"vertex {v} has non-positive weight {weight}", line_number)
            if v in weights:
                raise FormatError(f"vertex {v} weighted twice", line_number)
            weights[v] = weight
        elif tag == "param":
            if params is not None:
                raise FormatError("duplicate param line", line_number)
            if len(values) != 2:
                raise FormatError("param line needs h and k", line_number)
            h, k = parse_int_tokens(values, line_number)
            params = (h, k)
        else:
            raise FormatError(f"unknown line type {tag!r}", line_number)

    if header is None:
        raise FormatError("missing header 'p graph <n> <m>'")
    n, m, weighted = header
    if len(edges) != m:
        raise FormatError(f"header declares {m} edges, found {len(edges)}", last_line)

    graph = Graph.build(n, edges, [weights.get(v, 1) for v in range(1, n + 1)])
    logger.debug(f"Parsed graph: {n} vertices, {m} edges, weighted={weighted}, params={params}")
    return GraphDocument(graph, weighted, params)


def serialize_graph(graph: Graph, weighted: bool = False, params: Optional[Params] = None) -> str:
    if not weighted and not graph.is_unit_weighted():
        raise InvalidInstanceError("non-unit weights need a weighted graph file")
    header = f"p graph {graph.vertex_count} {graph.edge_count}"
    lines = [header + " weighted" if weighted else header]
    lines.extend(f"w {v} {graph.weight(v)}" for v in graph.vertices() if graph.weight(v) != 1)
    lines.extend(f"e {u} {v}" for u, v in sorted(graph.edges))
    if params is not None:
        lines.append(f"param {params[0]} {params[1]}")
    return "\n".join(lines) + "\n"


def serialize_cfvd(inst: CfvdInstance) -> str:
    return serialize_graph(inst.graph, inst.weighted, (inst.h, inst.k))


def _parse_vertex_list(values: List[str], n: int, line_number: int) -> Set[int]:
    vertices = parse_zero_terminated(values, line_number)
    for v in vertices:
        _check_vertex(v, n, line_number)
    if len(set(vertices)) != len(vertices):
        raise FormatError("vertex listed twice", line_number)
    return set(vertices)


def _parse_pair_block(lines: List[str], pair_line: int) -> CnfFormula:
    try:
        return parse_dimacs_cnf("\n".join(lines))
    except FormatError as e:
        line_number = pair_line + e.line_number if e.line_number is not None else pair_line
        raise FormatError(e.detail, line_number)


def parse_dvcr_bundle(source: Source) -> DvcrInstance:
    """
    Parse a DVCR bundle. Pairs without a block get the trivial-no CNF.

    Raises:
        FormatError: malformed line, S/T vertex out of range, duplicate or
            unterminated pair block, missing s/t/k/l line
    """
    n: Optional[int] = None
    fields: Dict[str, object] = {}
    instances: Dict[Tuple[int, int], CnfFormula] = {}
    block: Optional[List[str]] = None
    block_pair: Tuple[int, int] = (0, 0)
    block_line = 0

    for line_number, raw in enumerate(read_lines(source), start=1):
        line = raw.strip()
        if block is not None:
            if line == "end":
                instances[block_pair] = _parse_pair_block(block, block_line)
                block = None
            else:
                block.append(raw)
            continue
        if not line or line.startswith("c"):
            continue
        tokens = line.split()

        if n is None:
            if len(tokens) != 3 or tokens[:2] != ["p", "dvcr"]:
                raise FormatError("expected header 'p dvcr <n>'", line_number)
            (n,) = parse_int_tokens(tokens[2:], line_number)
            if n < 0:
                raise FormatError("negative vertex count", line_number)
            continue

        tag, values = tokens[0], tokens[1:]
        if tag in ("s", "t", "k", "l") and tag in fields:
            raise FormatError(f"duplicate '{tag}' line", line_number)
        if tag in ("s", "t"):
            fields[tag] = _parse_vertex_list(values, n, line_number)
        elif tag in ("k", "l"):
            if len(values) != 1:
                raise FormatError(f"'{tag}' line needs one integer", line_number)
            (value,) = parse_int_tokens(values, line_number)
            fields[tag] = value
        elif tag == "pair":
            if len(values) != 2:
                raise FormatError("pair line needs two vertices", line_number)
            u, v = parse_int_tokens(values, line_number)
            _check_vertex(u, n, line_number)
            _check_vertex(v, n, line_number)
            if u == v:
                raise FormatError(f"pair ({u}, {v}) is not a vertex pair", line_number)
            block_pair = normalize_edge(u, v)
            if block_pair in instances:
                raise FormatError(f"duplicate pair block {block_pair}", line_number)
            block, block_line = [], line_number
        else:
            raise FormatError(f"unknown line type {tag!r}", line_number)

    if n is None:
        raise FormatError("missing header 'p dvcr <n>'")
    if block is not None:
        raise FormatError(f"pair block {block_pair} is not closed by 'end'", block_line)
    missing = [tag for tag in ("s", "t", "k", "l") if tag not in fields]
    if missing:
        raise FormatError(f"missing lines: {', '.join(missing)}")

    try:
        inst = DvcrInstance(
            IncidenceSpec.for_graph(n, instances),
            frozenset(fields["s"]),
            frozenset(fields["t"]),
            fields["k"],
            fields["l"],
        )
    except InvalidInstanceError as e:
        raise FormatError(str(e))
    logger.debug(f"Parsed DVCR bundle: n={n}, {len(instances)} pair blocks")
    return inst


def _render_vertices(tag: str, vertices) -> str:
    return " ".join([tag] + [str(v) for v in sorted(vertices)] + ["0"])


def serialize_dvcr_bundle(inst: DvcrInstance) -> str:
    trivial_no = make_trivial_cnf(False)
    lines = [
        f"p dvcr {inst.vertex_count}",
        _render_vertices("s", inst.source),
        _render_vertices("t", inst.target),
        f"k {inst.k}",
        f"l {inst.length}",
    ]
    for pair in inst.incidence.pairs():
        cnf = inst.incidence.instances[pair]
        if cnf == trivial_no:
            continue
        lines.append(f"pair {pair[0]} {pair[1]}")
        lines.append(serialize_dimacs_cnf(cnf).rstrip("\n"))
        lines.append("end")
    return "\n".join(lines) + "\n"

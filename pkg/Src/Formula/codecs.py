"""
Text codecs for quantified DNF instances (QDNF) and DIMACS CNF.

QDNF:
    p qdnf <#vars> <#terms>
    e v1 v2 ... 0
    a v1 ... 0
    <one term per line, signed literals, terminated by 0>

Comment lines start with "c". Errors are reported with line numbers.
"""
import io
import logging
from typing import Dict, List, Optional, Set, TextIO, Tuple, Union

from pysat.formula import CNF

from Src.Shared.errors import FormatError, InvalidInstanceError

from .formula import CnfFormula, DnfFormula, Literal, QDnfInstance

logger = logging.getLogger("workbench.formula.codecs")

Source = Union[str, TextIO]


def read_lines(source: Source) -> List[str]:
    """Accept either a string or an open text stream."""
    if isinstance(source, str):
        return source.splitlines()
    return source.read().splitlines()


def parse_int_tokens(tokens: List[str], line_number: int) -> List[int]:
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise FormatError(f"non-integer field in {' '.join(tokens)!r}", line_number)


def parse_zero_terminated(tokens: List[str], line_number: int) -> List[int]:
    """Parse a list of integers that must end with exactly one 0."""
    values = parse_int_tokens(tokens, line_number)
    if not values or values[-1] != 0:
        raise FormatError("line should end with 0", line_number)
    values = values[:-1]
    if 0 in values:
        raise FormatError("0 inside a literal list", line_number)
    return values


def _parse_header(tokens: List[str], kind: str, line_number: int) -> Tuple[int, int]:
    if len(tokens) != 4 or tokens[0] != "p" or tokens[1] != kind:
        raise FormatError(f"expected header 'p {kind} <#vars> <#rows>'", line_number)
    first, second = parse_int_tokens(tokens[2:], line_number)
    if first < 0 or second < 0:
        raise FormatError("negative count in header", line_number)
    return first, second


def check_literal_row(values: List[int], variable_count: int, line_number: int) -> Tuple[Literal, ...]:
    """Range-check a literal row and reject repeated or complementary variables."""
    seen: Dict[int, int] = {}
    for value in values:
        variable = abs(value)
        if variable > variable_count:
            raise FormatError(f"literal {value} out of range 1..{variable_count}", line_number)
        if variable in seen:
            if seen[variable] != value:
                raise FormatError(f"variable {variable} occurs with both polarities", line_number)
            raise FormatError(f"variable {variable} repeated", line_number)
        seen[variable] = value
    return tuple(Literal.from_int(value) for value in values)


def _require_quantifier_lines(seen: Dict[str, int], line_number: int) -> None:
    for kind in ("e", "a"):
        if kind not in seen:
            raise FormatError(f"missing '{kind}' line", line_number)


def parse_qdnf(source: Source) -> QDnfInstance:
    """
    Parse QDNF text into a validated instance.

    Args:
        source: QDNF text or a text stream

    Returns:
        QDnfInstance satisfying all invariants

    Raises:
        FormatError: malformed header, out-of-range literal, variable
            quantified twice, missing or repeated "e"/"a" line,
            complementary literals in a term
    """
    header: Optional[Tuple[int, int]] = None
    quantified: Dict[int, int] = {}
    existential: Set[int] = set()
    universal: Set[int] = set()
    quantifier_lines: Dict[str, int] = {}
    terms: List[Tuple[Literal, ...]] = []
    last_line = 0

    for line_number, raw in enumerate(read_lines(source), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        last_line = line_number
        tokens = line.split()

        if header is None:
            header = _parse_header(tokens, "qdnf", line_number)
            continue
        if tokens[0] == "p":
            raise FormatError("duplicate header", line_number)

        variable_count = header[0]
        if tokens[0] in ("e", "a"):
            if terms:
                raise FormatError("quantifier line after the first term", line_number)
            if tokens[0] in quantifier_lines:
                raise FormatError(
                    f"repeated '{tokens[0]}' line (first on line {quantifier_lines[tokens[0]]})", line_number
                )
            quantifier_lines[tokens[0]] = line_number
            target = existential if tokens[0] == "e" else universal
            for variable in parse_zero_terminated(tokens[1:], line_number):
                if variable < 1 or variable > variable_count:
                    raise FormatError(f"variable {variable} out of range 1..{variable_count}", line_number)
                if variable in quantified:
                    raise FormatError(
                        f"variable {variable} quantified twice (first on line {quantified[variable]})",
                        line_number,
                    )
                quantified[variable] = line_number
                target.add(variable)
            continue

        if not terms:
            _require_quantifier_lines(quantifier_lines, line_number)
        values = parse_zero_terminated(tokens, line_number)
        term = check_literal_row(values, variable_count, line_number)
        unquantified = [lit.variable for lit in term if lit.variable not in quantified]
        if unquantified:
            raise FormatError(f"variables {unquantified} are not quantified", line_number)
        terms.append(term)

    if header is None:
        raise FormatError("missing header 'p qdnf <#vars> <#terms>'")
    _require_quantifier_lines(quantifier_lines, last_line)
    variable_count, term_count = header
    if len(terms) != term_count:
        raise FormatError(f"header declares {term_count} terms, found {len(terms)}", last_line)

    try:
        inst = QDnfInstance(DnfFormula(tuple(terms), variable_count), existential, universal)
    except InvalidInstanceError as e:
        raise FormatError(str(e), last_line)
    logger.debug(
        f"Parsed QDNF instance: {variable_count} variables, {term_count} terms, "
        f"|X|={len(existential)}, |Y|={len(universal)}"
    )
    return inst


def _render_row(values) -> str:
    return " ".join([str(value) for value in values] + ["0"])


def serialize_qdnf(inst: QDnfInstance) -> str:
    """Render an instance in canonical QDNF text (quantifier lists ascending)."""
    lines = [
        f"p qdnf {inst.formula.variable_count} {len(inst.formula.terms)}",
        "e " + _render_row(sorted(inst.existential)),
        "a " + _render_row(sorted(inst.universal)),
    ]
    lines.extend(_render_row(term) for term in inst.formula.to_ints())
    return "\n".join(lines) + "\n"


def parse_dimacs_cnf(source: Source) -> CnfFormula:
    """
    Parse DIMACS CNF. Clauses may span lines; a lone 0 is the empty clause.

    Raises:
        FormatError: malformed header, out-of-range literal, clause count
            mismatch, complementary or repeated literals in a clause
    """
    header: Optional[Tuple[int, int]] = None
    clauses: List[Tuple[Literal, ...]] = []
    pending: List[int] = []
    last_line = 0

    for line_number, raw in enumerate(read_lines(source), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        last_line = line_number
        tokens = line.split()
        if header is None:
            header = _parse_header(tokens, "cnf", line_number)
            continue
        if tokens[0] == "p":
            raise FormatError("duplicate header", line_number)
        if tokens[0] == "%":
            # SATLIB trailer
            break
        for value in parse_int_tokens(tokens, line_number):
            if value == 0:
                clauses.append(check_literal_row(pending, header[0], line_number))
                pending = []
            else:
                pending.append(value)

    if header is None:
        raise FormatError("missing header 'p cnf <#vars> <#clauses>'")
    if pending:
        raise FormatError("last clause is not terminated by 0", last_line)
    variable_count, clause_count = header
    if len(clauses) != clause_count:
        raise FormatError(f"header declares {clause_count} clauses, found {len(clauses)}", last_line)
    return CnfFormula(tuple(clauses), variable_count)


def serialize_dimacs_cnf(cnf: CnfFormula) -> str:
    """Render DIMACS CNF text through pysat, one clause per line."""
    formula = CNF(from_clauses=[list(clause) for clause in cnf.to_ints()])
    # declared variables may exceed the largest one used
    formula.nv = cnf.variable_count
    buffer = io.StringIO()
    formula.to_fp(buffer)
    return buffer.getvalue()

"""
Boolean formula data model shared by every workbench algorithm.

Literals, DNF terms, CNF clauses, assignments, the two-level quantified
instance, and the QDNF / DIMACS text codecs.
"""
from .formula import (
    Assignment,
    CnfFormula,
    DnfFormula,
    Literal,
    QDnfInstance,
    brute_force_satisfiable,
    brute_force_tautology,
    evaluate,
    iter_assignments,
    negate_dnf_to_cnf,
    restrict_dnf,
)
from .codecs import parse_dimacs_cnf, parse_qdnf, serialize_dimacs_cnf, serialize_qdnf

__version__ = "1.0.0"

__all__ = [
    "Assignment",
    "CnfFormula",
    "DnfFormula",
    "Literal",
    "QDnfInstance",
    "brute_force_satisfiable",
    "brute_force_tautology",
    "evaluate",
    "iter_assignments",
    "negate_dnf_to_cnf",
    "parse_dimacs_cnf",
    "parse_qdnf",
    "restrict_dnf",
    "serialize_dimacs_cnf",
    "serialize_qdnf",
]

"""
Core Boolean-formula values.

All values are immutable after construction and safe to share across threads.
Variables are positive integers; a negative integer in the integer views
denotes a negated occurrence.
"""
import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

from Src.Shared.errors import InvalidInstanceError


@dataclass(frozen=True, order=True)
class Literal:
    """A variable occurrence; polarity True means positive."""
    variable: int
    polarity: bool = True

    def __post_init__(self):
        if not isinstance(self.variable, int) or self.variable < 1:
            raise InvalidInstanceError(f"literal variable must be a positive integer, got {self.variable!r}")
        object.__setattr__(self, "polarity", bool(self.polarity))

    @classmethod
    def from_int(cls, value: int) -> "Literal":
        if value == 0:
            raise InvalidInstanceError("0 is not a literal")
        return cls(abs(value), value > 0)

    def to_int(self) -> int:
        return self.variable if self.polarity else -self.variable

    def negated(self) -> "Literal":
        return Literal(self.variable, not self.polarity)

    def __str__(self) -> str:
        return f"x{self.variable}" if self.polarity else f"~x{self.variable}"


Term = Tuple[Literal, ...]
Clause = Tuple[Literal, ...]


def _normalize_rows(rows: Iterable[Iterable[Literal]]) -> Tuple[Tuple[Literal, ...], ...]:
    normalized = []
    for row in rows:
        normalized.append(tuple(
            lit if isinstance(lit, Literal) else Literal.from_int(lit) for lit in row
        ))
    return tuple(normalized)


def _validate_rows(rows: Sequence[Sequence[Literal]], variable_count: int, row_name: str) -> None:
    if not isinstance(variable_count, int) or variable_count < 0:
        raise InvalidInstanceError(f"variable count must be a nonnegative integer, got {variable_count!r}")
    for index, row in enumerate(rows, start=1):
        seen: Dict[int, bool] = {}
        for lit in row:
            if lit.variable > variable_count:
                raise InvalidInstanceError(
                    f"{row_name} {index}: variable {lit.variable} exceeds variable count {variable_count}"
                )
            if lit.variable in seen:
                if seen[lit.variable] != lit.polarity:
                    raise InvalidInstanceError(
                        f"{row_name} {index}: contains variable {lit.variable} and its negation"
                    )
                raise InvalidInstanceError(f"{row_name} {index}: repeats variable {lit.variable}")
            seen[lit.variable] = lit.polarity


def _rows_from_ints(rows: Iterable[Iterable[int]], variable_count: Optional[int]):
    literal_rows = tuple(tuple(Literal.from_int(v) for v in row) for row in rows)
    if variable_count is None:
        variable_count = max((lit.variable for row in literal_rows for lit in row), default=0)
    return literal_rows, variable_count


@dataclass(frozen=True)
class DnfFormula:
    """
    Disjunction of terms, each term a conjunction of literals.

    Zero terms is constant false; a single empty term is constant true.
    """
    terms: Tuple[Term, ...]
    variable_count: int

    def __post_init__(self):
        object.__setattr__(self, "terms", _normalize_rows(self.terms))
        _validate_rows(self.terms, self.variable_count, "term")

    @classmethod
    def from_ints(cls, rows: Iterable[Iterable[int]], variable_count: Optional[int] = None) -> "DnfFormula":
        terms, count = _rows_from_ints(rows, variable_count)
        return cls(terms, count)

    @classmethod
    def constant_true(cls, variable_count: int = 0) -> "DnfFormula":
        return cls(((),), variable_count)

    @classmethod
    def constant_false(cls, variable_count: int = 0) -> "DnfFormula":
        return cls((), variable_count)

    def variables(self) -> FrozenSet[int]:
        return frozenset(lit.variable for term in self.terms for lit in term)

    def size(self) -> int:
        return sum(len(term) for term in self.terms)

    def to_ints(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(lit.to_int() for lit in term) for term in self.terms)


@dataclass(frozen=True)
class CnfFormula:
    """
    Conjunction of clauses, each clause a disjunction of literals.

    Zero clauses is constant true; any empty clause makes the formula unsatisfiable.
    """
    clauses: Tuple[Clause, ...]
    variable_count: int

    def __post_init__(self):
        object.__setattr__(self, "clauses", _normalize_rows(self.clauses))
        _validate_rows(self.clauses, self.variable_count, "clause")

    @classmethod
    def from_ints(cls, rows: Iterable[Iterable[int]], variable_count: Optional[int] = None) -> "CnfFormula":
        clauses, count = _rows_from_ints(rows, variable_count)
        return cls(clauses, count)

    def variables(self) -> FrozenSet[int]:
        return frozenset(lit.variable for clause in self.clauses for lit in clause)

    def size(self) -> int:
        return sum(len(clause) for clause in self.clauses)

    def to_ints(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(lit.to_int() for lit in clause) for clause in self.clauses)


@dataclass(frozen=True)
class Assignment:
    """
    Truth values for a set of variables.

    `declared` is the variable set the assignment is measured against;
    `is_total` tells whether every declared variable is bound.
    """
    bindings: Tuple[Tuple[int, bool], ...]
    declared: FrozenSet[int]

    def __post_init__(self):
        bindings = tuple(sorted((int(var), bool(value)) for var, value in self.bindings))
        declared = frozenset(self.declared)
        variables = [var for var, _ in bindings]
        if len(set(variables)) != len(variables):
            raise InvalidInstanceError("assignment binds a variable twice")
        unknown = set(variables) - declared
        if unknown:
            raise InvalidInstanceError(f"assignment binds undeclared variables {sorted(unknown)}")
        object.__setattr__(self, "bindings", bindings)
        object.__setattr__(self, "declared", declared)

    @classmethod
    def of(cls, values: Mapping[int, bool], declared: Optional[Iterable[int]] = None) -> "Assignment":
        declared_set = frozenset(values) if declared is None else frozenset(declared)
        return cls(tuple(values.items()), declared_set)

    @property
    def is_total(self) -> bool:
        return len(self.bindings) == len(self.declared)

    def variables(self) -> FrozenSet[int]:
        return frozenset(var for var, _ in self.bindings)

    def as_dict(self) -> Dict[int, bool]:
        return dict(self.bindings)

    def __getitem__(self, variable: int) -> bool:
        for var, value in self.bindings:
            if var == variable:
                return value
        raise KeyError(variable)

    def __contains__(self, variable: int) -> bool:
        return any(var == variable for var, _ in self.bindings)


@dataclass(frozen=True)
class QDnfInstance:
    """
    An exists-forall DNF instance: is there an assignment of `existential`
    such that every assignment of `universal` makes `formula` true?
    """
    formula: DnfFormula
    existential: FrozenSet[int]
    universal: FrozenSet[int]

    def __post_init__(self):
        existential = frozenset(self.existential)
        universal = frozenset(self.universal)
        object.__setattr__(self, "existential", existential)
        object.__setattr__(self, "universal", universal)

        overlap = existential & universal
        if overlap:
            raise InvalidInstanceError(f"variables {sorted(overlap)} are both existential and universal")
        for var in existential | universal:
            if var < 1 or var > self.formula.variable_count:
                raise InvalidInstanceError(
                    f"quantified variable {var} outside 1..{self.formula.variable_count}"
                )
        unquantified = self.formula.variables() - existential - universal
        if unquantified:
            raise InvalidInstanceError(f"variables {sorted(unquantified)} occur but are not quantified")

    @property
    def variable_count(self) -> int:
        return self.formula.variable_count


Formula = Union[DnfFormula, CnfFormula]


def evaluate(formula: Formula, assignment: Assignment) -> bool:
    """
    Evaluate a DNF or CNF formula under an assignment.

    The assignment must bind every variable occurring in the formula.
    """
    missing = formula.variables() - assignment.variables()
    if missing:
        raise InvalidInstanceError(f"partial assignment: variables {sorted(missing)} are unbound")
    values = assignment.as_dict()
    if isinstance(formula, DnfFormula):
        return any(all(values[lit.variable] == lit.polarity for lit in term) for term in formula.terms)
    if isinstance(formula, CnfFormula):
        return all(any(values[lit.variable] == lit.polarity for lit in clause) for clause in formula.clauses)
    raise TypeError(f"cannot evaluate {type(formula).__name__}")


def negate_dnf_to_cnf(dnf: DnfFormula) -> CnfFormula:
    """De Morgan: each term becomes one clause with every polarity flipped."""
    return CnfFormula(
        tuple(tuple(lit.negated() for lit in term) for term in dnf.terms),
        dnf.variable_count,
    )


def restrict_dnf(dnf: DnfFormula, partial: Assignment) -> DnfFormula:
    """
    Substitute the bound variables of `partial` into `dnf`.

    Falsified terms are dropped and satisfied literals removed; a term that
    empties out makes the whole result constant true.
    """
    out_of_range = [var for var in partial.variables() if var > dnf.variable_count]
    if out_of_range:
        raise InvalidInstanceError(f"restriction binds variables {out_of_range} outside the formula")
    values = partial.as_dict()

    terms = []
    for term in dnf.terms:
        kept = []
        falsified = False
        for lit in term:
            if lit.variable in values:
                if values[lit.variable] != lit.polarity:
                    falsified = True
                    break
            else:
                kept.append(lit)
        if falsified:
            continue
        if not kept:
            return DnfFormula.constant_true(dnf.variable_count)
        terms.append(tuple(kept))
    return DnfFormula(tuple(terms), dnf.variable_count)


def iter_assignments(variables: Iterable[int]) -> Iterator[Assignment]:
    """
    Enumerate all total assignments of `variables`.

    Order is lexicographic by variable index, false before true, the lowest
    index being the most significant position.
    """
    ordered = sorted(set(variables))
    declared = frozenset(ordered)
    for values in itertools.product((False, True), repeat=len(ordered)):
        yield Assignment(tuple(zip(ordered, values)), declared)


def brute_force_satisfiable(cnf: CnfFormula) -> Optional[Assignment]:
    """Return a satisfying assignment of the occurring variables, or None."""
    for assignment in iter_assignments(cnf.variables()):
        if evaluate(cnf, assignment):
            return assignment
    return None


def brute_force_tautology(dnf: DnfFormula) -> bool:
    """True iff every assignment of the occurring variables satisfies `dnf`."""
    return all(evaluate(dnf, assignment) for assignment in iter_assignments(dnf.variables()))

"""
Builtin SAT decision procedure: DPLL with two-watched-literal unit
propagation and pure-literal elimination at the root.

The search is iterative. Decisions live on an explicit stack next to one
trail of true literals, so depth is bounded by memory rather than by the
interpreter's recursion limit.

Deterministic: the branching literal is the smallest free variable of the
unsatisfied clause with the fewest free literals (first on ties), tried
true first.
"""
import logging
from collections import defaultdict
from typing import DefaultDict, Dict, List, Optional, Tuple

from Src.Formula.formula import CnfFormula

logger = logging.getLogger("workbench.oracle.dpll")

IntClause = Tuple[int, ...]
# (trail length before the decision, decided literal, already flipped)
Decision = Tuple[int, int, bool]


class DpllSolver:
    """
    Complete DPLL solver over integer clauses.
    """

    def __init__(self):
        self.decisions = 0
        self._value: Dict[int, bool] = {}
        self._trail: List[int] = []
        self._head = 0
        self._clauses: List[List[int]] = []
        self._watches: DefaultDict[int, List[int]] = defaultdict(list)

    def solve(self, cnf: CnfFormula) -> Optional[Dict[int, bool]]:
        """
        Decide satisfiability.

        Returns:
            A total model over 1..variable_count if satisfiable, else None.
            Variables left free by the search are set to False.
        """
        self.decisions = 0
        clauses = [tuple(lit.to_int() for lit in clause) for clause in cnf.clauses]
        satisfiable = self._search(clauses)
        logger.debug(
            f"DPLL on {cnf.variable_count} vars / {len(clauses)} clauses: "
            f"{'sat' if satisfiable else 'unsat'} after {self.decisions} decisions"
        )
        if not satisfiable:
            return None
        return {var: self._value.get(var, False) for var in range(1, cnf.variable_count + 1)}

    def _search(self, clauses: List[IntClause]) -> bool:
        if not self._load(clauses) or not self._propagate():
            return False

        stack: List[Decision] = []
        while True:
            literal = self._choose()
            if literal is None:
                return True
            stack.append((len(self._trail), literal, False))
            self.decisions += 1
            self._enqueue(literal)
            while not self._propagate():
                if not self._backtrack(stack):
                    return False

    def _load(self, clauses: List[IntClause]) -> bool:
        """Set up watches and assign root units and pure literals. False on an empty clause."""
        self._value = {}
        self._trail = []
        self._head = 0
        self._clauses = []
        self._watches = defaultdict(list)

        occurrences = set()
        units: List[int] = []
        for clause in clauses:
            literals = list(dict.fromkeys(clause))
            members = set(literals)
            if any(-lit in members for lit in literals):
                continue
            if not literals:
                return False
            occurrences.update(literals)
            if len(literals) == 1:
                units.append(literals[0])
                continue
            index = len(self._clauses)
            self._clauses.append(literals)
            self._watches[literals[0]].append(index)
            self._watches[literals[1]].append(index)

        pure = sorted((lit for lit in occurrences if -lit not in occurrences), key=abs)
        return all(self._enqueue(lit) for lit in units + pure)

    def _literal_value(self, literal: int) -> Optional[bool]:
        value = self._value.get(abs(literal))
        if value is None:
            return None
        return value == (literal > 0)

    def _enqueue(self, literal: int) -> bool:
        """Make `literal` true. False if it is already false."""
        current = self._literal_value(literal)
        if current is not None:
            return current
        self._value[abs(literal)] = literal > 0
        self._trail.append(literal)
        return True

    def _propagate(self) -> bool:
        """Unit propagation from the trail head. False on a conflict."""
        while self._head < len(self._trail):
            false_literal = -self._trail[self._head]
            self._head += 1
            watchers = self._watches[false_literal]
            i = 0
            while i < len(watchers):
                clause = self._clauses[watchers[i]]
                # watched literals sit at positions 0 and 1
                if clause[0] == false_literal:
                    clause[0], clause[1] = clause[1], clause[0]
                other = clause[0]
                if self._literal_value(other) is True:
                    i += 1
                    continue
                for j in range(2, len(clause)):
                    if self._literal_value(clause[j]) is not False:
                        clause[1], clause[j] = clause[j], clause[1]
                        self._watches[clause[1]].append(watchers[i])
                        watchers[i] = watchers[-1]
                        watchers.pop()
                        break
                else:
                    if not self._enqueue(other):
                        return False
                    i += 1
        return True

    def _backtrack(self, stack: List[Decision]) -> bool:
        """Flip the most recent unflipped decision. False when none is left."""
        while stack:
            mark, literal, flipped = stack.pop()
            for assigned in self._trail[mark:]:
                del self._value[abs(assigned)]
            del self._trail[mark:]
            self._head = mark
            if not flipped:
                stack.append((mark, -literal, True))
                self.decisions += 1
                self._enqueue(-literal)
                return True
        return False

    def _choose(self) -> Optional[int]:
        """Branching literal, or None when every clause is satisfied."""
        best: Optional[int] = None
        best_size = 0
        for clause in self._clauses:
            free = []
            for lit in clause:
                value = self._literal_value(lit)
                if value is True:
                    break
                if value is None:
                    free.append(lit)
            else:
                if best is None or len(free) < best_size:
                    best, best_size = min(free, key=abs), len(free)
                    if best_size == 2:
                        break
        return best

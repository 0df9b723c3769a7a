"""
Oracle ledger: the per-run record of every NP-oracle query.

A ledger belongs to one session (one backend, one run) and is not shared
across threads.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

logger = logging.getLogger("workbench.oracle.ledger")


@dataclass(frozen=True)
class LedgerEntry:
    """One oracle query."""
    phase: str
    variable_count: int
    clause_count: int
    satisfiable: bool


class OracleLedger:
    """
    Ordered record of oracle queries, tagged by algorithm phase.
    """

    def __init__(self):
        self._entries: List[LedgerEntry] = []

    def record(self, phase: str, variable_count: int, clause_count: int, satisfiable: bool) -> LedgerEntry:
        entry = LedgerEntry(phase, variable_count, clause_count, satisfiable)
        self._entries.append(entry)
        logger.debug(
            f"Query #{len(self._entries)} [{phase}]: {variable_count} vars, "
            f"{clause_count} clauses -> {'sat' if satisfiable else 'unsat'}"
        )
        return entry

    @property
    def entries(self) -> Tuple[LedgerEntry, ...]:
        return tuple(self._entries)

    def query_count(self, phase: Optional[str] = None) -> int:
        """Number of queries, optionally restricted to one phase."""
        if phase is None:
            return len(self._entries)
        return sum(1 for entry in self._entries if entry.phase == phase)

    def totals_by_phase(self) -> Dict[str, int]:
        totals: Dict[str, int] = {}
        for entry in self._entries:
            totals[entry.phase] = totals.get(entry.phase, 0) + 1
        return totals

    def __len__(self) -> int:
        return len(self._entries)


@dataclass(frozen=True)
class PhaseSummary:
    phase: str
    queries: int
    satisfiable: int
    max_variables: int
    max_clauses: int

    @property
    def unsatisfiable(self) -> int:
        return self.queries - self.satisfiable


@dataclass(frozen=True)
class LedgerSummary:
    """Per-phase counts and maximum query sizes."""
    total_queries: int
    phases: Tuple[PhaseSummary, ...]

    def render(self) -> str:
        lines = [f"oracle queries: {self.total_queries}"]
        for summary in self.phases:
            lines.append(
                f"  {summary.phase}: queries={summary.queries} sat={summary.satisfiable} "
                f"unsat={summary.unsatisfiable} max_vars={summary.max_variables} "
                f"max_clauses={summary.max_clauses}"
            )
        return "\n".join(lines)


def ledger_report(ledger: OracleLedger) -> LedgerSummary:
    """
    Summarize a ledger per phase, phases sorted by name.

    Args:
        ledger: The session's ledger

    Returns:
        LedgerSummary with a stable text rendering
    """
    phases = []
    for name, count in sorted(ledger.totals_by_phase().items()):
        entries = [entry for entry in ledger.entries if entry.phase == name]
        phases.append(PhaseSummary(
            phase=name,
            queries=count,
            satisfiable=sum(1 for entry in entries if entry.satisfiable),
            max_variables=max(entry.variable_count for entry in entries),
            max_clauses=max(entry.clause_count for entry in entries),
        ))
    return LedgerSummary(total_queries=len(ledger), phases=tuple(phases))

"""
Run-history persistence for the workbench CLI.

A recorded run stores its command, answer, seed, wall time, resident
memory and one row per oracle query. Database problems never change a
run's outcome: they are logged and the helpers return None.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional, Protocol

import psutil
from sqlalchemy import func

from .database import get_db_session, init_database
from .models import OracleQueryRecord, RunRecord

logger = logging.getLogger("workbench.shared.history")


class QueryRow(Protocol):
    """One oracle query as the history stores it; ledger entries qualify."""
    phase: str
    variable_count: int
    clause_count: int
    satisfiable: bool


def current_memory_mb() -> Optional[float]:
    """Resident set size of this process in MB, or None if unavailable."""
    try:
        return psutil.Process().memory_info().rss / (1024 * 1024)
    except psutil.Error as e:
        logger.warning(f"Could not sample process memory: {e}")
        return None


def record_run(
    command: str,
    subcommand: str,
    answer: str,
    queries: Iterable[QueryRow],
    wall_time_seconds: float,
    seed: Optional[int] = None,
    backend: str = "builtin",
) -> Optional[int]:
    """
    Persist one run and its oracle queries.

    Args:
        command: Full argv echo
        subcommand: e.g. "solve qsat"
        answer: "yes", "no", "kernel", ...
        queries: The run's oracle queries in order; each becomes a row
        wall_time_seconds: Elapsed time of the run
        seed: Generator seed, if any
        backend: Oracle backend name

    Returns:
        The new run id, or None if the history database is unavailable
    """
    try:
        init_database()
        with get_db_session() as session:
            run = RunRecord(
                command=command,
                subcommand=subcommand,
                answer=answer,
                seed=seed,
                backend=backend,
                wall_time_seconds=wall_time_seconds,
                memory_mb=current_memory_mb(),
            )
            for position, entry in enumerate(queries, start=1):
                run.queries.append(OracleQueryRecord(
                    position=position,
                    phase=entry.phase,
                    variable_count=entry.variable_count,
                    clause_count=entry.clause_count,
                    satisfiable=entry.satisfiable,
                ))
            session.add(run)
            session.flush()
            run_id = run.id
            query_count = len(run.queries)
        logger.info(f"Recorded run {run_id} ({subcommand}: {answer}, {query_count} queries)")
        return run_id

    except Exception as e:
        logger.warning(f"Run history not recorded: {e}", exc_info=True)
        return None


@dataclass(frozen=True)
class HistorySummary:
    """Aggregated run history."""
    total_runs: int
    runs_by_subcommand: Dict[str, int] = field(default_factory=dict)
    answers_by_subcommand: Dict[str, Dict[str, int]] = field(default_factory=dict)
    queries_by_phase: Dict[str, int] = field(default_factory=dict)

    def render(self) -> str:
        lines = [f"recorded runs: {self.total_runs}"]
        for subcommand in sorted(self.runs_by_subcommand):
            answers = self.answers_by_subcommand.get(subcommand, {})
            detail = " ".join(f"{answer}={answers[answer]}" for answer in sorted(answers))
            lines.append(f"  {subcommand}: runs={self.runs_by_subcommand[subcommand]} {detail}".rstrip())
        lines.append(f"recorded queries: {sum(self.queries_by_phase.values())}")
        for phase in sorted(self.queries_by_phase):
            lines.append(f"  {phase}: queries={self.queries_by_phase[phase]}")
        return "\n".join(lines) + "\n"


def summarize_history() -> Optional[HistorySummary]:
    """
    Runs per subcommand (split by answer) and queries per phase.

    Returns:
        HistorySummary, or None if the history database is unavailable
    """
    try:
        init_database()
        with get_db_session() as session:
            total = session.query(func.count(RunRecord.id)).scalar() or 0

            runs: Dict[str, int] = {}
            answers: Dict[str, Dict[str, int]] = {}
            rows = (
                session.query(RunRecord.subcommand, RunRecord.answer, func.count(RunRecord.id))
                .group_by(RunRecord.subcommand, RunRecord.answer)
                .all()
            )
            for subcommand, answer, count in rows:
                runs[subcommand] = runs.get(subcommand, 0) + count
                answers.setdefault(subcommand, {})[answer] = count

            phases = dict(
                session.query(OracleQueryRecord.phase, func.count(OracleQueryRecord.id))
                .group_by(OracleQueryRecord.phase)
                .all()
            )
        return HistorySummary(total, runs, answers, phases)

    except Exception as e:
        logger.error(f"Failed to summarize run history: {e}", exc_info=True)
        return None

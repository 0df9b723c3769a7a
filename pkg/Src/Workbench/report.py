"""
Deterministic run reports printed on stdout.
"""
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Optional

from Src.Oracle.ledger import LedgerSummary


def render_vertex_set(vertices: Iterable[int]) -> str:
    return "{" + ",".join(str(v) for v in sorted(vertices)) + "}"


@dataclass
class RunReport:
    """
    What one CLI run asked and answered.

    Wall time and memory are not part of the report; they are logged and
    stored in the run history so that reports stay byte-stable.
    """
    command: str
    answer: str = ""
    seed: Optional[int] = None
    backend: str = "builtin"
    details: List[str] = field(default_factory=list)
    ledger: Optional[LedgerSummary] = None

    def add(self, line: str) -> None:
        self.details.append(line)

    def add_sequence(self, covers: Iterable[FrozenSet[int]], padding: int) -> None:
        self.add("sequence: " + " ".join(render_vertex_set(cover) for cover in covers))
        if padding:
            self.add(f"padding: {padding} copies of T")

    def render(self) -> str:
        lines = [
            f"command: {self.command}",
            f"seed: {'-' if self.seed is None else self.seed}",
            f"backend: {self.backend}",
            f"answer: {self.answer}",
        ]
        lines.extend(self.details)
        if self.ledger is not None:
            lines.append(self.ledger.render())
        return "\n".join(lines) + "\n"

"""
NP-oracle abstraction: SAT backends and the per-run query ledger.
"""
from .backends import OracleBackend, parse_solver_output
from .ledger import LedgerEntry, LedgerSummary, OracleLedger, ledger_report
from .queries import OracleVerdict, query_dnf_tautology, query_sat

__all__ = [
    "LedgerEntry",
    "LedgerSummary",
    "OracleBackend",
    "OracleLedger",
    "OracleVerdict",
    "ledger_report",
    "parse_solver_output",
    "query_dnf_tautology",
    "query_sat",
]

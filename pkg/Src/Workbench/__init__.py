"""
Batch command-line front end: graph and DVCR bundle codecs, run reports,
brute-force verification suites and subcommand dispatch.
"""
from .codecs import GraphDocument, parse_dvcr_bundle, parse_graph, serialize_cfvd, serialize_dvcr_bundle, serialize_graph
from .report import RunReport
from .verify import SUITES, SuiteResult, run_suites

__all__ = [
    "SUITES",
    "GraphDocument",
    "RunReport",
    "SuiteResult",
    "parse_dvcr_bundle",
    "parse_graph",
    "run_suites",
    "serialize_cfvd",
    "serialize_dvcr_bundle",
    "serialize_graph",
]

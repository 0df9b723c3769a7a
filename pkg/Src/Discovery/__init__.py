"""
Discovery problems: structures hidden behind per-pair SAT instances, the
DVCR kernel and BFS decider, the hardness gadget and the generic wrapper.
"""
from .gadget import YES_WITNESS, gen_dvcr_from_cnf
from .incidence import IncidenceSpec, IncidenceTable, discover_graph, discover_incidences, make_trivial_cnf
from .kernel import kernelize_dvcr
from .reconfiguration import (
    DEFAULT_DVCR_GUARD,
    DvcrInstance,
    ReconfSequence,
    solve_dvcr,
    solve_dvcr_bfs,
    trivial_no_dvcr,
)
from .vertex_cover import FullKernel, is_minimal_vertex_cover, is_vertex_cover, minimal_vertex_covers_upto, vc_full_kernel
from .wrapper import discovery_kernel_wrap
from .generators import gen_random_dvcr, hide_graph

__all__ = [
    "DEFAULT_DVCR_GUARD",
    "YES_WITNESS",
    "DvcrInstance",
    "FullKernel",
    "IncidenceSpec",
    "IncidenceTable",
    "ReconfSequence",
    "discover_graph",
    "discover_incidences",
    "discovery_kernel_wrap",
    "gen_dvcr_from_cnf",
    "gen_random_dvcr",
    "hide_graph",
    "is_minimal_vertex_cover",
    "is_vertex_cover",
    "kernelize_dvcr",
    "make_trivial_cnf",
    "minimal_vertex_covers_upto",
    "solve_dvcr",
    "solve_dvcr_bfs",
    "trivial_no_dvcr",
    "vc_full_kernel",
]

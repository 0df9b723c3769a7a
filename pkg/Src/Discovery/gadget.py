"""
Four-vertex DVCR gadget: a yes-instance exactly when the embedded CNF is
unsatisfiable.

Vertices a, b, c, d are 1..4. Pairs ab, bc, cd are always edges, ad is an
edge iff the CNF is satisfiable, the other pairs never. S = {a, c},
T = {b, d}, k = 3, l = 5. On the path the walk
{a,c}, {a,b,c}, {b,c}, {b,c,d}, {b,d} exists; on the 4-cycle every
three-vertex neighbor of S is a dead end.
"""
from Src.Formula.formula import CnfFormula

from .incidence import IncidenceSpec, make_trivial_cnf
from .reconfiguration import DvcrInstance

A, B, C, D = 1, 2, 3, 4

YES_WITNESS = (
    frozenset({A, C}),
    frozenset({A, B, C}),
    frozenset({B, C}),
    frozenset({B, C, D}),
    frozenset({B, D}),
)


def gen_dvcr_from_cnf(phi: CnfFormula) -> DvcrInstance:
    yes = make_trivial_cnf(True)
    spec = IncidenceSpec.for_graph(4, {(A, B): yes, (B, C): yes, (C, D): yes, (A, D): phi})
    return DvcrInstance(spec, frozenset({A, C}), frozenset({B, D}), 3, 5)

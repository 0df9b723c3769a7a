"""
Seeded random exists-forall DNF instances.
"""
from Src.Formula.formula import DnfFormula, QDnfInstance
from Src.Formula.generators import Seed, make_rng, random_clause


def gen_random_qdnf(n1: int, n2: int, terms: int, term_len: int, seed: Seed = None) -> QDnfInstance:
    """
    Random instance with X = 1..n1 and Y = n1+1..n1+n2.

    Each term has min(term_len, n1 + n2) distinct variables with random polarities.
    """
    rng = make_rng(seed)
    num_vars = n1 + n2
    rows = [random_clause(rng, num_vars, term_len) for _ in range(terms)]
    return QDnfInstance(
        DnfFormula(rows, num_vars),
        set(range(1, n1 + 1)),
        set(range(n1 + 1, num_vars + 1)),
    )

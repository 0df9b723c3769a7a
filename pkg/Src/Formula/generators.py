"""
Seeded random CNF generators for test corpora and fixtures.
"""
import random
from typing import List, Optional, Union

from .formula import CnfFormula, Literal

Seed = Union[int, random.Random, None]


def make_rng(seed: Seed) -> random.Random:
    """Accept either a seed or an existing generator."""
    if isinstance(seed, random.Random):
        return seed
    return random.Random(seed)


def random_clause(rng: random.Random, num_vars: int, clause_len: int) -> List[Literal]:
    """One clause over distinct variables with random polarities."""
    variables = rng.sample(range(1, num_vars + 1), min(clause_len, num_vars))
    return [Literal(variable, rng.random() < 0.5) for variable in variables]


def gen_random_cnf(num_vars: int, num_clauses: int, clause_len: int, seed: Seed = None) -> CnfFormula:
    """
    Uniform random k-CNF.

    Args:
        num_vars: Number of variables (>= 1)
        num_clauses: Number of clauses
        clause_len: Literals per clause (capped at num_vars)
        seed: Integer seed or a random.Random instance
    """
    rng = make_rng(seed)
    clauses = [random_clause(rng, num_vars, clause_len) for _ in range(num_clauses)]
    return CnfFormula(clauses, num_vars)


def gen_planted_cnf(num_vars: int, num_clauses: int, clause_len: int, seed: Seed = None) -> CnfFormula:
    """Random k-CNF satisfied by a hidden assignment."""
    rng = make_rng(seed)
    planted = {variable: rng.random() < 0.5 for variable in range(1, num_vars + 1)}
    clauses = []
    for _ in range(num_clauses):
        clause = random_clause(rng, num_vars, clause_len)
        if not any(planted[lit.variable] == lit.polarity for lit in clause):
            index = rng.randrange(len(clause))
            clause[index] = clause[index].negated()
        clauses.append(clause)
    return CnfFormula(clauses, num_vars)


def gen_unsatisfiable_cnf(
    num_vars: int,
    num_clauses: int,
    clause_len: int,
    seed: Seed = None,
    core_vars: Optional[int] = None,
) -> CnfFormula:
    """
    Random clauses plus every sign pattern over a few variables, shuffled.

    The full sign pattern over `core_vars` variables is unsatisfiable on its own.
    """
    rng = make_rng(seed)
    core_size = min(num_vars, core_vars if core_vars is not None else 3)
    core_variables = rng.sample(range(1, num_vars + 1), core_size)
    clauses = [random_clause(rng, num_vars, clause_len) for _ in range(num_clauses)]
    for pattern in range(1 << core_size):
        clauses.append([
            Literal(variable, bool((pattern >> bit) & 1))
            for bit, variable in enumerate(core_variables)
        ])
    rng.shuffle(clauses)
    return CnfFormula(clauses, num_vars)

"""
Exists-forall DNF: brute-force and FPT^NP[few] deciders, the existential
subformula kernel, and the OR-cross-composition.
"""
from .bruteforce import DEFAULT_QDNF_GUARD, decide_qdnf_bruteforce
from .composition import compose_qdnf_or
from .generators import gen_random_qdnf
from .kernel import (
    SubformulaSplit,
    existential_subformula_size,
    kernelize_qdnf,
    split_existential,
    trivial_no_instance,
    trivial_yes_instance,
)
from .solver import decide_qdnf_fptnp

__all__ = [
    "DEFAULT_QDNF_GUARD",
    "SubformulaSplit",
    "compose_qdnf_or",
    "decide_qdnf_bruteforce",
    "decide_qdnf_fptnp",
    "existential_subformula_size",
    "gen_random_qdnf",
    "kernelize_qdnf",
    "split_existential",
    "trivial_no_instance",
    "trivial_yes_instance",
]

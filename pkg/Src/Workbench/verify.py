"""
Seeded equivalence suites: every oracle algorithm checked against brute force.

Each suite draws its corpus from a generator seeded with (seed, suite name),
so suites are reproducible one at a time as well as under "all".
"""
import logging
import os
import random
import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence

from Src.CliqueDeletion.bruteforce import count_k_cliques_bruteforce, solve_cfvd_bruteforce
from Src.CliqueDeletion.composition import compose_wcfvd_or
from Src.CliqueDeletion.generators import gen_random_cfvd
from Src.CliqueDeletion.graph import CfvdInstance
from Src.CliqueDeletion.kernel import kernelize_cfvd
from Src.CliqueDeletion.search_tree import solve_cfvd_searchtree
from Src.Discovery.gadget import YES_WITNESS, gen_dvcr_from_cnf
from Src.Discovery.generators import gen_random_dvcr, hide_graph
from Src.Discovery.incidence import discover_graph
from Src.Discovery.kernel import kernelize_dvcr
from Src.Discovery.reconfiguration import DEFAULT_DVCR_GUARD, solve_dvcr
from Src.Discovery.wrapper import discovery_kernel_wrap
from Src.Formula.formula import brute_force_satisfiable
from Src.Formula.generators import gen_random_cnf
from Src.Oracle.backends import OracleBackend
from Src.Oracle.ledger import OracleLedger
from Src.Oracle.queries import query_sat
from Src.Qsat.bruteforce import decide_qdnf_bruteforce
from Src.Qsat.composition import compose_qdnf_or, padded_count
from Src.Qsat.generators import gen_random_qdnf
from Src.Qsat.kernel import kernelize_qdnf
from Src.Qsat.solver import decide_qdnf_fptnp
from Src.Shared.errors import WorkbenchError

logger = logging.getLogger("workbench.cli.verify")

PASS = "PASS"
FAIL = "FAIL"
SKIP = "SKIP"


class PropertyViolation(Exception):
    """A checked property does not hold."""


class SuiteSkipped(Exception):
    """A suite cannot run in this environment."""


def check(condition: bool, message: str) -> None:
    if not condition:
        raise PropertyViolation(message)


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    status: str
    detail: str

    def render(self) -> str:
        return f"{self.status} {self.suite}: {self.detail}"


SuiteCheck = Callable[[random.Random, int, OracleBackend, OracleLedger], str]


@dataclass(frozen=True)
class Suite:
    name: str
    run: SuiteCheck
    default_trials: int


def _seed(rng: random.Random) -> int:
    return rng.randrange(2 ** 31)


def _qsat_corpus(rng: random.Random, trials: int):
    for _ in range(trials):
        yield gen_random_qdnf(rng.randint(1, 3), rng.randint(1, 6), rng.randint(0, 8), rng.randint(1, 4), rng)


def verify_qsat_kernel(rng: random.Random, trials: int, backend: OracleBackend, ledger: OracleLedger) -> str:
    for index, inst in enumerate(_qsat_corpus(rng, trials)):
        before = len(ledger)
        kernel = kernelize_qdnf(inst, backend, ledger)
        used = len(ledger) - before
        check(used == 1, f"instance {index}: kernel used {used} queries")
        check(
            decide_qdnf_bruteforce(kernel) == decide_qdnf_bruteforce(inst),
            f"instance {index}: kernel changes the answer",
        )
    return f"{trials} instances, answers preserved, 1 query each"


def verify_qsat_fptnp(rng: random.Random, trials: int, backend: OracleBackend, ledger: OracleLedger) -> str:
    for index, inst in enumerate(_qsat_corpus(rng, trials)):
        before = len(ledger)
        answer = decide_qdnf_fptnp(inst, backend, ledger)
        used = len(ledger) - before
        budget = 2 ** len(inst.existential)
        check(used <= budget, f"instance {index}: {used} queries exceed 2^|X| = {budget}")
        check(answer == decide_qdnf_bruteforce(inst), f"instance {index}: answer differs from brute force")
    return f"{trials} instances agree, queries within 2^|X|"


def verify_qsat_compose(rng: random.Random, trials: int, backend: OracleBackend, ledger: OracleLedger) -> str:
    for t in (2, 4, 8):
        for trial in range(trials):
            n1, n2 = rng.randint(1, 2), rng.randint(1, 3)
            instances = [
                gen_random_qdnf(n1, n2, rng.randint(1, 4), rng.randint(1, 3), rng) for _ in range(t)
            ]
            composed = compose_qdnf_or(instances)
            expected_vars = n1 + n2 + padded_count(t).bit_length() - 1
            check(
                composed.variable_count == expected_vars,
                f"t={t} trial {trial}: {composed.variable_count} variables, expected {expected_vars}",
            )
            check(
                decide_qdnf_bruteforce(composed) == any(decide_qdnf_bruteforce(inst) for inst in instances),
                f"t={t} trial {trial}: OR-law violated",
            )
    return f"t in (2, 4, 8), {trials} trials each, OR-law holds"


def _cfvd_corpus(rng: random.Random, trials: int, alternate_weights: bool = False):
    for index in range(trials):
        n, k, h = rng.randint(1, 9), rng.randint(1, 4), rng.randint(0, 3)
        p = rng.choice([0.3, 0.5, 0.7])
        weighted = alternate_weights and index % 2 == 1
        yield gen_random_cfvd(n, p, h, k, seed=_seed(rng), weighted=weighted)


def verify_cfvd_search(rng: random.Random, trials: int, backend: OracleBackend, ledger: OracleLedger) -> str:
    for index, inst in enumerate(_cfvd_corpus(rng, trials)):
        before = len(ledger)
        answer = solve_cfvd_searchtree(inst, backend, ledger)
        used = len(ledger) - before
        budget = sum(inst.k ** i for i in range(inst.h + 1))
        check(used <= budget, f"instance {index}: {used} queries exceed {budget}")
        check(answer == solve_cfvd_bruteforce(inst), f"instance {index}: answer differs from brute force")
    return f"{trials} graphs agree, queries within sum k^i"


def verify_cfvd_kernel(rng: random.Random, trials: int, backend: OracleBackend, ledger: OracleLedger) -> str:
    for index, inst in enumerate(_cfvd_corpus(rng, trials, alternate_weights=True)):
        before = len(ledger)
        kernel = kernelize_cfvd(inst, backend, ledger)
        used = len(ledger) - before
        n = inst.graph.vertex_count
        check(used == n, f"instance {index}: {used} queries for {n} vertices")
        check(
            solve_cfvd_bruteforce(kernel) == solve_cfvd_bruteforce(inst),
            f"instance {index}: kernel changes the answer",
        )
        bound = inst.k * count_k_cliques_bruteforce(inst.graph, inst.k, inst.weighted)
        check(
            kernel.graph.vertex_count <= bound,
            f"instance {index}: {kernel.graph.vertex_count} survivors exceed k * #cliques = {bound}",
        )
    return f"{trials} graphs (half weighted), answers preserved, n queries each"


def verify_wcfvd_compose(rng: random.Random, trials: int, backend: OracleBackend, ledger: OracleLedger) -> str:
    log_t = 2
    for trial in range(trials):
        n = rng.randint(3, 5)
        h, k = rng.randint(1, n - 1), rng.randint(1, n - 1)
        instances = [gen_random_cfvd(n, 0.5, h, k, seed=_seed(rng)) for _ in range(3)]
        composed = compose_wcfvd_or(instances)
        check(
            (composed.h, composed.k) == (h + n * log_t, k + n * log_t),
            f"trial {trial}: (h*, k*) = {(composed.h, composed.k)}",
        )
        answer = solve_cfvd_bruteforce(composed, guard=composed.graph.vertex_count, method="branching")
        check(
            answer == any(solve_cfvd_bruteforce(inst) for inst in instances),
            f"trial {trial}: OR-law violated",
        )
    return f"{trials} triples at width 4, OR-law holds under exact weights"


def verify_dvcr_gadget(rng: random.Random, trials: int, backend: OracleBackend, ledger: OracleLedger) -> str:
    unsatisfiable = 0
    for index in range(trials):
        num_vars = rng.randint(1, 4)
        phi = gen_random_cnf(num_vars, rng.randint(1, 4 * num_vars), rng.randint(1, 3), rng)
        expected = brute_force_satisfiable(phi) is None
        unsatisfiable += expected
        answer, witness = solve_dvcr(gen_dvcr_from_cnf(phi), backend, ledger)
        check(answer == expected, f"formula {index}: gadget answer {answer}, expected {expected}")
        if answer:
            check(witness.covers == YES_WITNESS, f"formula {index}: unexpected witness {witness.covers}")
    return f"{trials} formulas ({unsatisfiable} unsatisfiable), yes exactly on unsatisfiable"


def verify_dvcr_kernel(rng: random.Random, trials: int, backend: OracleBackend, ledger: OracleLedger) -> str:
    for index in range(trials):
        n, k = rng.randint(1, 12), rng.randint(0, 5)
        p = rng.choice([0.15, 0.25, 0.4])
        inst = gen_random_dvcr(n, k, seed=_seed(rng), edge_probability=p)
        before = ledger.query_count("discover")
        kernel = kernelize_dvcr(inst, backend, ledger)
        used = ledger.query_count("discover") - before
        pairs = n * (n - 1) // 2
        check(used == pairs, f"instance {index}: discovery used {used} queries")
        bound = max(3 * k * k + 2 * k, 2)
        check(kernel.vertex_count <= bound, f"instance {index}: {kernel.vertex_count} vertices exceed {bound}")
        original, _ = solve_dvcr(inst, backend, ledger)
        reduced, _ = solve_dvcr(kernel, backend, ledger, guard=max(DEFAULT_DVCR_GUARD, kernel.vertex_count))
        check(original == reduced, f"instance {index}: kernel changes the answer")
    return f"{trials} instances, answers preserved, C(n,2) discovery queries"


def verify_discovery_wrap(rng: random.Random, trials: int, backend: OracleBackend, ledger: OracleLedger) -> str:
    for index in range(trials):
        n, h, k = rng.randint(2, 7), rng.randint(0, 2), rng.randint(1, 3)
        inst = gen_random_cfvd(n, 0.5, h, k, seed=_seed(rng))

        def base(graph):
            return kernelize_cfvd(CfvdInstance(graph, h, k), backend, ledger).graph

        wrapped = discovery_kernel_wrap(hide_graph(inst.graph, rng, max_cnf_vars=5), base, backend, ledger)
        kernel_graph = discover_graph(wrapped, backend, ledger)
        check(
            solve_cfvd_bruteforce(CfvdInstance(kernel_graph, h, k)) == solve_cfvd_bruteforce(inst),
            f"instance {index}: wrapped kernel changes the answer",
        )
    return f"{trials} hidden graphs, wrapped CFVD kernel preserves answers"


def verify_oracle_crosscheck(rng: random.Random, trials: int, backend: OracleBackend, ledger: OracleLedger) -> str:
    if not os.getenv("ORACLE_SOLVER_CMD"):
        raise SuiteSkipped("ORACLE_SOLVER_CMD unset")
    external = OracleBackend.from_environment("external")
    builtin = OracleBackend.builtin()
    for index in range(trials):
        num_vars = rng.randint(1, 20)
        cnf = gen_random_cnf(num_vars, rng.randint(1, 5 * num_vars), 3, rng)
        ours = query_sat(builtin, ledger, cnf, "crosscheck").satisfiable
        theirs = query_sat(external, ledger, cnf, "crosscheck").satisfiable
        check(ours == theirs, f"CNF {index}: builtin says {ours}, external says {theirs}")
    return f"{trials} CNFs, builtin and external agree"


SUITES: Dict[str, Suite] = {
    suite.name: suite
    for suite in (
        Suite("qsat-kernel", verify_qsat_kernel, 200),
        Suite("qsat-fptnp", verify_qsat_fptnp, 200),
        Suite("qsat-compose", verify_qsat_compose, 50),
        Suite("cfvd-search", verify_cfvd_search, 100),
        Suite("cfvd-kernel", verify_cfvd_kernel, 100),
        Suite("wcfvd-compose", verify_wcfvd_compose, 20),
        Suite("dvcr-gadget", verify_dvcr_gadget, 50),
        Suite("dvcr-kernel", verify_dvcr_kernel, 100),
        Suite("discovery-wrap", verify_discovery_wrap, 50),
        Suite("oracle-crosscheck", verify_oracle_crosscheck, 500),
    )
}

ALL = "all"


def run_suite(
    suite: Suite,
    seed: int,
    backend: OracleBackend,
    trials: Optional[int] = None,
    ledger: Optional[OracleLedger] = None,
) -> SuiteResult:
    """
    Run one suite. Its oracle queries are recorded in `ledger`, a fresh one
    when none is given.
    """
    rng = random.Random(f"{seed}:{suite.name}")
    count = suite.default_trials if trials is None else trials
    if ledger is None:
        ledger = OracleLedger()
    started = time.perf_counter()
    before = len(ledger)
    try:
        result = SuiteResult(suite.name, PASS, suite.run(rng, count, backend, ledger))
    except PropertyViolation as e:
        result = SuiteResult(suite.name, FAIL, str(e))
    except SuiteSkipped as e:
        result = SuiteResult(suite.name, SKIP, str(e))
    except WorkbenchError as e:
        logger.error(f"Suite {suite.name} aborted: {e}", exc_info=True)
        result = SuiteResult(suite.name, FAIL, f"{type(e).__name__}: {e}")
    logger.info(
        f"Suite {suite.name}: {result.status} in {time.perf_counter() - started:.2f}s, "
        f"{len(ledger) - before} oracle queries"
    )
    return result


def run_suites(
    names: Sequence[str],
    seed: int,
    backend: OracleBackend,
    trials: Optional[int] = None,
    ledger: Optional[OracleLedger] = None,
) -> List[SuiteResult]:
    """Run the named suites ("all" expands to every suite) in registry order, sharing one ledger."""
    if ledger is None:
        ledger = OracleLedger()
    selected = list(SUITES) if ALL in names else [name for name in SUITES if name in names]
    return [run_suite(SUITES[name], seed, backend, trials, ledger) for name in selected]

"""
Workbench command-line interface.

    python -m Src.Workbench.cli solve qsat --in instance.qdnf
    python -m Src.Workbench.cli kernelize dvcr --in bundle.dvcr --out kernel.dvcr
    python -m Src.Workbench.cli compose qsat-or --in a.qdnf b.qdnf c.qdnf d.qdnf
    python -m Src.Workbench.cli verify all --seed 1
    python -m Src.Workbench.cli gen cfvd --param 8,2,3 --seed 4
    python -m Src.Workbench.cli report

Exit status: 0 yes (or success), 1 no (or a failed verify suite),
2 usage or input error, 3 oracle failure. Reports go to stdout, logs to stderr.
"""
import argparse
import logging
import shlex
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from Src.CliqueDeletion.bruteforce import solve_cfvd_bruteforce, trivial_yes_shortcut
from Src.CliqueDeletion.composition import compose_wcfvd_or
from Src.CliqueDeletion.generators import gen_random_cfvd
from Src.CliqueDeletion.kernel import kernelize_cfvd
from Src.CliqueDeletion.search_tree import solve_cfvd_searchtree
from Src.Discovery.gadget import gen_dvcr_from_cnf
from Src.Discovery.generators import gen_random_dvcr
from Src.Discovery.kernel import kernelize_dvcr
from Src.Discovery.reconfiguration import DvcrInstance, solve_dvcr
from Src.Formula.codecs import parse_dimacs_cnf, parse_qdnf, serialize_dimacs_cnf, serialize_qdnf
from Src.Formula.formula import QDnfInstance
from Src.Formula.generators import gen_random_cnf
from Src.Oracle.backends import BUILTIN, DEFAULT_TIMEOUT, EXTERNAL, OracleBackend
from Src.Oracle.ledger import OracleLedger, ledger_report
from Src.Qsat.bruteforce import decide_qdnf_bruteforce
from Src.Qsat.composition import compose_qdnf_or
from Src.Qsat.generators import gen_random_qdnf
from Src.Qsat.kernel import existential_subformula_size, kernelize_qdnf
from Src.Qsat.solver import decide_qdnf_fptnp
from Src.Shared.errors import (
    FormatError,
    GuardExceededError,
    InvalidInstanceError,
    MalformedInstanceError,
    OracleFailureError,
    ShapeMismatchError,
    WorkbenchError,
)
from Src.Shared.database import check_database_connection
from Src.Shared.history import current_memory_mb, record_run, summarize_history
from Src.Shared.utils import ensure_parent_exists, setup_logging

from .codecs import parse_dvcr_bundle, parse_graph, serialize_cfvd, serialize_dvcr_bundle
from .report import RunReport
from .verify import ALL, FAIL, SUITES, run_suites

logger = logging.getLogger("workbench.cli.main")

EXIT_YES = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_ORACLE = 3

INPUT_ERRORS = (FormatError, InvalidInstanceError, ShapeMismatchError, MalformedInstanceError, GuardExceededError)

PROBLEMS = ("qsat", "cfvd", "dvcr")
CONSTRUCTIONS = ("qsat-or", "wcfvd-or")
FAMILIES = ("qdnf", "cnf", "cfvd", "dvcr", "gadget")

GEN_DEFAULTS: Dict[str, Tuple[int, ...]] = {
    "qdnf": (2, 3, 6, 3),
    "cnf": (5, 20, 3),
    "cfvd": (8, 2, 3),
    "dvcr": (6, 3),
}


class UsageError(WorkbenchError):
    """Flags do not fit the chosen subcommand."""


@dataclass
class Session:
    """Per-run state: one backend, one ledger, one report."""
    args: argparse.Namespace
    backend: OracleBackend
    ledger: OracleLedger
    report: Optional[RunReport]

    def guard_kwargs(self) -> Dict[str, int]:
        return {} if self.args.guard is None else {"guard": self.args.guard}


# =============================================================================
# Argument helpers
# =============================================================================
def parse_param(value: Optional[str], count: int, names: str) -> Optional[Tuple[int, ...]]:
    """Parse "--param 2,3" into a tuple of `count` integers."""
    if value is None:
        return None
    try:
        numbers = tuple(int(token) for token in value.split(","))
    except ValueError:
        raise UsageError(f"--param expects {names} as comma-separated integers, got {value!r}")
    if len(numbers) != count:
        raise UsageError(f"--param expects {names}, got {value!r}")
    return numbers


def single_input(args: argparse.Namespace) -> str:
    if not args.inputs or len(args.inputs) != 1:
        raise UsageError("exactly one --in file is required")
    return Path(args.inputs[0]).read_text()


def all_inputs(args: argparse.Namespace) -> List[str]:
    if not args.inputs:
        raise UsageError("at least one --in file is required")
    return [Path(path).read_text() for path in args.inputs]


def write_output(path: str, text: str) -> None:
    target = Path(path)
    ensure_parent_exists(target)
    target.write_text(text)
    logger.info(f"Wrote {target}")


def emit(session: Session, text: str, label: str) -> None:
    """Write instance text to --out (and report it), or print it on stdout."""
    if session.args.out:
        write_output(session.args.out, text)
        session.report.add(f"{label} written to: {session.args.out}")
    else:
        session.report = None
        sys.stdout.write(text)


def make_backend(args: argparse.Namespace) -> OracleBackend:
    if args.backend == BUILTIN:
        return OracleBackend.builtin()
    if args.solver_cmd:
        return OracleBackend.external(args.solver_cmd, args.timeout or DEFAULT_TIMEOUT)
    backend = OracleBackend.from_environment(EXTERNAL)
    if args.timeout:
        return OracleBackend.external(backend.command, args.timeout)
    return backend


def check_method(args: argparse.Namespace, allowed: Sequence[str], default: str) -> str:
    method = args.method or default
    if method not in allowed:
        raise UsageError(f"--method {method} does not apply; choose from {', '.join(allowed)}")
    return method


def describe_qdnf(label: str, inst: QDnfInstance) -> str:
    return (
        f"{label}: vars={inst.variable_count} |X|={len(inst.existential)} |Y|={len(inst.universal)} "
        f"terms={len(inst.formula.terms)} size={inst.formula.size()}"
    )


def describe_dvcr(label: str, inst: DvcrInstance) -> str:
    return f"{label}: n={inst.vertex_count} |S|={len(inst.source)} |T|={len(inst.target)} k={inst.k} l={inst.length}"


def load_dvcr(session: Session) -> DvcrInstance:
    inst = parse_dvcr_bundle(single_input(session.args))
    override = parse_param(session.args.param, 2, "k,l")
    if override:
        inst = DvcrInstance(inst.incidence, inst.source, inst.target, *override)
    return inst


def load_cfvd(session: Session):
    doc = parse_graph(single_input(session.args))
    return doc.to_instance(parse_param(session.args.param, 2, "h,k"), session.args.weighted)


def answer_status(session: Session, answer: bool) -> int:
    session.report.answer = "yes" if answer else "no"
    return EXIT_YES if answer else EXIT_NO


# =============================================================================
# solve / kernelize
# =============================================================================
def solve_qsat(session: Session) -> int:
    inst = parse_qdnf(single_input(session.args))
    session.report.add(describe_qdnf("instance", inst))
    session.report.add(f"existential subformula size: {existential_subformula_size(inst)}")
    method = check_method(session.args, ("fptnp", "brute"), "fptnp")
    if method == "brute":
        return answer_status(session, decide_qdnf_bruteforce(inst, **session.guard_kwargs()))
    return answer_status(session, decide_qdnf_fptnp(inst, session.backend, session.ledger))


def solve_cfvd(session: Session) -> int:
    inst = load_cfvd(session)
    session.report.add(
        f"instance: n={inst.graph.vertex_count} m={inst.graph.edge_count} h={inst.h} k={inst.k} "
        f"weighted={'yes' if inst.weighted else 'no'}"
    )
    method = check_method(session.args, ("search", "brute", "branching"), "search")
    if method == "search":
        return answer_status(session, solve_cfvd_searchtree(inst, session.backend, session.ledger))
    brute_method = "subsets" if method == "brute" else "branching"
    return answer_status(session, solve_cfvd_bruteforce(inst, method=brute_method, **session.guard_kwargs()))


def solve_dvcr_command(session: Session) -> int:
    inst = load_dvcr(session)
    check_method(session.args, ("bfs",), "bfs")
    session.report.add(describe_dvcr("instance", inst))
    answer, witness = solve_dvcr(inst, session.backend, session.ledger, **session.guard_kwargs())
    if witness is not None:
        session.report.add_sequence(witness.covers, witness.padding)
    return answer_status(session, answer)


def kernelize_qsat(session: Session) -> int:
    inst = parse_qdnf(single_input(session.args))
    kernel = kernelize_qdnf(inst, session.backend, session.ledger)
    session.report.add(describe_qdnf("input", inst))
    session.report.add(describe_qdnf("kernel", kernel))
    write_output(session.args.out, serialize_qdnf(kernel))
    session.report.answer = "kernel"
    return EXIT_YES


def kernelize_cfvd_command(session: Session) -> int:
    inst = load_cfvd(session)
    kernel = kernelize_cfvd(inst, session.backend, session.ledger)
    if session.args.shortcut:
        kernel = trivial_yes_shortcut(kernel, **session.guard_kwargs()) or kernel
    session.report.add(f"input: n={inst.graph.vertex_count} m={inst.graph.edge_count} h={inst.h} k={inst.k}")
    session.report.add(f"kernel: n={kernel.graph.vertex_count} m={kernel.graph.edge_count} h={kernel.h} k={kernel.k}")
    write_output(session.args.out, serialize_cfvd(kernel))
    session.report.answer = "kernel"
    return EXIT_YES


def kernelize_dvcr_command(session: Session) -> int:
    inst = load_dvcr(session)
    kernel = kernelize_dvcr(inst, session.backend, session.ledger)
    session.report.add(describe_dvcr("input", inst))
    session.report.add(describe_dvcr("kernel", kernel))
    write_output(session.args.out, serialize_dvcr_bundle(kernel))
    session.report.answer = "kernel"
    return EXIT_YES


SOLVERS: Dict[str, Callable[[Session], int]] = {
    "qsat": solve_qsat,
    "cfvd": solve_cfvd,
    "dvcr": solve_dvcr_command,
}

KERNELIZERS: Dict[str, Callable[[Session], int]] = {
    "qsat": kernelize_qsat,
    "cfvd": kernelize_cfvd_command,
    "dvcr": kernelize_dvcr_command,
}


# =============================================================================
# compose / gen / verify / report
# =============================================================================
def compose_command(session: Session) -> int:
    texts = all_inputs(session.args)
    session.report.answer = "composed"
    if session.args.target == "qsat-or":
        composed = compose_qdnf_or([parse_qdnf(text) for text in texts])
        session.report.add(describe_qdnf("composed", composed))
        emit(session, serialize_qdnf(composed), "composed instance")
    else:
        override = parse_param(session.args.param, 2, "h,k")
        instances = [parse_graph(text).to_instance(override) for text in texts]
        composed = compose_wcfvd_or(instances)
        session.report.add(
            f"composed: n={composed.graph.vertex_count} m={composed.graph.edge_count} "
            f"h*={composed.h} k*={composed.k}"
        )
        emit(session, serialize_cfvd(composed), "composed instance")
    return EXIT_YES


def gen_command(session: Session) -> int:
    args = session.args
    family = args.target
    seed = session.report.seed
    if family == "gadget":
        text = serialize_dvcr_bundle(gen_dvcr_from_cnf(parse_dimacs_cnf(single_input(args))))
    else:
        default = GEN_DEFAULTS[family]
        names = {"qdnf": "n1,n2,terms,term_len", "cnf": "vars,clauses,len", "cfvd": "n,h,k", "dvcr": "n,k"}[family]
        params = parse_param(args.param, len(default), names) or default
        if family == "qdnf":
            text = serialize_qdnf(gen_random_qdnf(*params, seed=seed))
        elif family == "cnf":
            text = serialize_dimacs_cnf(gen_random_cnf(*params, seed=seed))
        elif family == "cfvd":
            n, h, k = params
            p = 0.5 if args.edge_probability is None else args.edge_probability
            text = serialize_cfvd(gen_random_cfvd(n, p, h, k, seed=seed, weighted=args.weighted))
        else:
            n, k = params
            p = 0.25 if args.edge_probability is None else args.edge_probability
            text = serialize_dvcr_bundle(gen_random_dvcr(n, k, seed=seed, edge_probability=p))
    session.report.answer = "generated"
    session.report.add(f"family: {family}")
    emit(session, text, "instance")
    return EXIT_YES


def verify_command(session: Session) -> int:
    results = run_suites(
        session.args.suites, session.report.seed, session.backend, session.args.trials, session.ledger
    )
    for result in results:
        session.report.add(result.render())
    failed = any(result.status == FAIL for result in results)
    session.report.answer = "fail" if failed else "pass"
    return EXIT_NO if failed else EXIT_YES


def report_command(session: Session) -> int:
    session.report = None
    summary = summarize_history() if check_database_connection() else None
    if summary is None:
        logger.error("Run history is unavailable; check WORKBENCH_DATABASE_URL")
        return EXIT_USAGE
    sys.stdout.write(summary.render())
    return EXIT_YES


# =============================================================================
# Parser
# =============================================================================
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--backend",
        choices=[BUILTIN, EXTERNAL],
        default=BUILTIN,
        help="SAT oracle backend (default: builtin)"
    )
    common.add_argument(
        "--solver-cmd",
        help="External solver command template; {cnf} is replaced by the CNF path (default: $ORACLE_SOLVER_CMD)"
    )
    common.add_argument(
        "--timeout",
        type=float,
        default=None,
        help=f"External solver timeout in seconds (default: $ORACLE_TIMEOUT or {DEFAULT_TIMEOUT:g})"
    )
    common.add_argument("--seed", type=int, default=None, help="Generator seed (default: 0 for gen and verify)")
    common.add_argument("--guard", type=int, default=None, help="Brute-force size limit")
    common.add_argument("--record", action="store_true", help="Store the run in the history database")
    common.add_argument(
        "--log-level",
        type=str,
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Logging level (default: WARNING)"
    )

    instance = argparse.ArgumentParser(add_help=False)
    instance.add_argument("--in", dest="inputs", nargs="+", metavar="PATH", help="Input instance file(s)")
    instance.add_argument("--param", help="Parameter override, e.g. h,k for cfvd or k,l for dvcr")
    instance.add_argument("--weighted", action="store_true", help="Treat graphs as vertex-weighted")
    instance.add_argument("--method", choices=["fptnp", "search", "bfs", "brute", "branching"], help="Decider")

    parser = argparse.ArgumentParser(
        prog="workbench",
        description="Oracle kernelization workbench: QSAT, clique deletion and discovery reconfiguration",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", parents=[common, instance], help="Decide an instance")
    solve.add_argument("target", choices=PROBLEMS)

    kernelize = commands.add_parser("kernelize", parents=[common, instance], help="Kernelize an instance")
    kernelize.add_argument("target", choices=PROBLEMS)
    kernelize.add_argument("--out", required=True, help="Kernel output path")
    kernelize.add_argument(
        "--shortcut",
        action="store_true",
        help="cfvd: replace the kernel by the trivial yes-instance when h covers every target clique"
    )

    compose = commands.add_parser("compose", parents=[common, instance], help="OR-compose instances")
    compose.add_argument("target", choices=CONSTRUCTIONS)
    compose.add_argument("--out", help="Output path (default: stdout)")

    verify = commands.add_parser("verify", parents=[common], help="Run brute-force equivalence suites")
    verify.add_argument("suites", nargs="+", choices=list(SUITES) + [ALL], metavar="SUITE")
    verify.add_argument("--trials", type=int, default=None, help="Instances per suite (default: per suite)")

    gen = commands.add_parser("gen", parents=[common, instance], help="Generate a seeded instance")
    gen.add_argument("target", choices=FAMILIES)
    gen.add_argument("--out", help="Output path (default: stdout)")
    gen.add_argument("--edge-probability", type=float, default=None, help="Edge probability for graph families")

    commands.add_parser("report", parents=[common], help="Summarize the run history")
    return parser


def subcommand_label(args: argparse.Namespace) -> str:
    target = getattr(args, "target", None)
    return f"{args.command} {target}" if target else args.command


def dispatch(session: Session) -> int:
    command = session.args.command
    if command == "solve":
        return SOLVERS[session.args.target](session)
    if command == "kernelize":
        return KERNELIZERS[session.args.target](session)
    if command == "compose":
        return compose_command(session)
    if command == "gen":
        return gen_command(session)
    if command == "verify":
        return verify_command(session)
    return report_command(session)


def run_command(argv: Sequence[str]) -> int:
    """
    Run one subcommand.

    Returns:
        Exit status: 0 yes/success, 1 no/failed suite, 2 usage or input error, 3 oracle failure
    """
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    setup_logging(args.log_level)
    seed = args.seed
    if seed is None and args.command in ("gen", "verify"):
        seed = 0

    started = time.perf_counter()
    try:
        backend = make_backend(args)
        report = RunReport(shlex.join(argv), seed=seed, backend=backend.name)
        session = Session(args, backend, OracleLedger(), report)
        status = dispatch(session)
    except OracleFailureError as e:
        logger.error(f"Oracle failure: {e}", exc_info=True)
        return EXIT_ORACLE
    except INPUT_ERRORS + (UsageError, OSError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_USAGE

    wall_time = time.perf_counter() - started
    memory = current_memory_mb()
    logger.info(
        f"{subcommand_label(args)} finished in {wall_time:.3f}s"
        + (f", {memory:.1f} MB resident" if memory is not None else "")
    )

    if session.report is not None:
        session.report.ledger = ledger_report(session.ledger)
        sys.stdout.write(session.report.render())
    if args.record and args.command != "report":
        record_run(
            report.command,
            subcommand_label(args),
            report.answer,
            session.ledger.entries,
            wall_time,
            seed=seed,
            backend=backend.name,
        )
    return status


def main():
    """Main entry point."""
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()

"""Command line interface.

Subcommands: solve (pick or force an algorithm, print a JSON report),
gen (write a seeded instance of a named family), verify (check a report
against its instance). Exit codes: 0 success, 2 unusable input, 3 no
algorithm applies to the instance, 4 search budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import generators, oracle
from .biconvex import solve_biconvex
from .cocomp import solve_cocomparability
from .decomposition import minfill_decomposition
from .errors import (
    BudgetExceededError,
    DecompositionError,
    FkdivError,
    NoApplicableAlgorithmError,
    NotChordalError,
    NotCocomparabilityError,
    OrderingNotBiconvexError,
    ParameterOutOfRangeError,
    ParseError,
    StructureMismatchError,
    UnknownFamilyError,
)
from .fptas import parse_epsilon, solve_approx
from .decomposition import is_chordal
from .instance_io import (
    ParsedInstance,
    build_report,
    coloring_array,
    parse_instance,
    render_profiles,
    render_report,
    serialize_instance,
    validate_report,
)
from .orientation import is_cocomparability
from .treedp import solve_chordal, solve_on_decomposition, solve_treewidth

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NO_ALGORITHM = 3
EXIT_BUDGET = 4

MINFILL_CELL_LIMIT = 100_000

_INPUT_ERRORS = (ParseError, DecompositionError, UnknownFamilyError, ParameterOutOfRangeError)
_APPLICABILITY_ERRORS = (
    NoApplicableAlgorithmError,
    NotChordalError,
    NotCocomparabilityError,
    OrderingNotBiconvexError,
    StructureMismatchError,
)


def _solver_for(name: str, parsed: ParsedInstance):
    """Callable with the shared (instance, space=..., ...) signature."""
    if name == "cocomp":
        return solve_cocomparability
    if name == "chordal":
        return solve_chordal
    if name == "biconvex":
        if parsed.order_a is None:
            raise NoApplicableAlgorithmError(
                "biconvex solver needs 'o A'/'o B' ordering lines"
            )

        def run(instance, **kw):
            return solve_biconvex(instance, parsed.order_a, parsed.order_b, **kw)

        return run
    if name == "treewidth":
        if parsed.decomposition is not None:
            td = parsed.decomposition

            def run(instance, **kw):
                return solve_on_decomposition(instance, td, **kw)

            return run
        return solve_treewidth
    raise NoApplicableAlgorithmError(f"unknown algorithm {name!r}")


def _auto_algorithm(parsed: ParsedInstance, k: int, budget: int, allow_bruteforce: bool) -> str:
    graph = parsed.graph
    if is_chordal(graph):
        return "chordal"
    if is_cocomparability(graph):
        return "cocomp"
    if parsed.order_a is not None:
        return "biconvex"
    if parsed.decomposition is not None:
        return "treewidth"
    td = minfill_decomposition(graph)
    if (k + 1) ** (td.width + 1) <= MINFILL_CELL_LIMIT:
        return "treewidth"
    if allow_bruteforce and (k + 1) ** graph.n <= budget:
        return "bruteforce"
    raise NoApplicableAlgorithmError(
        "instance fits no structured solver; brute force would exceed the budget"
    )


def run_solve(args) -> int:
    try:
        with open(args.input, encoding="utf-8") as fh:
            parsed = parse_instance(fh.read())
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    instance = parsed.instance
    n, k = instance.n, instance.k

    if args.epsilon is not None and args.emit_profiles:
        print("error: --emit-profiles needs exact profiles, drop --epsilon", file=sys.stderr)
        return EXIT_INPUT
    if args.epsilon is not None and args.algo == "bruteforce":
        print("error: --epsilon does not apply to bruteforce", file=sys.stderr)
        return EXIT_INPUT
    if args.epsilon is not None:
        try:
            parse_epsilon(args.epsilon)
        except (ValueError, TypeError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT

    prune = not args.no_prune and not args.emit_profiles
    started = time.perf_counter()
    algo = args.algo
    if algo == "auto":
        algo = _auto_algorithm(
            parsed, k, args.budget, allow_bruteforce=args.epsilon is None
        )

    emit_profiles = None
    if args.epsilon is not None:
        solver = _solver_for(algo, parsed)
        result = solve_approx(instance, args.epsilon, solver=solver)
        value, profile, witness = result.value, result.profile, result.witness
        profile_count = None
    elif algo == "bruteforce":
        result = oracle.brute_force(instance, budget=args.budget)
        value, witness = result.optimum, result.witness
        from .profiles import profile_of

        profile = profile_of(instance, witness)
        profile_count = len(result.profiles)
        emit_profiles = sorted(result.profiles)
    else:
        solver = _solver_for(algo, parsed)
        pset = solver(instance, witnesses=True, prune=prune)
        value, profile, witness = pset.best()
        profile_count = None if prune else len(pset)
        if args.emit_profiles:
            emit_profiles = pset.profiles()
    elapsed = 0 if args.no_timing else int((time.perf_counter() - started) * 1000)

    report = build_report(
        value=value,
        coloring=coloring_array(witness, n),
        profile=profile,
        algorithm=algo,
        epsilon=args.epsilon,
        elapsed_millis=elapsed,
        profile_count=profile_count,
    )
    validate_report(report, parsed)
    text = render_report(report)
    sys.stdout.write(text)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text)
    if args.emit_profiles:
        with open(args.emit_profiles, "w", encoding="utf-8") as fh:
            fh.write(render_profiles(emit_profiles))
    return EXIT_OK


def run_gen(args) -> int:
    parsed = generators.build_family(
        args.family, args.n, args.k, args.max_profit, args.seed, ell=args.ell
    )
    text = serialize_instance(parsed)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text)
    return EXIT_OK


def run_verify(args) -> int:
    import json

    try:
        with open(args.input, encoding="utf-8") as fh:
            parsed = parse_instance(fh.read())
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        with open(args.report, encoding="utf-8") as fh:
            report = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read report {args.report}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        validate_report(report, parsed)
    except ValueError as exc:
        print(f"invalid: {exc}")
        return 1
    print("ok")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fkdiv",
        description="Max-min fair division of items under a conflict graph",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("solve", help="solve an instance file and print a JSON report")
    ps.add_argument("--input", required=True, help="instance file")
    ps.add_argument(
        "--algo",
        default="auto",
        choices=("auto", "bruteforce", "cocomp", "biconvex", "chordal", "treewidth"),
        help="algorithm to use (default: pick automatically)",
    )
    ps.add_argument(
        "--epsilon",
        default=None,
        help="approximation accuracy as a decimal string, e.g. 0.1",
    )
    ps.add_argument(
        "--emit-profiles",
        default=None,
        metavar="FILE",
        help="also write every achievable profile to FILE (disables pruning)",
    )
    ps.add_argument(
        "--no-prune",
        action="store_true",
        help="keep dominated profiles instead of discarding them",
    )
    ps.add_argument(
        "--budget",
        type=int,
        default=10**8,
        help="node limit for brute force (default 1e8)",
    )
    ps.add_argument(
        "--threads",
        type=int,
        default=1,
        help="reserved; results are identical for any value",
    )
    ps.add_argument(
        "--no-timing",
        action="store_true",
        help="report elapsedMillis as 0 for byte-reproducible output",
    )
    ps.add_argument("--report", default=None, metavar="FILE", help="also write the report to FILE")
    ps.set_defaults(func=run_solve)

    pg = sub.add_parser("gen", help="generate a seeded instance of a graph family")
    pg.add_argument("--family", required=True, choices=generators.FAMILIES)
    pg.add_argument("--n", required=True, type=int, help="number of items")
    pg.add_argument("--k", type=int, default=2, help="number of agents (default 2)")
    pg.add_argument("--max-profit", type=int, default=10)
    pg.add_argument("--seed", type=int, default=0)
    pg.add_argument("--ell", type=int, default=None, help="clique size for clique-reduction")
    pg.add_argument("--out", required=True, help="output instance file")
    pg.set_defaults(func=run_gen)

    pv = sub.add_parser("verify", help="check a solve report against its instance")
    pv.add_argument("--input", required=True, help="instance file")
    pv.add_argument("--report", required=True, help="report JSON file")
    pv.set_defaults(func=run_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except _APPLICABILITY_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_ALGORITHM
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

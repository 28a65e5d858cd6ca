# main.py
"""
Command-line entry point for the quantum duality checker.

Commands: ``self-dual``, ``dual``, ``gen`` and ``bench``. Exit codes are
0 when the answer is True, 1 when it is False and 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence

from src import config
from src.errors import ArityTooLargeError, DualityError
from src.logic.bench import FAMILIES, run_bench, summarize, write_csv
from src.logic.classical import is_dual_pair_brute, is_self_dual_brute
from src.logic.corpus import GENERATOR_PARAMS
from src.logic.dnf import MonotoneDNF, Verdict, dnf_oracle, generate_majority_phi
from src.logic.dnf_format import load_dnf, serialize_dnf, write_dnf
from src.logic.pipeline import (
    ROUTES,
    CrossValidation,
    VerdictTrace,
    cross_validate,
    quantum_dual_pair,
    quantum_self_dual,
)
from src.logic.subroutines import SimConfig

logger = logging.getLogger(__name__)

EXIT_TRUE, EXIT_FALSE, EXIT_INPUT_ERROR = 0, 1, 2
METHODS = ("quantum", "classical", "both")


@dataclass(frozen=True)
class RunOptions:
    command: str
    paths: List[str]
    seed: int
    t: Optional[int]
    strict: bool
    method: str
    json: bool
    minimize: bool
    route: str = "direct"

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunOptions":
        return cls(
            command=args.command,
            paths=list(args.paths),
            seed=args.seed,
            t=args.t,
            strict=args.strict,
            method=args.method,
            json=args.json,
            minimize=args.minimize,
            route=getattr(args, "route", "direct"),
        )

    def sim_config(self) -> SimConfig:
        return SimConfig(seed=self.seed, strict=self.strict, t=self.t)

    def check_classical_cap(self, n: int) -> None:
        if self.method != "quantum" and n > config.CLASSICAL_ARITY_CAP:
            raise ArityTooLargeError(
                f"--method {self.method} needs n <= {config.CLASSICAL_ARITY_CAP}, got {n}"
            )


# --- output helpers -----------------------------------------------------------
def _describe(verdict: Verdict, n: int) -> List[str]:
    lines = [f"answer: {verdict.answer} ({verdict.reason.value})"]
    if verdict.witness is not None:
        lines.append(f"witness: x={verdict.witness} (binary {verdict.witness:0{n}b})")
    if verdict.witness_pair is not None:
        first, second = verdict.witness_pair
        lines.append(f"disjoint implicants: {list(first)} and {list(second)}")
    return lines


def _emit(
    options: RunOptions,
    n: int,
    verdict: Verdict,
    trace: Optional[VerdictTrace],
    check: Optional[CrossValidation],
) -> int:
    if options.json:
        if trace is not None:
            document = trace.to_dict()
        else:
            document = {"final": verdict.to_dict(), "method": "classical", "num_vars": n}
        if check is not None:
            document["cross_validation"] = check.to_dict()
        print(json.dumps(document, indent=2, sort_keys=True))
    else:
        for line in _describe(verdict, n):
            print(line)
        if trace is not None:
            queries = " ".join(f"{k}={v}" for k, v in trace.queries.items())
            print(f"queries: {queries}")
        if check is not None:
            print(f"classical: {check.classical_answer} ({check.classification})")
    if check is not None and check.classification == "defect":
        print("defect: quantum pipeline rejected a classically true input", file=sys.stderr)
    return EXIT_TRUE if verdict.answer else EXIT_FALSE


# --- commands -----------------------------------------------------------------
def cmd_self_dual(options: RunOptions) -> int:
    f = load_dnf(options.paths[0], minimize=options.minimize)
    options.check_classical_cap(f.num_vars)
    trace = check = None
    if options.method == "classical":
        verdict = is_self_dual_brute(dnf_oracle(f))
    else:
        trace = quantum_self_dual(f, options.sim_config())
        verdict = trace.final
        if options.method == "both":
            check = cross_validate(f, None, trace)
    return _emit(options, f.num_vars, verdict, trace, check)


def cmd_dual(options: RunOptions) -> int:
    f = load_dnf(options.paths[0], minimize=options.minimize)
    g = load_dnf(options.paths[1], minimize=options.minimize)
    options.check_classical_cap(max(f.num_vars, g.num_vars))
    trace = check = None
    if options.method == "classical":
        verdict = is_dual_pair_brute(dnf_oracle(f), dnf_oracle(g))
    else:
        trace = quantum_dual_pair(f, g, options.sim_config(), route=options.route)
        verdict = trace.final
        if options.method == "both":
            check = cross_validate(f, g, trace)
    return _emit(options, f.num_vars, verdict, trace, check)


def cmd_gen(args: argparse.Namespace) -> int:
    phi: MonotoneDNF = generate_majority_phi(args.n)
    if args.output:
        write_dnf(phi, args.output)
        print(f"{len(phi)} implicants written to {args.output}")
    else:
        sys.stdout.write(serialize_dnf(phi))
        print(f"# implicants: {len(phi)}")
    return EXIT_TRUE


def cmd_bench(args: argparse.Namespace) -> int:
    df = run_bench(
        args.n_min, args.n_max, args.instances, args.seed, args.family, args.workers
    )
    summary = summarize(df)
    report = sys.stdout
    if args.output:
        write_csv(df, args.output)
    else:
        df.to_csv(sys.stdout, index=False)
        report = sys.stderr
    params = dict(GENERATOR_PARAMS, family=args.family, seed=args.seed)
    print(f"generator: {json.dumps(params, sort_keys=True)}", file=report)
    print(summary.to_string(index=False), file=report)
    return EXIT_TRUE if bool(df["agree"].all()) else EXIT_FALSE


# --- argument parsing ---------------------------------------------------------
def _add_check_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    parser.add_argument("--t", type=int, default=None, help="counting register width")
    parser.add_argument("--strict", action="store_true",
                        help="accept only the principal counting outcome")
    parser.add_argument("--method", choices=METHODS, default="quantum")
    parser.add_argument("--json", action="store_true", help="print the JSON trace")
    parser.add_argument("--minimize", action="store_true",
                        help="drop superset implicants instead of failing")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="duality",
        description="Decide duality of prime monotone boolean functions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    self_dual = sub.add_parser("self-dual", help="is f self-dual?")
    self_dual.add_argument("paths", nargs=1, metavar="FILE")
    _add_check_flags(self_dual)

    dual = sub.add_parser("dual", help="is g the dual of f?")
    dual.add_argument("paths", nargs=2, metavar="FILE")
    dual.add_argument("--route", choices=ROUTES, default="direct")
    _add_check_flags(dual)

    gen = sub.add_parser("gen", help="write a majority formula")
    gen.add_argument("family", choices=["majority"])
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("-o", "--output", default=None)

    bench = sub.add_parser("bench", help="benchmark against brute force")
    bench.add_argument("--n-min", type=int, default=4)
    bench.add_argument("--n-max", type=int, default=10)
    bench.add_argument("--instances", type=int, default=50)
    bench.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    bench.add_argument("--family", choices=FAMILIES, default="random")
    bench.add_argument("--workers", type=int, default=None)
    bench.add_argument("-o", "--output", default=None)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logger.info("Running %s", args.command)
    try:
        if args.command == "gen":
            return cmd_gen(args)
        if args.command == "bench":
            return cmd_bench(args)
        options = RunOptions.from_args(args)
        if options.command == "dual":
            return cmd_dual(options)
        return cmd_self_dual(options)
    except (DualityError, OSError) as exc:
        logger.error("%s failed: %s", args.command, exc)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())

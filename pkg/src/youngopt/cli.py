"""Command-line interface.

Exit codes: 0 success, 1 infeasible request, 2 malformed input,
3 internal invariant violation (also used by ``oracle --verify`` on mismatch).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import funcspec
from .core import InputError, Partition, max_type, objective, render, type_of
from .oracle import DEFAULT_ORACLE_LIMIT, brute_force_solve, enumerate_partitions
from .solver import SolveResult, solve, solve_for_type

EXIT_OK, EXIT_INFEASIBLE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class Infeasible(Exception):
    pass


def output_record(result: SolveResult, solver: str) -> dict:
    """The json record; key order is part of the interface."""
    return {
        "n": result.n,
        "k": result.k,
        "partition": list(result.partition.parts),
        "conjugate": list(result.conjugate.parts),
        "value": result.value,
        "solver": solver,
    }


def format_result(result: SolveResult, solver: str, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(output_record(result, solver))
    lines = [
        f"partition: {result.partition}",
        f"conjugate: {result.conjugate}",
        f"type: {result.k}",
        f"value: {result.value}",
        "",
        render(result.partition),
    ]
    return "\n".join(lines)


def _check_n(n):
    if n < 1:
        raise InputError(f"n must be positive, got {n}")


def _tables(args):
    _check_n(args.n)
    return funcspec.resolve(args.f, args.n), funcspec.resolve(args.fstar, args.n)


def _check_type(n, k):
    if k < 1:
        raise InputError(f"type must be positive, got {k}")
    if k > max_type(n):
        raise Infeasible(f"no diagram of size {n} has type {k}")


def cmd_solve(args) -> int:
    f, fstar = _tables(args)
    if args.type is not None:
        _check_type(args.n, args.type)
        result = solve_for_type(args.n, args.type, f, fstar)
    else:
        result = solve(args.n, f, fstar)
    print(format_result(result, "dp", args.format))
    return EXIT_OK


def cmd_oracle(args) -> int:
    f, fstar = _tables(args)
    if args.type is not None:
        _check_type(args.n, args.type)
    result = brute_force_solve(args.n, f, fstar, args.type, limit=args.oracle_limit)
    if result is None:
        raise Infeasible(f"no diagram of size {args.n} has type {args.type}")
    print(format_result(result, "oracle", args.format))
    if args.verify:
        if args.type is not None:
            dp = solve_for_type(args.n, args.type, f, fstar)
        else:
            dp = solve(args.n, f, fstar)
        if dp is None or (dp.value, dp.partition) != (result.value, result.partition):
            got = "none" if dp is None else f"{dp.partition} value {dp.value}"
            print(
                f"verify: MISMATCH dp gave {got}, oracle gave {result.partition} value {result.value}",
                file=sys.stderr,
            )
            return EXIT_INTERNAL
        print("verify: ok", file=sys.stderr)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    _check_n(args.n)
    if args.type is not None:
        _check_type(args.n, args.type)
    parts = enumerate_partitions(args.n, limit=args.oracle_limit)
    if args.type is not None:
        parts = (p for p in parts if type_of(p) == args.type)
    if args.count:
        print(sum(1 for _ in parts))
    else:
        for p in parts:
            print(p)
    return EXIT_OK


def cmd_eval(args) -> int:
    f, fstar = _tables(args)
    p = Partition.parse(args.partition)
    if p.n != args.n:
        raise InputError(f"parts of {p} sum to {p.n}, not n = {args.n}")
    print(objective(p, f, fstar))
    return EXIT_OK


def cmd_render(args) -> int:
    print(render(Partition.parse(args.partition)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="youngopt",
        description="Minimize f(λ) + f*(λ*) over the Young diagrams with n cells.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_funcs(p):
        p.add_argument("--n", type=int, required=True, help="number of cells")
        p.add_argument("--f", required=True, help="row function: builtin | expr:<...> | table:<path>")
        p.add_argument("--fstar", required=True, help="column function, same syntax as --f")

    def add_limit(p):
        p.add_argument("--oracle-limit", type=int, default=DEFAULT_ORACLE_LIMIT,
                       help="largest n the exhaustive enumeration accepts (default %(default)s)")

    p = sub.add_parser("solve", help="polynomial-time layered DP")
    add_funcs(p)
    p.add_argument("--type", type=int, help="restrict to diagrams with this many distinct row lengths")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="exhaustive search over all partitions")
    add_funcs(p)
    add_limit(p)
    p.add_argument("--type", type=int)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--verify", action="store_true", help="also run the DP and fail on any disagreement")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("enumerate", help="list partitions of n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--type", type=int)
    p.add_argument("--count", action="store_true", help="print only the number of partitions")
    add_limit(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("eval", help="objective value of one partition")
    add_funcs(p)
    p.add_argument("--partition", required=True, help='comma-separated parts, e.g. "3,2,1"')
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("render", help="draw a partition as rows of '#'")
    p.add_argument("--partition", required=True)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Infeasible as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())

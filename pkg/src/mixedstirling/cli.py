"""Command-line interface: ``compute``, ``table``, ``audit`` and ``factor``.

Exit codes: 0 success, 2 usage error, 3 size guard exceeded, 4 an audited
identity was refuted, 5 internal error.
"""

from __future__ import annotations

import argparse
import inspect
import json
import sys
from dataclasses import dataclass
from typing import Callable, Optional

from . import core, factor, mixed
from .audit import Grid, run_audit
from .errors import InvalidArgument, SizeGuardExceeded, UnknownIdentity
from .oracle import SizeGuard
from .problem import PartitionProblem

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_GUARD = 3
EXIT_REFUTED = 4
EXIT_INTERNAL = 5


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Operation:
    func: Callable
    args: tuple[str, ...]
    defaults: tuple[tuple[str, int], ...] = ()


def _mixed_count(balls, cells, allow_empty, r, guard):
    return mixed.mixed_count(PartitionProblem(balls, cells, allow_empty, r), guard)


def _ordered(m, k, no_units):
    if no_units:
        return factor.ordered_factorizations_no_units(m, k)
    return factor.ordered_factorizations_with_units(m, k)


OPERATIONS: dict[str, Operation] = {
    "binomial": Operation(core.binomial, ("n", "k")),
    "multinomial": Operation(core.multinomial, ("parts",)),
    "stirling2": Operation(core.stirling2, ("n", "k")),
    "stirling2-cumulative": Operation(core.stirling2_cumulative, ("n", "k")),
    "bell": Operation(core.bell, ("n",)),
    "falling-factorial": Operation(core.falling_factorial, ("x", "k")),
    "mixed-count": Operation(_mixed_count, ("balls", "cells", "allow_empty", "r"), (("r", 0),)),
    "mixed-count-empty-expansion": Operation(mixed.mixed_count_empty_expansion, ("balls", "cells")),
    "b0": Operation(mixed.b0_nkr, ("n", "k", "r")),
    "b": Operation(mixed.b_nkr, ("n", "k", "r")),
    "b-recurrence": Operation(mixed.b_nkr_recurrence, ("n", "k", "r")),
    "b-inclusion-exclusion": Operation(mixed.b_nkr_inclusion_exclusion, ("n", "k", "r")),
    "mixed-multinomial": Operation(mixed.mixed_distinct_balls_multinomial, ("n", "cells")),
    "mixed-signsum": Operation(mixed.mixed_distinct_balls_signsum, ("n", "cells")),
    "mixed-ball-removal": Operation(mixed.mixed_ball_removal_recurrence, ("n", "cells")),
    "product-formula": Operation(mixed.product_formula_labeled_cells, ("balls", "k")),
    "surjective-formula": Operation(mixed.surjective_formula_labeled_cells, ("balls", "k")),
    "rstirling": Operation(mixed.r_stirling2, ("n", "k", "r")),
    "rstirling-rec-ii": Operation(mixed.r_stirling_rec_ii, ("n", "k", "r")),
    "rstirling-rec-iii": Operation(mixed.r_stirling_rec_iii, ("n", "k", "r")),
    "rstirling-via-b": Operation(mixed.r_stirling_via_B, ("n", "k", "r")),
    "rstirling-via-b-claim": Operation(mixed.r_stirling_via_B_claim, ("n", "k", "r")),
    "rstirling-corollary": Operation(mixed.r_stirling_corollary_recurrence, ("n", "k", "r")),
    "rbell": Operation(mixed.r_bell, ("n", "r")),
    "rbell-direct": Operation(mixed.r_bell_direct, ("n", "r")),
    "rbell-polynomial": Operation(mixed.r_bell_polynomial, ("n", "r", "x")),
    "rbell-theorem-sum": Operation(mixed.r_bell_theorem_sum, ("n", "r")),
    "rmixed-stirling": Operation(mixed.r_mixed_stirling, ("n", "cells", "r")),
    "rmixed-stirling-theorem": Operation(mixed.r_mixed_stirling_theorem, ("n", "k", "t", "r")),
    "rmixed-stirling-composition": Operation(mixed.r_mixed_stirling_composition, ("n", "cells", "r")),
    "rmixed-bell": Operation(mixed.r_mixed_bell, ("n", "cells", "r")),
    "rmixed-bell-theorem": Operation(mixed.r_mixed_bell_theorem, ("n", "k", "t", "r")),
    "rmixed-bell-stirling-sum": Operation(mixed.r_mixed_bell_stirling_sum, ("n", "cells", "r")),
    "rmixed-bell-multinomial": Operation(mixed.r_mixed_bell_multinomial, ("n", "cells", "r")),
    "ordered-factorizations": Operation(_ordered, ("m", "k", "no_units")),
    "ordered-factorizations-with-units": Operation(factor.ordered_factorizations_with_units, ("m", "k")),
    "ordered-factorizations-no-units": Operation(factor.ordered_factorizations_no_units, ("m", "k")),
    "total-ordered-factorizations": Operation(factor.total_ordered_factorizations, ("m",)),
    "unordered-multiplicative-partitions": Operation(factor.unordered_multiplicative_partitions, ("m",)),
    "big-omega": Operation(factor.big_omega, ("m",)),
}

_LIST_ARGS = ("parts", "balls", "cells")


def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip().strip("()[]")
    if not text:
        return ()
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _int_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        return int(text), int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None


def _guard(args) -> SizeGuard:
    try:
        return SizeGuard(args.guard_max_balls, args.guard_max_cells, args.guard_max_states)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(args, text: str, payload: dict) -> str:
    if args.format == "json":
        return json.dumps(payload, indent=None) + "\n"
    return text + "\n"


def cmd_compute(args) -> int:
    op = OPERATIONS.get(args.name)
    if op is None:
        raise UsageError(f"unknown operation {args.name!r}; see `mixedstirling compute --list`")
    kwargs = {}
    for name in op.args:
        value = getattr(args, name)
        if value is None:
            value = dict(op.defaults).get(name)
        if value is None:
            raise UsageError(f"{args.name} requires --{name.replace('_', '-')}")
        kwargs[name] = value
    if "guard" in inspect.signature(op.func).parameters:
        kwargs["guard"] = _guard(args)
    result = op.func(**kwargs)
    shown = {k: (list(v) if isinstance(v, tuple) else v) for k, v in kwargs.items() if k != "guard"}
    echo = ", ".join(
        f"{k}=({','.join(map(str, v))})" if isinstance(v, list) else f"{k}={v}" for k, v in shown.items()
    )
    sys.stdout.write(
        _emit(args, f"{args.name}({echo}) = {result}", {"operation": args.name, "arguments": shown, "result": result})
    )
    return EXIT_OK


def _table_rows(args) -> list[list[int]]:
    name = args.name
    if args.n is None:
        raise UsageError("table requires --n A..B")
    lo, hi = args.n
    if lo < 0 or hi < lo - 1:
        raise UsageError(f"bad n range {lo}..{hi}")
    rows = []
    for n in range(lo, hi + 1):
        if name == "stirling2":
            rows.append([core.stirling2(n, k) for k in range(n + 1)])
        elif name == "stirling2-cumulative":
            rows.append([core.stirling2_cumulative(n, k) for k in range(n + 1)])
        elif name == "rstirling":
            r = _need(args.r, "--r")
            rows.append([mixed.r_stirling2(n, k, r) for k in range(n + 1)])
        elif name == "bell":
            rows.append([core.bell(n)])
        elif name in ("rbell", "rbell-direct"):
            r = _need(args.r, "--r")
            fn = mixed.r_bell if name == "rbell" else mixed.r_bell_direct
            rows.append([fn(n, r)])
        elif name in ("b", "b0"):
            k = _need(args.k, "--k")
            fn = mixed.b_nkr if name == "b" else mixed.b0_nkr
            rows.append([fn(n, k, r) for r in range(1, n + 1)])
        else:
            raise UsageError(f"unknown table {name!r}; choose from {', '.join(TABLES)}")
    return rows


TABLES = ("stirling2", "stirling2-cumulative", "rstirling", "bell", "rbell", "rbell-direct", "b", "b0")


def _need(value, flag):
    if value is None:
        raise UsageError(f"this table requires {flag}")
    return value


def cmd_table(args) -> int:
    rows = _table_rows(args)
    text = "\n".join(",".join(map(str, row)) for row in rows)
    payload = {
        "table": args.name,
        "arguments": {k: v for k, v in (("n", list(args.n)), ("k", args.k), ("r", args.r)) if v is not None},
        "rows": rows,
    }
    sys.stdout.write(_emit(args, text, payload))
    return EXIT_OK


def cmd_audit(args) -> int:
    try:
        grid = Grid.parse(args.grid or "")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        report = run_audit(grid, _guard(args), args.only or None)
    except UnknownIdentity as exc:
        raise UsageError(str(exc)) from None
    body = report.to_json() if args.format == "json" else report.to_text()
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(body)
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc}") from None
    else:
        sys.stdout.write(body)
    refuted = report.refuted
    if refuted:
        sys.stderr.write(f"refuted: {', '.join(refuted)}\n")
        return EXIT_REFUTED
    return EXIT_OK


def cmd_factor(args) -> int:
    m = args.m
    if m is None:
        raise UsageError("factor requires --m")
    fmap = factor.factorize(m)
    payload = {"m": m, "factorization": {str(p): e for p, e in fmap.items()}, "big_omega": sum(fmap.values())}
    if m >= 2:
        payload["total_ordered_factorizations"] = factor.total_ordered_factorizations(m)
        payload["unordered_multiplicative_partitions"] = factor.unordered_multiplicative_partitions(m)
    if args.k is not None:
        payload["k"] = args.k
        payload["ordered_factorizations_with_units"] = factor.ordered_factorizations_with_units(m, args.k)
        if m >= 2:
            payload["ordered_factorizations_no_units"] = factor.ordered_factorizations_no_units(m, args.k)
    shown = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in fmap.items()) or "1"
    lines = [f"m = {m}", f"factorization = {shown}"]
    lines += [f"{key} = {value}" for key, value in payload.items() if key not in ("m", "factorization")]
    sys.stdout.write(_emit(args, "\n".join(lines), payload))
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--guard-max-balls", type=int, default=10)
    common.add_argument("--guard-max-cells", type=int, default=6)
    common.add_argument("--guard-max-states", type=int, default=10**7)

    parser = _Parser(prog="mixedstirling", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", parents=[common], help="evaluate one counting operation")
    p.add_argument("name", nargs="?", help="operation name (see --list)")
    p.add_argument("--list", action="store_true", help="list operation names and exit")
    for flag in ("n", "k", "r", "t", "x", "m"):
        p.add_argument(f"--{flag}", type=int)
    for flag in _LIST_ARGS:
        p.add_argument(f"--{flag}", type=_int_list, help="comma-separated integers")
    p.add_argument("--allow-empty", action="store_true")
    p.add_argument("--no-units", action="store_true")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("table", parents=[common], help="print a table of values")
    p.add_argument("name", choices=TABLES)
    p.add_argument("--n", type=_int_range, help="row range A..B")
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("audit", parents=[common], help="check the registered identities")
    p.add_argument("--default-grid", action="store_true", help="use the default grid (the default)")
    p.add_argument("--grid", help="ranges such as n=0..6,k=1..3,c=1..3,r=0..3,m=2..200")
    p.add_argument("--only", action="append", metavar="ID", help="restrict to an identity (repeatable)")
    p.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("factor", parents=[common], help="factorize m and count its factorizations")
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_factor)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "compute" and args.list:
            sys.stdout.write("\n".join(OPERATIONS) + "\n")
            return EXIT_OK
        if args.command == "compute" and not args.name:
            raise UsageError("compute requires an operation name")
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"mixedstirling: error: {exc}\n")
        return EXIT_USAGE
    except InvalidArgument as exc:
        sys.stderr.write(f"mixedstirling: invalid argument: {exc}\n")
        return EXIT_USAGE
    except SizeGuardExceeded as exc:
        sys.stderr.write(f"mixedstirling: size guard exceeded: {exc}\n")
        return EXIT_GUARD
    except Exception as exc:  # noqa: BLE001
        sys.stderr.write(f"mixedstirling: internal error: {type(exc).__name__}: {exc}\n")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())

"""Identity registry and grid runner.

Each registered identity pairs a *formula* side (the closed form as printed,
evaluated literally) with a *reference* side (the enumeration oracle, or an
elementary ground truth such as ``x**n`` or brute-force divisor tuples).
``run_audit`` evaluates both on every grid point and records a verdict.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Optional, Sequence

from . import __version__, core, factor, mixed, oracle
from .errors import InvalidArgument, MixedStirlingError, SizeGuardExceeded, UnknownIdentity
from .oracle import DEFAULT_GUARD, SizeGuard
from .problem import BallSpec, CellSpec, PartitionProblem

__all__ = [
    "Grid",
    "Identity",
    "CheckResult",
    "AuditVerdict",
    "AuditReport",
    "REGISTRY",
    "IDENTITY_IDS",
    "CONSTRUCTIVE_IDS",
    "SUSPECT_IDS",
    "check_identity",
    "run_audit",
]

VERIFIED = "verified-on-grid"
REFUTED = "refuted"
SKIPPED = "skipped-out-of-guard"
COUNTEREXAMPLE_CAP = 10

CONVENTIONS = (
    "0**0 = 1",
    "{l brace 0}_0 = 1 if l == 0 else 0",
    "{0 brace k}_0 = 1 for k >= 1",
    "binomials with negative arguments vanish",
    "B(n,k,0) = (k-1)! {n brace k-1}; B(n,k,r) = 0 for k < 1 or r < 0",
)


@dataclass(frozen=True)
class Grid:
    """Inclusive parameter ranges.

    ``c`` bounds both cell-group sizes and ball multiplicities; ``k`` bounds
    the number of cell groups (or labeled cells).
    """

    n: tuple[int, int] = (0, 6)
    k: tuple[int, int] = (1, 3)
    c: tuple[int, int] = (1, 3)
    r: tuple[int, int] = (0, 3)
    m: tuple[int, int] = (2, 200)

    FIELDS = ("n", "k", "c", "r", "m")

    @classmethod
    def parse(cls, text: str, base: Optional["Grid"] = None) -> "Grid":
        """Parse ``"n=0..5,k=1..3"``; unspecified ranges keep ``base`` values."""
        values = {name: getattr(base or cls(), name) for name in cls.FIELDS}
        for item in filter(None, (s.strip() for s in text.split(","))):
            match = re.fullmatch(r"([a-z])=(-?\d+)(?:\.\.(-?\d+))?", item)
            if not match or match.group(1) not in cls.FIELDS:
                raise InvalidArgument(f"bad grid item {item!r}; expected e.g. n=0..6")
            lo = int(match.group(2))
            hi = int(match.group(3)) if match.group(3) is not None else lo
            values[match.group(1)] = (lo, hi)
        return cls(**values)

    def span(self, name: str) -> range:
        lo, hi = getattr(self, name)
        return range(lo, hi + 1)

    def describe(self) -> str:
        return " ".join(f"{f}={lo}..{hi}" for f in self.FIELDS for lo, hi in [getattr(self, f)])

    def cell_specs(self) -> Iterator[tuple[int, ...]]:
        sizes = [c for c in self.span("c") if c >= 1]
        for k in self.span("k"):
            if k >= 1:
                yield from _product(sizes, k)

    def ball_specs(self, min_labels: int = 0) -> Iterator[tuple[int, ...]]:
        """Nonincreasing multiplicity vectors, one per label count in the n range."""
        mults = sorted((b for b in self.span("c") if b >= 1), reverse=True)
        for n in self.span("n"):
            if n >= min_labels:
                yield from _nonincreasing(mults, n)


def _product(values: list[int], k: int) -> Iterator[tuple[int, ...]]:
    if k == 0:
        yield ()
        return
    for head in _product(values, k - 1):
        for v in values:
            yield head + (v,)


def _nonincreasing(values: list[int], n: int, cap: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for v in values:
        if cap is None or v <= cap:
            for tail in _nonincreasing(values, n - 1, v):
                yield (v,) + tail


Point = dict
Evaluator = Callable[[Point, SizeGuard], int]


@dataclass(frozen=True)
class Identity:
    id: str
    claim: str
    points: Callable[[Grid], Iterable[Point]]
    formula: Evaluator
    reference: Evaluator
    constructive: bool


@dataclass(frozen=True)
class CheckResult:
    identity: str
    point: Point
    formula: int
    reference: int

    @property
    def passed(self) -> bool:
        return self.formula == self.reference


@dataclass
class AuditVerdict:
    identity: str
    claim: str
    grid_points_checked: int = 0
    points_skipped: int = 0
    failing_points: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def status(self) -> str:
        if self.counterexamples:
            return REFUTED
        if self.grid_points_checked == 0:
            return SKIPPED
        return VERIFIED

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "claim": self.claim,
            "grid_points_checked": self.grid_points_checked,
            "points_skipped": self.points_skipped,
            "status": self.status,
            "failing_points": self.failing_points,
            "counterexamples": [
                {"input": fmt_point(p), "formula": f, "oracle": o} for p, f, o in self.counterexamples
            ],
        }


@dataclass
class AuditReport:
    version: str
    guard: SizeGuard
    grid: Grid
    verdicts: list[AuditVerdict]

    def verdict(self, identity: str) -> AuditVerdict:
        for v in self.verdicts:
            if v.identity == identity:
                return v
        raise UnknownIdentity(identity)

    @property
    def refuted(self) -> list[str]:
        return [v.identity for v in self.verdicts if v.status == REFUTED]

    def to_dict(self) -> dict:
        g = self.guard
        return {
            "tool": "mixedstirling",
            "version": self.version,
            "guard": {
                "max_balls": g.max_balls,
                "max_total_cells": g.max_total_cells,
                "max_states": g.max_states,
            },
            "grid": {f: list(getattr(self.grid, f)) for f in Grid.FIELDS},
            "conventions": list(CONVENTIONS),
            "verdicts": [v.to_dict() for v in self.verdicts],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        g = self.guard
        counts = {s: sum(v.status == s for v in self.verdicts) for s in (VERIFIED, REFUTED, SKIPPED)}
        lines = [
            "mixedstirling audit report",
            f"version: {self.version}",
            f"guard: max_balls={g.max_balls} max_total_cells={g.max_total_cells} max_states={g.max_states}",
            f"grid: {self.grid.describe()}",
        ]
        lines += [f"convention: {c}" for c in CONVENTIONS]
        lines.append(
            f"summary: {counts[VERIFIED]} verified, {counts[REFUTED]} refuted, {counts[SKIPPED]} skipped"
        )
        for v in self.verdicts:
            lines += [
                "",
                f"identity: {v.identity}",
                f"claim: {v.claim}",
                f"points_checked: {v.grid_points_checked}",
                f"points_skipped: {v.points_skipped}",
                f"status: {v.status}",
                f"failing_points: {v.failing_points}",
            ]
            if v.counterexamples:
                lines.append("counterexamples:")
                lines += [f"  {fmt_point(p)}: formula={f} oracle={o}" for p, f, o in v.counterexamples]
            else:
                lines.append("counterexamples: none")
        return "\n".join(lines) + "\n"


def fmt_point(point: Point) -> str:
    parts = []
    for key, value in point.items():
        if isinstance(value, tuple):
            value = "(" + ",".join(map(str, value)) + ")"
        parts.append(f"{key}={value}")
    return " ".join(parts)


# -- reference helpers ------------------------------------------------------


def _distinct(n: int, cells, empty: bool, r: int, guard: SizeGuard) -> int:
    return oracle.count(PartitionProblem(BallSpec.distinct(n), CellSpec(tuple(cells)), empty, r), guard)


def _nkr_cells(k: int, r: int) -> tuple[int, ...]:
    return (r,) + (1,) * (k - 1)


def _single(n: int) -> tuple[int, ...]:
    return (n,) if n > 0 else ()


@lru_cache(maxsize=None)
def _divisor_tuples(m: int, k: int, least: int) -> int:
    """Ordered k-tuples of integers >= least with product m, by brute force."""
    if k == 0:
        return 1 if m == 1 else 0
    return sum(_divisor_tuples(m // d, k - 1, least) for d in range(max(least, 1), m + 1) if m % d == 0)


# -- point generators ---------------------------------------------------------


def _pts_n(grid, lo=0):
    for n in grid.span("n"):
        if n >= lo:
            yield {"n": n}


def _pts_nx(grid):
    for n in grid.span("n"):
        if n >= 0:
            for x in range(n + 3):
                yield {"n": n, "x": x}


def _pts_nk_blocks(grid):
    for n in grid.span("n"):
        for k in range(1, n + 1):
            yield {"n": n, "k": k}


def _pts_nkr(grid, n_lo=0):
    for n in grid.span("n"):
        if n < n_lo:
            continue
        for k in grid.span("k"):
            for r in grid.span("r"):
                if k >= 1 and r >= 1:
                    yield {"n": n, "k": k, "r": r}


def _pts_ncells(grid, n_lo=0):
    for n in grid.span("n"):
        if n >= n_lo:
            for cells in grid.cell_specs():
                yield {"n": n, "cells": cells}


def _pts_ncells_r(grid):
    for n in grid.span("n"):
        for cells in grid.cell_specs():
            for r in grid.span("r"):
                if 1 <= r <= n:
                    yield {"n": n, "cells": cells, "r": r}


def _pts_balls_cells(grid):
    for balls in grid.ball_specs():
        for cells in grid.cell_specs():
            yield {"balls": balls, "cells": cells}


def _pts_balls_k(grid):
    for balls in grid.ball_specs(min_labels=1):
        for k in grid.span("k"):
            if k >= 1:
                yield {"balls": balls, "k": k}


def _pts_rstirling(grid, rel):
    for n in grid.span("n"):
        for r in grid.span("r"):
            if r >= 1 and rel(n, r):
                for k in range(1, n + 1):
                    yield {"n": n, "k": k, "r": r}


def _pts_rstirling_kr(grid):
    for n in grid.span("n"):
        for r in grid.span("r"):
            if 1 <= r <= n:
                for k in range(r, n + 1):
                    yield {"n": n, "k": k, "r": r}


def _pts_nr(grid, r_lo):
    for n in grid.span("n"):
        for r in grid.span("r"):
            if r_lo <= r <= n:
                yield {"n": n, "r": r}


def _pts_nrx(grid):
    for n in grid.span("n"):
        for r in grid.span("r"):
            if n >= 0 and r >= 0:
                for x in range(n + 3):
                    yield {"n": n, "r": r, "x": x}


def _pts_nktr(grid):
    for n in grid.span("n"):
        for k in grid.span("k"):
            for t in grid.span("c"):
                for r in grid.span("r"):
                    if k >= 1 and t >= 1 and 1 <= r <= n:
                        yield {"n": n, "k": k, "t": t, "r": r}


def _pts_fixed(**point):
    def gen(grid):
        ranges = {"n": "n", "k": "k", "r": "r", "t": "c"}
        for key, name in ranges.items():
            if key in point and point[key] not in grid.span(name):
                return
        if "cells" in point:
            if len(point["cells"]) not in grid.span("k"):
                return
            if any(c not in grid.span("c") for c in point["cells"]):
                return
        yield dict(point)

    return gen


def _pts_mk(grid, no_units):
    for m in grid.span("m"):
        if m < (2 if no_units else 1):
            continue
        top = max(max(grid.span("k"), default=1), factor.big_omega(m))
        for k in range(1, top + 1):
            yield {"m": m, "k": k}


# -- registry -----------------------------------------------------------------


def _I(id, claim, points, formula, reference, constructive=False):
    return Identity(id, claim, points, formula, reference, constructive)


def _rs_ref(p, g):
    return _distinct(p["n"], (p["k"],), False, p["r"], g)


REGISTRY: tuple[Identity, ...] = (
    _I(
        "eq-bino",
        "x^n = sum_k {n brace k} x(x-1)...(x-k+1)",
        _pts_nx,
        lambda p, g: sum(core.stirling2(p["n"], k) * core.falling_factorial(p["x"], k) for k in range(p["n"] + 1)),
        lambda p, g: p["x"] ** p["n"],
        True,
    ),
    _I(
        "bell-binomial-rec",
        "B_{n+1} = sum_k C(n,k) B_k",
        _pts_n,
        lambda p, g: sum(core.binomial(p["n"], k) * core.bell(k) for k in range(p["n"] + 1)),
        lambda p, g: _distinct(p["n"] + 1, (p["n"] + 1,), True, 0, g),
        True,
    ),
    _I(
        "note-stirling",
        "distinct balls into one group of k cells, non-empty: {n brace k}",
        lambda grid: _pts_nk_blocks(grid),
        lambda p, g: core.stirling2(p["n"], p["k"]),
        lambda p, g: _distinct(p["n"], (p["k"],), False, 0, g),
        True,
    ),
    _I(
        "note-stirling-cumulative",
        "distinct balls into one group of k cells, empties allowed: {n brace k}_0",
        lambda grid: _pts_nk_blocks(grid),
        lambda p, g: core.stirling2_cumulative(p["n"], p["k"]),
        lambda p, g: _distinct(p["n"], (p["k"],), True, 0, g),
        True,
    ),
    _I(
        "note-bell",
        "distinct balls into one group of n cells, empties allowed: B_n",
        _pts_n,
        lambda p, g: core.bell(p["n"]),
        lambda p, g: _distinct(p["n"], _single(p["n"]), True, 0, g),
        True,
    ),
    _I(
        "prop-2.3",
        "{B brace C}_0 = sum over sub-specs C_j of {B brace C_j}",
        _pts_balls_cells,
        lambda p, g: mixed.mixed_count_empty_expansion(p["balls"], p["cells"], g),
        lambda p, g: oracle.count(PartitionProblem(BallSpec(p["balls"]), CellSpec(p["cells"]), True), g),
        True,
    ),
    _I(
        "example-B0-222",
        "worked example: B0(2,2,2) = 5",
        _pts_fixed(n=2, k=2, r=2),
        lambda p, g: 5,
        lambda p, g: _distinct(2, (2, 1), True, 0, g),
        True,
    ),
    _I(
        "prop-BB",
        "B0(n,k,r) = sum_l C(n,l) {l brace r}_0 (k-1)^(n-l)",
        _pts_nkr,
        lambda p, g: mixed.b0_nkr(p["n"], p["k"], p["r"]),
        lambda p, g: _distinct(p["n"], _nkr_cells(p["k"], p["r"]), True, 0, g),
        True,
    ),
    _I(
        "prop-BBB",
        "B(n,k,r) = sum_l C(n,l) {l brace r} {n-l brace k-1} (k-1)!",
        _pts_nkr,
        lambda p, g: mixed.b_nkr(p["n"], p["k"], p["r"]),
        lambda p, g: _distinct(p["n"], _nkr_cells(p["k"], p["r"]), False, 0, g),
        True,
    ),
    _I(
        "prop-incl-excl-B",
        "B(n,k,r) = sum_{s,t} (-1)^(t+eps_s) C(k-1,t) B0(n,k-t,r-s)",
        lambda grid: _pts_nkr(grid, 1),
        lambda p, g: mixed.b_nkr_inclusion_exclusion(p["n"], p["k"], p["r"]),
        lambda p, g: _distinct(p["n"], _nkr_cells(p["k"], p["r"]), False, 0, g),
    ),
    _I(
        "prop-bioo",
        "B(n,k,r) = B(n-1,k,r-1) + (k-1) B(n-1,k-1,r) + (k-1+r) B(n-1,k,r)",
        lambda grid: _pts_nkr(grid, 1),
        lambda p, g: mixed.b_nkr_recurrence(p["n"], p["k"], p["r"]),
        lambda p, g: _distinct(p["n"], _nkr_cells(p["k"], p["r"]), False, 0, g),
        True,
    ),
    _I(
        "thm-multinomial",
        "{B brace C} = sum_{l_1+..+l_k=n} n!/(l_1!..l_k!) prod {l_i brace c_i} (distinct balls)",
        _pts_ncells,
        lambda p, g: mixed.mixed_distinct_balls_multinomial(p["n"], p["cells"]),
        lambda p, g: _distinct(p["n"], p["cells"], False, 0, g),
        True,
    ),
    _I(
        "thm-signsum",
        "{B brace C} = sum_j (-1)^#(j) {B brace C_j}_0 (distinct balls)",
        lambda grid: _pts_ncells(grid, 1),
        lambda p, g: mixed.mixed_distinct_balls_signsum(p["n"], p["cells"], g),
        lambda p, g: _distinct(p["n"], p["cells"], False, 0, g),
    ),
    _I(
        "thm-ball-removal",
        "{B brace C} = (c_1+..+c_k) {B' brace C} + sum_j {B' brace C_j} (distinct balls)",
        lambda grid: _pts_ncells(grid, 1),
        lambda p, g: mixed.mixed_ball_removal_recurrence(p["n"], p["cells"]),
        lambda p, g: _distinct(p["n"], p["cells"], False, 0, g),
        True,
    ),
    _I(
        "thm-multip1",
        "{B brace C}_0 = prod_j C(b_j+k-1, k-1) (labeled cells)",
        _pts_balls_k,
        lambda p, g: mixed.product_formula_labeled_cells(p["balls"], p["k"]),
        lambda p, g: oracle.count(PartitionProblem(BallSpec(p["balls"]), CellSpec.labeled(p["k"]), True), g),
        True,
    ),
    _I(
        "thm-multip2",
        "{B brace C} = sum_i (-1)^i C(k,i) prod_j C(b_j+k-i-1, k-i-1) (labeled cells)",
        _pts_balls_k,
        lambda p, g: mixed.surjective_formula_labeled_cells(p["balls"], p["k"]),
        lambda p, g: oracle.count(PartitionProblem(BallSpec(p["balls"]), CellSpec.labeled(p["k"]), False), g),
        True,
    ),
    _I(
        "rstirling-r01",
        "0-Stirling and 1-Stirling numbers equal {n brace k}",
        lambda grid: ({"n": n, "k": k} for n in grid.span("n") for k in range(1, n + 1)),
        lambda p, g: core.stirling2(p["n"], p["k"]),
        lambda p, g: _distinct(p["n"], (p["k"],), False, 1, g),
        True,
    ),
    _I(
        "rstirling-rec-ii",
        "{n brace k}_r = k {n-1 brace k}_{r-1} + {n-1 brace k-1}_r for n > r",
        lambda grid: _pts_rstirling(grid, lambda n, r: n > r),
        lambda p, g: mixed.r_stirling_rec_ii(p["n"], p["k"], p["r"]),
        _rs_ref,
    ),
    _I(
        "rstirling-rec-iii",
        "{n brace k}_r = {n brace k}_{r-1} - (r-1) {n-1 brace k}_{r-1} for n >= r >= 1",
        lambda grid: _pts_rstirling(grid, lambda n, r: n >= r),
        lambda p, g: mixed.r_stirling_rec_iii(p["n"], p["k"], p["r"]),
        _rs_ref,
        True,
    ),
    _I(
        "eq-r-bino",
        "(x+r)^n = sum_k {n+r brace k+r}_r x(x-1)...(x-k+1)",
        _pts_nrx,
        lambda p, g: sum(
            mixed.r_stirling2(p["n"] + p["r"], k + p["r"], p["r"]) * core.falling_factorial(p["x"], k)
            for k in range(p["n"] + 1)
        ),
        lambda p, g: (p["x"] + p["r"]) ** p["n"],
        True,
    ),
    _I(
        "thm-rstirling-via-B",
        "{n brace k}_r = sum_l C(n-r,l) {l brace k-r} {n-r+l brace r} r!",
        _pts_rstirling_kr,
        lambda p, g: mixed.r_stirling_via_B(p["n"], p["k"], p["r"]),
        _rs_ref,
    ),
    _I(
        "thm-rstirling-as-B",
        "{n brace k}_r = B(n-r, r+1, k-r)",
        _pts_rstirling_kr,
        lambda p, g: mixed.r_stirling_via_B_claim(p["n"], p["k"], p["r"]),
        _rs_ref,
    ),
    _I(
        "cor-rstirling-rec",
        "{n brace k}_r = {n-1 brace k}_{r-1} + r {n-1 brace k-1}_r + k {n-1 brace k}_r",
        lambda grid: _pts_rstirling(grid, lambda n, r: n >= r),
        lambda p, g: mixed.r_stirling_corollary_recurrence(p["n"], p["k"], p["r"]),
        _rs_ref,
    ),
    _I(
        "rbell-r0",
        "B_{n,0} = B_n",
        _pts_n,
        lambda p, g: mixed.r_bell(p["n"], 0),
        lambda p, g: _distinct(p["n"], _single(p["n"]), True, 0, g),
        True,
    ),
    _I(
        "thm-rbell-sum",
        "B_{n,r} = sum_k sum_l C(n-r,l) {l brace k-r}_0 r^(n-r-l)",
        lambda grid: _pts_nr(grid, 1),
        lambda p, g: mixed.r_bell_theorem_sum(p["n"], p["r"]),
        lambda p, g: _distinct(p["n"], _single(p["n"]), True, p["r"], g),
    ),
    _I(
        "thm-rmixed-stirling",
        "{n brace k}_r^C for C = (t,1,..,1): double sum over i and l with B(l, k-1+t-r, t-i)",
        _pts_nktr,
        lambda p, g: mixed.r_mixed_stirling_theorem(p["n"], p["k"], p["t"], p["r"]),
        lambda p, g: _distinct(p["n"], (p["t"],) + (1,) * (p["k"] - 1), False, p["r"], g),
    ),
    _I(
        "example-rmixed-stirling-15",
        "worked example: {4 brace 2}_2^{A(2,1)} = 15",
        _pts_fixed(n=4, cells=(2, 1), r=2),
        lambda p, g: 15,
        lambda p, g: _distinct(4, (2, 1), False, 2, g),
    ),
    _I(
        "cor-rmixed-composition",
        "{n brace k}_r^C = sum_{i_1+..+i_k=r} r!/(i_1!..i_k!) {n-r brace C}",
        _pts_ncells_r,
        lambda p, g: mixed.r_mixed_stirling_composition(p["n"], p["cells"], p["r"], g),
        lambda p, g: _distinct(p["n"], p["cells"], False, p["r"], g),
    ),
    _I(
        "thm-rmixed-bell",
        "B_{n,r}^C for C = (t,1,..,1): sum_i C(r,i) C(k-i,r-i) (r-i)! B0(n-r, k+i-1, t-i)",
        _pts_nktr,
        lambda p, g: mixed.r_mixed_bell_theorem(p["n"], p["k"], p["t"], p["r"]),
        lambda p, g: _distinct(p["n"], (p["t"],) + (1,) * (p["k"] - 1), True, p["r"], g),
    ),
    _I(
        "cor-rmixed-bell-sum",
        "B_{n,r}^C = sum_{k=r..n} {n brace k}_r^C (k = number of non-empty cells)",
        _pts_ncells_r,
        lambda p, g: mixed.r_mixed_bell_stirling_sum(p["n"], p["cells"], p["r"], g),
        lambda p, g: _distinct(p["n"], p["cells"], True, p["r"], g),
    ),
    _I(
        "prop-rmixed-bell-multinomial",
        "B_{n,r}^C = sum_{i_1+..+i_k=r} r!/(i_1!..i_k!) {n-r brace C}_0",
        _pts_ncells_r,
        lambda p, g: mixed.r_mixed_bell_multinomial(p["n"], p["cells"], p["r"], g),
        lambda p, g: _distinct(p["n"], p["cells"], True, p["r"], g),
    ),
    _I(
        "factor-thm-i",
        "ordered k-factorizations of m (units allowed) = prod_j C(a_j+k-1, k-1)",
        lambda grid: _pts_mk(grid, False),
        lambda p, g: factor.ordered_factorizations_with_units(p["m"], p["k"]),
        lambda p, g: _divisor_tuples(p["m"], p["k"], 1),
        True,
    ),
    _I(
        "factor-thm-ii",
        "ordered k-factorizations of m (factors > 1) = sum_i (-1)^i C(k,i) prod_j C(a_j+k-i-1, k-i-1)",
        lambda grid: _pts_mk(grid, True),
        lambda p, g: factor.ordered_factorizations_no_units(p["m"], p["k"]),
        lambda p, g: _divisor_tuples(p["m"], p["k"], 2),
        True,
    ),
)

_BY_ID = {ident.id: ident for ident in REGISTRY}
IDENTITY_IDS: tuple[str, ...] = tuple(_BY_ID)
CONSTRUCTIVE_IDS = tuple(i.id for i in REGISTRY if i.constructive)
SUSPECT_IDS = tuple(i.id for i in REGISTRY if not i.constructive)


def _lookup(identity: str) -> Identity:
    try:
        return _BY_ID[identity]
    except KeyError:
        raise UnknownIdentity(identity) from None


def check_identity(identity: str, point: Point, guard: SizeGuard = DEFAULT_GUARD) -> CheckResult:
    """Evaluate both sides of one identity at one point.

    Raises ``UnknownIdentity`` and ``SizeGuardExceeded``.
    """
    ident = _lookup(identity)
    point = {key: tuple(v) if isinstance(v, list) else v for key, v in point.items()}
    return CheckResult(identity, point, ident.formula(point, guard), ident.reference(point, guard))


def run_audit(
    grid: Grid = Grid(),
    guard: SizeGuard = DEFAULT_GUARD,
    only: Optional[Sequence[str]] = None,
) -> AuditReport:
    """Evaluate registered identities over ``grid``; verdicts follow registry order."""
    wanted = set(only) if only else None
    if wanted:
        for name in wanted:
            _lookup(name)
    verdicts = []
    for ident in REGISTRY:
        if wanted is not None and ident.id not in wanted:
            continue
        verdict = AuditVerdict(ident.id, ident.claim)
        for point in ident.points(grid):
            try:
                result = check_identity(ident.id, point, guard)
            except SizeGuardExceeded:
                verdict.points_skipped += 1
                continue
            except MixedStirlingError as exc:
                verdict.grid_points_checked += 1
                verdict.failing_points += 1
                if len(verdict.counterexamples) < COUNTEREXAMPLE_CAP:
                    verdict.counterexamples.append((point, f"error: {exc}", None))
                continue
            verdict.grid_points_checked += 1
            if not result.passed:
                verdict.failing_points += 1
                if len(verdict.counterexamples) < COUNTEREXAMPLE_CAP:
                    verdict.counterexamples.append((result.point, result.formula, result.reference))
        verdicts.append(verdict)
    return AuditReport(__version__, guard, grid, verdicts)

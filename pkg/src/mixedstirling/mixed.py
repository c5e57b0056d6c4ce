"""Mixed partition numbers and their r-variants.

Two kinds of function live here:

* canonical counts (``mixed_count``, ``b0_nkr``, ``b_nkr``, ``r_stirling2``,
  ``r_bell``, ``r_mixed_stirling``, ...) which only use closed forms that the
  audit confirms against the enumeration oracle, and otherwise fall back to
  the oracle itself;
* literal evaluators (``*_theorem``, ``*_inclusion_exclusion``,
  ``*_signsum``, ``*_composition`` ...) which compute a printed formula
  exactly as stated, suspect or not.  They exist for the audit and are never
  called by the canonical functions.

Conventions: ``0**0 == 1``; binomials with a negative argument vanish.
"""

from __future__ import annotations

import itertools
import math
import threading
from functools import lru_cache
from typing import Iterator

from . import oracle
from .core import StirlingTable, bell, multinomial, stirling2, stirling2_cumulative
from .errors import InvalidArgument
from .oracle import DEFAULT_GUARD, SizeGuard
from .problem import BallSpec, BallsLike, CellSpec, CellsLike, PartitionProblem, as_balls, as_cells

__all__ = [
    "mixed_count",
    "canonical_route",
    "mixed_count_empty_expansion",
    "b0_nkr",
    "b_nkr",
    "b_nkr_recurrence",
    "b_nkr_inclusion_exclusion",
    "mixed_distinct_balls_multinomial",
    "mixed_distinct_balls_signsum",
    "mixed_ball_removal_recurrence",
    "product_formula_labeled_cells",
    "surjective_formula_labeled_cells",
    "r_stirling2",
    "r_stirling_rec_ii",
    "r_stirling_rec_iii",
    "r_stirling_via_B",
    "r_stirling_via_B_claim",
    "r_stirling_corollary_recurrence",
    "r_bell",
    "r_bell_direct",
    "r_bell_polynomial",
    "r_bell_theorem_sum",
    "r_mixed_stirling",
    "r_mixed_stirling_theorem",
    "r_mixed_stirling_composition",
    "r_mixed_bell",
    "r_mixed_bell_theorem",
    "r_mixed_bell_stirling_sum",
    "r_mixed_bell_multinomial",
]


def _c(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidArgument(msg)


def compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``n`` into ``k`` parts, colexicographic order."""
    if k == 0:
        if n == 0:
            yield ()
        return
    for last in range(n + 1):
        for head in compositions(n - last, k - 1):
            yield head + (last,)


def _sub_vectors(cells: CellSpec) -> Iterator[tuple[int, ...]]:
    return itertools.product(*(range(c + 1) for c in cells.group_sizes))


# -- canonical dispatch ---------------------------------------------------


def canonical_route(problem: PartitionProblem) -> str:
    """Name of the computation ``mixed_count`` uses for ``problem``.

    Closed-form routes are named after the audit identity that backs them.
    """
    b, c = problem.balls, problem.cells
    r = problem.distinct_prefix
    if c.k == 0:
        return "no-cells"
    if r > c.total_cells:
        return "prefix-exceeds-cells"
    # a single prefix ball constrains nothing
    if r <= 1:
        if b.all_distinct:
            return "prop-2.3" if problem.allow_empty else "thm-multinomial"
        if c.all_labeled:
            return "thm-multip1" if problem.allow_empty else "thm-multip2"
    elif b.all_distinct and c.k == 1:
        return "r-stirling-table"
    return "oracle"


def mixed_count(problem: PartitionProblem, guard: SizeGuard = DEFAULT_GUARD) -> int:
    """Partitions of the balls into the cells under the problem's flags."""
    route = canonical_route(problem)
    b, c = problem.balls, problem.cells
    if route == "no-cells":
        return 1 if b.total == 0 else 0
    if route == "prefix-exceeds-cells":
        return 0
    if route == "thm-multinomial":
        return mixed_distinct_balls_multinomial(b.n, c)
    if route == "prop-2.3":
        return sum(mixed_distinct_balls_multinomial(b.n, c.sub_spec(js)) for js in _sub_vectors(c))
    if route == "thm-multip1":
        return product_formula_labeled_cells(b, c.k)
    if route == "thm-multip2":
        return surjective_formula_labeled_cells(b, c.k)
    if route == "r-stirling-table":
        n, k, r = b.n, c.group_sizes[0], problem.distinct_prefix
        if problem.allow_empty:
            return sum(r_stirling2(n, j, r) for j in range(r, k + 1))
        return r_stirling2(n, k, r)
    return oracle.count(problem, guard)


def mixed_count_empty_expansion(
    balls: BallsLike, cells: CellsLike, guard: SizeGuard = DEFAULT_GUARD
) -> int:
    """Empties-allowed count as a sum of non-empty counts over sub-cell-specs."""
    balls, cells = as_balls(balls), as_cells(cells)
    return sum(
        mixed_count(PartitionProblem(balls, cells.sub_spec(js), False), guard)
        for js in _sub_vectors(cells)
    )


# -- B(n, k, r) and B0(n, k, r) ----------------------------------------------


def _b0_any(n: int, k: int, r: int) -> int:
    # {l brace r}_0 with r == 0 is 1 iff l == 0; negative r gives 0
    if k < 1 or r < 0:
        return 0
    total = 0
    for ell in range(n + 1):
        cum = stirling2_cumulative(ell, r) if r > 0 or ell == 0 else 0
        total += math.comb(n, ell) * cum * (k - 1) ** (n - ell)
    return total


def _b_any(n: int, k: int, r: int) -> int:
    if n < 0 or k < 1 or r < 0:
        return 0
    fk = math.factorial(k - 1)
    return sum(
        math.comb(n, ell) * stirling2(ell, r) * stirling2(n - ell, k - 1) * fk
        for ell in range(r, n - k + 2)
    )


def b0_nkr(n: int, k: int, r: int) -> int:
    """n distinct balls into r interchangeable and k-1 labeled cells, empties allowed."""
    _require(n >= 0 and k >= 1 and r >= 1, f"b0_nkr needs n>=0, k>=1, r>=1; got {(n, k, r)}")
    return _b0_any(n, k, r)


def b_nkr(n: int, k: int, r: int) -> int:
    """As ``b0_nkr`` but every one of the k-1+r cells is non-empty."""
    _require(n >= 0 and k >= 1 and r >= 1, f"b_nkr needs n>=0, k>=1, r>=1; got {(n, k, r)}")
    return _b_any(n, k, r)


@lru_cache(maxsize=None)
def _b_rec(n: int, k: int, r: int) -> int:
    if r == 0:
        return math.factorial(k - 1) * stirling2(n, k - 1)
    if n == 0:
        return 0
    out = _b_rec(n - 1, k, r - 1) + (k - 1 + r) * _b_rec(n - 1, k, r)
    if k > 1:
        out += (k - 1) * _b_rec(n - 1, k - 1, r)
    return out


def b_nkr_recurrence(n: int, k: int, r: int) -> int:
    """B(n,k,r) through the first-ball recurrence.

    Base cases: ``B(0, k, r) = 0`` for ``k - 1 + r >= 1`` and
    ``B(n, k, 0) = (k-1)! S(n, k-1)`` (all cells labeled).
    """
    _require(n >= 1 and k >= 1 and r >= 1, f"b_nkr_recurrence needs n,k,r >= 1; got {(n, k, r)}")
    for m in range(n):  # warm the cache bottom-up to keep recursion shallow
        _b_rec(m, k, r)
    return _b_rec(n, k, r)


def b_nkr_inclusion_exclusion(n: int, k: int, r: int) -> int:
    """Literal alternating sum over (s, t) of B0(n, k-t, r-s)."""
    _require(n >= 1 and k >= 1 and r >= 1, f"needs n,k,r >= 1; got {(n, k, r)}")
    total = 0
    for s in range(r + 1):
        eps = 0 if s == 0 else 1
        for t in range(k):
            total += (-1) ** (t + eps) * _c(k - 1, t) * _b0_any(n, k - t, r - s)
    return total


# -- distinct balls, general cells ------------------------------------------


def mixed_distinct_balls_multinomial(n: int, cells: CellsLike) -> int:
    """Non-empty count for n distinct balls: sum over compositions of n."""
    cells = as_cells(cells)
    _require(n >= 0, f"n must be nonnegative, got {n}")
    total = 0
    for parts in compositions(n, cells.k):
        term = multinomial(parts)
        for ell, c in zip(parts, cells.group_sizes):
            term *= stirling2(ell, c)
            if not term:
                break
        total += term
    return total


def mixed_distinct_balls_signsum(n: int, cells: CellsLike, guard: SizeGuard = DEFAULT_GUARD) -> int:
    """Literal sum of (-1)^#(nonzero j) times the empties-allowed count on each sub-spec."""
    cells = as_cells(cells)
    balls = BallSpec.distinct(n)
    total = 0
    for js in _sub_vectors(cells):
        sign = (-1) ** sum(1 for j in js if j)
        total += sign * mixed_count(PartitionProblem(balls, cells.sub_spec(js), True), guard)
    return total


@lru_cache(maxsize=None)
def _ball_removal(n: int, sizes: tuple[int, ...]) -> int:
    if n == 0:
        return 1 if not sizes else 0
    out = sum(sizes) * _ball_removal(n - 1, sizes)
    for j, c in enumerate(sizes):
        smaller = sizes[:j] + ((c - 1,) if c > 1 else ()) + sizes[j + 1 :]
        out += _ball_removal(n - 1, smaller)
    return out


def mixed_ball_removal_recurrence(n: int, cells: CellsLike) -> int:
    """Non-empty count for n distinct balls by removing one ball at a time."""
    cells = as_cells(cells)
    _require(n >= 0, f"n must be nonnegative, got {n}")
    for m in range(n):
        _ball_removal(m, cells.group_sizes)
    return _ball_removal(n, cells.group_sizes)


# -- labeled cells, multiset balls ------------------------------------------


def product_formula_labeled_cells(balls: BallsLike, k: int) -> int:
    """Empties-allowed count for k labeled cells: product of stars-and-bars."""
    balls = as_balls(balls)
    _require(k >= 1, f"k must be positive, got {k}")
    return math.prod(math.comb(b + k - 1, k - 1) for b in balls.multiplicities)


def surjective_formula_labeled_cells(balls: BallsLike, k: int) -> int:
    """Non-empty count for k labeled cells by inclusion-exclusion.

    The ``i = k`` term vanishes once a ball label is present; keeping it
    makes the empty multiset come out as 0.
    """
    balls = as_balls(balls)
    _require(k >= 1, f"k must be positive, got {k}")
    return sum(
        (-1) ** i
        * math.comb(k, i)
        * math.prod(_c(b + k - i - 1, k - i - 1) for b in balls.multiplicities)
        for i in range(k + 1)
    )


# -- r-Stirling and r-Bell -------------------------------------------------

_R_TABLES: dict[int, StirlingTable] = {}
_R_LOCK = threading.Lock()


def _r_table(r: int) -> StirlingTable:
    table = _R_TABLES.get(r)
    if table is None:
        with _R_LOCK:
            table = _R_TABLES.setdefault(r, StirlingTable(r, r))
    return table


def r_stirling2(n: int, k: int, r: int) -> int:
    """Partitions of ``{1..n}`` into k blocks with ``1..r`` in distinct blocks."""
    _require(min(n, k, r) >= 0, f"r_stirling2 needs nonnegative arguments; got {(n, k, r)}")
    if r == 0:
        return stirling2(n, k)
    return _r_table(r)[n, k]


def _rs(n: int, k: int, r: int) -> int:
    return r_stirling2(n, k, r) if min(n, k, r) >= 0 else 0


def r_stirling_rec_ii(n: int, k: int, r: int) -> int:
    """Literal ``k {n-1,k}_{r-1} + {n-1,k-1}_r``."""
    _require(n > r >= 1 and k >= 0, f"needs n > r >= 1; got {(n, k, r)}")
    return k * _rs(n - 1, k, r - 1) + _rs(n - 1, k - 1, r)


def r_stirling_rec_iii(n: int, k: int, r: int) -> int:
    """Literal ``{n,k}_{r-1} - (r-1) {n-1,k}_{r-1}``."""
    _require(n >= r >= 1 and k >= 0, f"needs n >= r >= 1; got {(n, k, r)}")
    return _rs(n, k, r - 1) - (r - 1) * _rs(n - 1, k, r - 1)


def r_stirling_via_B(n: int, k: int, r: int) -> int:
    """Literal sum over l of C(n-r,l) S(l,k-r) S(n-r+l,r) r!."""
    _require(n >= r >= 1 and k >= r, f"needs n >= r >= 1 and k >= r; got {(n, k, r)}")
    fr = math.factorial(r)
    return sum(
        _c(n - r, ell) * stirling2(ell, k - r) * stirling2(n - r + ell, r) * fr
        for ell in range(max(k - r, 0), n - 2 * r + 1)
    )


def r_stirling_via_B_claim(n: int, k: int, r: int) -> int:
    """Literal ``B(n-r, r+1, k-r)`` as claimed equal to ``{n,k}_r``."""
    _require(n >= r >= 1 and k >= r, f"needs n >= r >= 1 and k >= r; got {(n, k, r)}")
    return _b_any(n - r, r + 1, k - r)


def r_stirling_corollary_recurrence(n: int, k: int, r: int) -> int:
    """Literal ``{n-1,k}_{r-1} + r {n-1,k-1}_r + k {n-1,k}_r``."""
    _require(n >= 1 and r >= 1 and k >= 0, f"needs n >= 1, r >= 1; got {(n, k, r)}")
    return _rs(n - 1, k, r - 1) + r * _rs(n - 1, k - 1, r) + k * _rs(n - 1, k, r)


def r_bell(n: int, r: int) -> int:
    """r-Bell number in sum form: ``sum_k {n+r, k+r}_r``."""
    _require(0 <= r <= n, f"r_bell needs 0 <= r <= n; got n={n}, r={r}")
    return sum(r_stirling2(n + r, k + r, r) for k in range(n + 1))


def r_bell_direct(n: int, r: int) -> int:
    """Partitions of ``{1..n}`` with ``1..r`` in distinct blocks."""
    _require(0 <= r <= n, f"r_bell_direct needs 0 <= r <= n; got n={n}, r={r}")
    if r == 0:
        return bell(n)
    return sum(r_stirling2(n, k, r) for k in range(r, n + 1))


def r_bell_polynomial(n: int, r: int, x: int) -> int:
    """``sum_k {n+r, k+r}_r x**k``."""
    _require(n >= 0 and r >= 0, f"needs n, r >= 0; got {(n, r)}")
    return sum(r_stirling2(n + r, k + r, r) * x**k for k in range(n + 1))


def _cum0(ell: int, j: int) -> int:
    if j < 0:
        return 0
    if j == 0:
        return 1 if ell == 0 else 0
    return stirling2_cumulative(ell, j)


def r_bell_theorem_sum(n: int, r: int) -> int:
    """Literal double sum of C(n-r,l) {l, k-r}_0 r^(n-r-l)."""
    _require(n >= r >= 1, f"needs n >= r >= 1; got n={n}, r={r}")
    return sum(
        math.comb(n - r, ell) * _cum0(ell, k - r) * r ** (n - r - ell)
        for k in range(n + 1)
        for ell in range(n - r + 1)
    )


# -- r-mixed Stirling and r-mixed Bell -------------------------------------


def _mixed_cells(k: int, t: int) -> CellSpec:
    return CellSpec((t,) + (1,) * (k - 1))


def r_mixed_stirling(n: int, cells: CellsLike, r: int, guard: SizeGuard = DEFAULT_GUARD) -> int:
    """Non-empty partitions of ``{1..n}`` into ``cells`` with ``1..r`` separated."""
    _require(0 <= r <= n, f"needs 0 <= r <= n; got n={n}, r={r}")
    return mixed_count(PartitionProblem(BallSpec.distinct(n), as_cells(cells), False, r), guard)


def r_mixed_stirling_theorem(n: int, k: int, t: int, r: int) -> int:
    """Literal double sum for cells ``(t, 1, ..., 1)`` with k groups."""
    _require(n >= r >= 1 and k >= 1 and t >= 1, f"needs n >= r >= 1, k, t >= 1; got {(n, k, t, r)}")
    low = max(k - 1 + t - r, 0)
    total = 0
    for i in range(min(t, r) + 1):
        head = _c(r, i) * _c(k - 1, r - i) * math.factorial(r - i)
        if not head:
            continue
        for ell in range(low, n - r + 1):
            total += (
                head
                * _c(n - r, ell)
                * (n - r - ell) ** r
                * _b_any(ell, k - 1 + t - r, t - i)
            )
    return total


def r_mixed_stirling_composition(
    n: int, cells: CellsLike, r: int, guard: SizeGuard = DEFAULT_GUARD
) -> int:
    """Literal ``sum_{i_1+..+i_k=r} r!/(i_1!..i_k!) {n-r brace C}``."""
    cells = as_cells(cells)
    _require(0 <= r <= n, f"needs 0 <= r <= n; got n={n}, r={r}")
    inner = mixed_count(PartitionProblem(BallSpec.distinct(n - r), cells, False), guard)
    return sum(multinomial(i) for i in compositions(r, cells.k)) * inner


def r_mixed_bell(n: int, cells: CellsLike, r: int, guard: SizeGuard = DEFAULT_GUARD) -> int:
    """As ``r_mixed_stirling`` with empty cells allowed."""
    _require(0 <= r <= n, f"needs 0 <= r <= n; got n={n}, r={r}")
    return mixed_count(PartitionProblem(BallSpec.distinct(n), as_cells(cells), True, r), guard)


def r_mixed_bell_theorem(n: int, k: int, t: int, r: int) -> int:
    """Literal ``sum_i C(r,i) C(k-i,r-i) (r-i)! B0(n-r, k+i-1, t-i)``."""
    _require(n >= r >= 1 and k >= 1 and t >= 1, f"needs n >= r >= 1, k, t >= 1; got {(n, k, t, r)}")
    return sum(
        _c(r, i) * _c(k - i, r - i) * math.factorial(r - i) * _b0_any(n - r, k + i - 1, t - i)
        for i in range(1, r + 1)
    )


def r_mixed_bell_stirling_sum(n: int, cells: CellsLike, r: int, guard: SizeGuard = DEFAULT_GUARD) -> int:
    """Sum over k = r..n of the r-mixed Stirling counts with exactly k non-empty cells.

    "Exactly k non-empty cells" is read as a sum over sub-specs of ``cells``
    whose sizes add up to k.
    """
    cells = as_cells(cells)
    _require(0 <= r <= n, f"needs 0 <= r <= n; got n={n}, r={r}")
    by_size: dict[int, int] = {}
    for js in _sub_vectors(cells):
        sub = cells.sub_spec(js)
        by_size[sub.total_cells] = by_size.get(sub.total_cells, 0) + r_mixed_stirling(n, sub, r, guard)
    return sum(by_size.get(k, 0) for k in range(r, n + 1))


def r_mixed_bell_multinomial(n: int, cells: CellsLike, r: int, guard: SizeGuard = DEFAULT_GUARD) -> int:
    """Literal ``sum_{i_1+..+i_k=r} r!/(i_1!..i_k!) {n-r brace C}_0``."""
    cells = as_cells(cells)
    _require(0 <= r <= n, f"needs 0 <= r <= n; got n={n}, r={r}")
    inner = mixed_count(PartitionProblem(BallSpec.distinct(n - r), cells, True), guard)
    return sum(multinomial(i) for i in compositions(r, cells.k)) * inner

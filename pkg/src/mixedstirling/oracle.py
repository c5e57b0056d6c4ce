"""Brute-force ground truth for mixed partition counts.

Every ball is assigned to a cell, each complete assignment is reduced to a
canonical configuration (within-group cell order and identical-ball order
forgotten), and distinct configurations are counted with a set.  The depth-
first search prunes symmetric branches; ``crosscheck`` compares it against a
plain product-of-choices enumeration.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from . import _pure
from ._backend import kernels
from .errors import OracleInconsistency, SizeGuardExceeded
from .problem import BallSpec, CellSpec, PartitionProblem

__all__ = [
    "SizeGuard",
    "DEFAULT_GUARD",
    "CanonicalConfiguration",
    "count",
    "enumerate_configurations",
    "count_unpruned",
    "crosscheck",
    "MICRO_GRID",
]


@dataclass(frozen=True)
class SizeGuard:
    max_balls: int = 10
    max_total_cells: int = 6
    max_states: int = 10**7

    def __post_init__(self):
        for name in ("max_balls", "max_total_cells", "max_states"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")

    def projected_states(self, problem: PartitionProblem) -> int:
        return problem.cells.total_cells ** problem.balls.total

    def check(self, problem: PartitionProblem) -> None:
        balls, cells = problem.balls.total, problem.cells.total_cells
        if balls > self.max_balls:
            raise SizeGuardExceeded(f"{balls} balls > max_balls={self.max_balls}")
        if cells > self.max_total_cells:
            raise SizeGuardExceeded(f"{cells} cells > max_total_cells={self.max_total_cells}")
        states = self.projected_states(problem)
        if states > self.max_states:
            raise SizeGuardExceeded(f"{states} projected states > max_states={self.max_states}")

    def admits(self, problem: PartitionProblem) -> bool:
        try:
            self.check(problem)
        except SizeGuardExceeded:
            return False
        return True


DEFAULT_GUARD = SizeGuard()


@dataclass(frozen=True, order=True)
class CanonicalConfiguration:
    """One partition: per cell group, the contents of its cells.

    A cell content is a sorted tuple of ball labels (1-based).  Inside a
    group, cells are ordered longest first, ties broken lexicographically.
    """

    groups: tuple[tuple[tuple[int, ...], ...], ...]

    def serialize(self) -> str:
        return "|".join(
            ";".join(",".join(map(str, cell)) for cell in group) for group in self.groups
        )

    def __str__(self):
        return self.serialize()


def _encode(problem: PartitionProblem):
    mults = problem.balls.multiplicities
    radix = [1] * len(mults)
    for j in range(1, len(mults)):
        radix[j] = radix[j - 1] * (mults[j - 1] + 1)
    seq = [j for j, b in enumerate(mults) for _ in range(b)]
    weights = [radix[j] for j in seq]
    return seq, list(problem.cells.group_sizes), weights, radix


def _args(problem: PartitionProblem):
    seq, sizes, weights, _ = _encode(problem)
    return seq, sizes, weights, problem.allow_empty, problem.distinct_prefix


def _trivially_zero(problem: PartitionProblem) -> bool:
    return problem.distinct_prefix > problem.cells.total_cells


def _fast_count(problem: PartitionProblem) -> int:
    args = _args(problem)
    if kernels is not _pure:
        base = sum(args[2]) + 1
        if kernels.fits_kernel(len(args[0]), problem.cells.total_cells, base):
            return kernels.count_configurations(*args)
    return _pure.count_configurations(*args)


@lru_cache(maxsize=1 << 16)
def _cached_count(problem: PartitionProblem, guard: SizeGuard) -> int:
    guard.check(problem)
    if _trivially_zero(problem):
        return 0
    return _fast_count(problem)


def count(
    problem: PartitionProblem, guard: SizeGuard = DEFAULT_GUARD, *, crosscheck: bool = False
) -> int:
    """Number of distinct configurations of ``problem``.

    With ``crosscheck=True`` the pruned search (active backend and pure
    Python) is compared against the unpruned enumeration and
    ``OracleInconsistency`` is raised on any disagreement.
    """
    value = _cached_count(problem, guard)
    if crosscheck:
        pure = len(_pure.configuration_keys(*_args(problem))) if not _trivially_zero(problem) else 0
        plain = count_unpruned(problem, guard)
        if not value == pure == plain:
            raise OracleInconsistency(
                f"{problem}: backend={value} pure={pure} unpruned={plain}"
            )
    return value


def count_unpruned(problem: PartitionProblem, guard: SizeGuard = DEFAULT_GUARD) -> int:
    guard.check(problem)
    return len(_pure.unpruned_keys(*_args(problem)))


def _decode(key, problem: PartitionProblem) -> CanonicalConfiguration:
    mults = problem.balls.multiplicities
    _, _, _, radix = _encode(problem)

    def labels(code):
        out = []
        for j, b in enumerate(mults):
            out.extend([j + 1] * ((code // radix[j]) % (b + 1)))
        return tuple(out)

    groups = []
    for group in key:
        cells = [labels(code) for code in group]
        cells.sort(key=lambda cell: (-len(cell), cell))
        groups.append(tuple(cells))
    return CanonicalConfiguration(tuple(groups))


def enumerate_configurations(
    problem: PartitionProblem, guard: SizeGuard = DEFAULT_GUARD
) -> list[CanonicalConfiguration]:
    """All configurations, ordered by their serialized form."""
    guard.check(problem)
    if _trivially_zero(problem):
        return []
    keys = _pure.configuration_keys(*_args(problem))
    configs = [_decode(key, problem) for key in keys]
    configs.sort(key=CanonicalConfiguration.serialize)
    return configs


_MICRO_BALLS = [(), (1,), (2,), (3,), (1, 1), (2, 1), (1, 2), (2, 2), (1, 1, 1), (1, 1, 2), (1, 1, 1, 1)]
_MICRO_CELLS = [(), (1,), (2,), (3,), (1, 1), (2, 1), (1, 2), (1, 1, 1), (2, 2)]


def _micro_grid() -> list[PartitionProblem]:
    out = []
    for b, c, empty in itertools.product(_MICRO_BALLS, _MICRO_CELLS, (False, True)):
        r_max = 0
        while r_max < len(b) and b[r_max] == 1:
            r_max += 1
        for r in range(r_max + 1):
            out.append(PartitionProblem(BallSpec(b), CellSpec(c), empty, r))
    return out


MICRO_GRID: tuple[PartitionProblem, ...] = tuple(_micro_grid())


def crosscheck(problems: Iterable[PartitionProblem] = MICRO_GRID, guard: SizeGuard = DEFAULT_GUARD):
    """Return ``(problem, pruned, unpruned)`` for every disagreement."""
    bad = []
    for p in problems:
        pruned = count(p, guard)
        plain = count_unpruned(p, guard)
        if pruned != plain:
            bad.append((p, pruned, plain))
    return bad

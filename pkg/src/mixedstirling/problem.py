"""Ball / cell specifications and the partition problem they form."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .errors import InvalidArgument

__all__ = ["BallSpec", "CellSpec", "PartitionProblem", "as_balls", "as_cells"]


def _positive_tuple(values: Iterable[int], what: str) -> tuple[int, ...]:
    out = tuple(int(v) for v in values)
    for v in out:
        if v < 1:
            raise InvalidArgument(f"{what} entries must be positive, got {out}")
    return out


@dataclass(frozen=True)
class BallSpec:
    """Multiplicities ``(b1, ..., bn)``: ``bi`` identical balls carry label ``i``."""

    multiplicities: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "multiplicities", _positive_tuple(self.multiplicities, "ball multiplicity")
        )

    @classmethod
    def distinct(cls, n: int) -> "BallSpec":
        if n < 0:
            raise InvalidArgument(f"n must be nonnegative, got {n}")
        return cls((1,) * n)

    @property
    def n(self) -> int:
        return len(self.multiplicities)

    @property
    def total(self) -> int:
        return sum(self.multiplicities)

    @property
    def all_distinct(self) -> bool:
        return all(b == 1 for b in self.multiplicities)


@dataclass(frozen=True)
class CellSpec:
    """Group sizes ``(c1, ..., ck)``.

    Cells inside one group are interchangeable; cells of different groups are
    told apart by their group.
    """

    group_sizes: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "group_sizes", _positive_tuple(self.group_sizes, "group size"))

    @classmethod
    def labeled(cls, k: int) -> "CellSpec":
        return cls((1,) * k)

    @property
    def k(self) -> int:
        return len(self.group_sizes)

    @property
    def total_cells(self) -> int:
        return sum(self.group_sizes)

    @property
    def all_labeled(self) -> bool:
        return all(c == 1 for c in self.group_sizes)

    def sub_spec(self, js: Iterable[int]) -> "CellSpec":
        """Replace group sizes by ``js`` (``0 <= j_i <= c_i``), dropping zero groups."""
        js = tuple(js)
        if len(js) != self.k or any(not 0 <= j <= c for j, c in zip(js, self.group_sizes)):
            raise InvalidArgument(f"sub-spec {js} does not fit {self.group_sizes}")
        return CellSpec(tuple(j for j in js if j))


BallsLike = Union[BallSpec, Iterable[int]]
CellsLike = Union[CellSpec, Iterable[int]]


def as_balls(balls: BallsLike) -> BallSpec:
    return balls if isinstance(balls, BallSpec) else BallSpec(tuple(balls))


def as_cells(cells: CellsLike) -> CellSpec:
    return cells if isinstance(cells, CellSpec) else CellSpec(tuple(cells))


@dataclass(frozen=True)
class PartitionProblem:
    balls: BallSpec
    cells: CellSpec
    allow_empty: bool = False
    distinct_prefix: int = 0

    def __post_init__(self):
        object.__setattr__(self, "balls", as_balls(self.balls))
        object.__setattr__(self, "cells", as_cells(self.cells))
        object.__setattr__(self, "allow_empty", bool(self.allow_empty))
        r = self.distinct_prefix
        if r < 0:
            raise InvalidArgument(f"distinct_prefix must be nonnegative, got {r}")
        if r > self.balls.n:
            raise InvalidArgument(f"distinct_prefix {r} exceeds the number of labels {self.balls.n}")
        if any(b != 1 for b in self.balls.multiplicities[:r]):
            raise InvalidArgument("balls in the distinct prefix must have multiplicity 1")

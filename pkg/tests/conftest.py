import pytest

from mixedstirling import oracle
from mixedstirling.problem import BallSpec, CellSpec, PartitionProblem


@pytest.fixture
def count():
    """Oracle count with a compact call signature."""

    def _count(balls, cells, allow_empty=False, r=0, guard=oracle.DEFAULT_GUARD):
        balls = BallSpec.distinct(balls) if isinstance(balls, int) else BallSpec(tuple(balls))
        problem = PartitionProblem(balls, CellSpec(tuple(cells)), allow_empty, r)
        return oracle.count(problem, guard)

    return _count

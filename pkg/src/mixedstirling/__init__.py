"""Exact counting of mixed set partitions.

Mixed partition numbers (balls with multiplicities into groups of
interchangeable cells), mixed and r-Stirling / r-Bell numbers, ordered
factorization counts, a brute-force enumeration oracle and an audit harness
that checks closed forms against it.
"""

__version__ = "0.1.0"

from ._backend import BACKEND
from .core import (
    StirlingTable,
    bell,
    binomial,
    falling_factorial,
    multinomial,
    stirling2,
    stirling2_cumulative,
)
from .errors import (
    InvalidArgument,
    MixedStirlingError,
    OracleInconsistency,
    SizeGuardExceeded,
    UnknownIdentity,
)
from .problem import BallSpec, CellSpec, PartitionProblem
from .oracle import DEFAULT_GUARD, CanonicalConfiguration, SizeGuard
from .mixed import *  # noqa: F401,F403
from .factor import *  # noqa: F401,F403

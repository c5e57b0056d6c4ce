"""Prime factorization and multiplicative partition counts.

Counting ordered factorizations of ``m = p1^a1 ... pn^an`` is the same as
distributing a multiset of balls (``ai`` balls of colour ``i``) over labeled
cells, so the counts reuse the labeled-cell formulas from ``mixed``.
"""

from __future__ import annotations

import math
import random
from functools import lru_cache

from ._backend import kernels
from .errors import InvalidArgument
from .mixed import product_formula_labeled_cells, surjective_formula_labeled_cells

__all__ = [
    "FactorizationMap",
    "factorize",
    "is_prime",
    "big_omega",
    "ordered_factorizations_with_units",
    "ordered_factorizations_no_units",
    "total_ordered_factorizations",
    "unordered_multiplicative_partitions",
]

U64_MAX = 2**64 - 1
TRIAL_LIMIT = 10**6

FactorizationMap = dict[int, int]


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    sieve = bytearray([1]) * (TRIAL_LIMIT + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(TRIAL_LIMIT) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, TRIAL_LIMIT + 1, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def _check_u64(m: int) -> None:
    if not isinstance(m, int) or isinstance(m, bool):
        raise InvalidArgument(f"expected an integer, got {m!r}")
    if m < 1:
        raise InvalidArgument(f"m must be positive, got {m}")
    if m > U64_MAX:
        raise InvalidArgument(f"m must be below 2**64, got {m}")


def is_prime(n: int) -> bool:
    """Deterministic primality test for ``0 <= n < 2**64``."""
    if n < 0 or n > U64_MAX:
        raise InvalidArgument(f"n outside the 64-bit range: {n}")
    return kernels.is_prime_u64(n)


def _split(n: int) -> int:
    """A nontrivial divisor of the odd composite ``n``."""
    rng = random.Random(n)
    while True:
        c = rng.randrange(1, n)
        y = rng.randrange(0, n)
        d = kernels.pollard_brent(n, c, y)
        if 1 < d < n:
            return d


def _factor_large(n: int, out: dict[int, int]) -> None:
    stack = [n]
    while stack:
        x = stack.pop()
        if x == 1:
            continue
        if is_prime(x):
            out[x] = out.get(x, 0) + 1
            continue
        d = _split(x)
        stack.extend((d, x // d))


def factorize(m: int) -> FactorizationMap:
    """Prime factorization of ``1 <= m < 2**64`` as ``{prime: exponent}``, sorted by prime."""
    _check_u64(m)
    out: dict[int, int] = {}
    rest = m
    limit = min(TRIAL_LIMIT, math.isqrt(rest))
    for p in _small_primes():
        if p > limit:
            break
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            out[p] = e
            limit = min(TRIAL_LIMIT, math.isqrt(rest))
    if rest > 1:
        if rest <= TRIAL_LIMIT**2:
            # no factor up to TRIAL_LIMIT and below its square: prime
            out[rest] = out.get(rest, 0) + 1
        else:
            _factor_large(rest, out)
    return dict(sorted(out.items()))


def big_omega(m: int) -> int:
    """Number of prime factors counted with multiplicity."""
    return sum(factorize(m).values())


def _exponents(m: int) -> tuple[int, ...]:
    return tuple(factorize(m).values())


def ordered_factorizations_with_units(m: int, k: int) -> int:
    """Ordered k-tuples of positive integers with product m."""
    _check_u64(m)
    if k < 1:
        raise InvalidArgument(f"k must be positive, got {k}")
    return product_formula_labeled_cells(_exponents(m), k)


def ordered_factorizations_no_units(m: int, k: int) -> int:
    """Ordered k-tuples of integers >= 2 with product m (0 once k exceeds Omega(m))."""
    _check_u64(m)
    if m < 2:
        raise InvalidArgument(f"m must be at least 2, got {m}")
    if k < 1:
        raise InvalidArgument(f"k must be positive, got {k}")
    return surjective_formula_labeled_cells(_exponents(m), k)


def total_ordered_factorizations(m: int) -> int:
    _check_u64(m)
    if m < 2:
        raise InvalidArgument(f"m must be at least 2, got {m}")
    exps = _exponents(m)
    return sum(surjective_formula_labeled_cells(exps, k) for k in range(1, sum(exps) + 1))


def _divisors(m: int) -> list[int]:
    divs = [1]
    for p, e in factorize(m).items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def unordered_multiplicative_partitions(m: int) -> int:
    """Multisets of integers >= 2 whose product is m."""
    _check_u64(m)
    if m < 2:
        raise InvalidArgument(f"m must be at least 2, got {m}")
    divs = _divisors(m)

    @lru_cache(maxsize=None)
    def parts(rest: int, cap: int) -> int:
        # factors listed in nonincreasing order, each at most cap
        if rest == 1:
            return 1
        return sum(parts(rest // d, d) for d in divs if 2 <= d <= cap and rest % d == 0)

    return parts(m, m)

"""Pure-Python kernels.

Same entry points as the compiled ``_kernels`` extension.  Used when the
extension is missing, when ``MIXEDSTIRLING_PURE`` is set, or when an
instance exceeds the extension's fixed-width limits.

Oracle inputs (shared with the extension):

* ``seq``: label index of every ball, label-sorted, prefix labels first.
* ``sizes``: group sizes; cells are numbered group by group.
* ``weights``: per-ball increment of the owning cell's content code.  A cell
  code is the mixed-radix encoding of its label-count vector.
"""

from __future__ import annotations

import itertools
from math import gcd

NAME = "python"

# Witness set that is deterministic for every n < 2**64.
MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def configuration_keys(seq, sizes, weights, allow_empty, prefix):
    """Canonical keys of every configuration, via pruned depth-first search.

    Pruning rules (each checked against ``unpruned_keys`` in the tests):
    an empty cell of a group is only opened if it is the group's next unused
    cell; consecutive identical balls go to nondecreasing cell indices;
    prefix balls go to empty cells; non-empty searches stop once the
    remaining balls cannot fill the remaining empty cells.
    """
    sizes = list(sizes)
    starts = list(itertools.accumulate([0] + sizes[:-1]))
    spans = list(zip(starts, sizes))
    n_cells = sum(sizes)
    n_balls = len(seq)
    codes = [0] * n_cells
    load = [0] * n_cells
    used = [0] * len(sizes)
    seen = set()
    empty = n_cells

    def rec(i, lo):
        nonlocal empty
        if i == n_balls:
            if allow_empty or empty == 0:
                seen.add(tuple(tuple(sorted(codes[s : s + c])) for s, c in spans))
            return
        if not allow_empty and empty > n_balls - i:
            return
        w = weights[i]
        floor = lo if i and seq[i - 1] == seq[i] else 0
        in_prefix = i < prefix
        for g, (s, c) in enumerate(spans):
            u = used[g]
            top = s + (u + 1 if u < c else c)
            for cell in range(max(s, floor), top):
                fresh = load[cell] == 0
                if in_prefix and not fresh:
                    continue
                codes[cell] += w
                load[cell] += 1
                if fresh:
                    used[g] += 1
                    empty -= 1
                rec(i + 1, cell)
                if fresh:
                    used[g] -= 1
                    empty += 1
                load[cell] -= 1
                codes[cell] -= w

    rec(0, 0)
    return seen


def count_configurations(seq, sizes, weights, allow_empty, prefix):
    return len(configuration_keys(seq, sizes, weights, allow_empty, prefix))


def unpruned_keys(seq, sizes, weights, allow_empty, prefix):
    """Reference enumeration: every assignment, filtered after the fact."""
    sizes = list(sizes)
    starts = list(itertools.accumulate([0] + sizes[:-1]))
    n_cells = sum(sizes)
    seen = set()
    for assign in itertools.product(range(n_cells), repeat=len(seq)):
        if len(set(assign[:prefix])) < prefix:
            continue
        codes = [0] * n_cells
        for cell, w in zip(assign, weights):
            codes[cell] += w
        if not allow_empty and len(set(assign)) < n_cells:
            continue
        seen.add(tuple(tuple(sorted(codes[s : s + c])) for s, c in zip(starts, sizes)))
    return seen


def is_prime_u64(n):
    if n < 2:
        return False
    for p in MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def pollard_brent(n, c, y):
    """One Brent-rho run with ``f(x) = x^2 + c``; returns a divisor of ``n``.

    The result is ``n`` itself when this ``(c, y)`` pair fails.
    """
    if n % 2 == 0:
        return 2
    g = r = q = 1
    m = 128
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = gcd(q, n)
            k += m
        r *= 2
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = gcd(abs(x - ys), n)
            if g > 1:
                break
    return g

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: oracle configuration counting and 64-bit prime helpers.

Mirrors ``_pure``.  The oracle kernel packs a configuration into a single
``uint64`` key, so callers must check ``fits_kernel`` first.
"""

from libc.stdint cimport uint64_t
from libcpp.unordered_set cimport unordered_set

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

NAME = "cython"

cdef enum:
    MAX_CELLS = 64
    MAX_BALLS = 128

MAX_KERNEL_CELLS = MAX_CELLS
MAX_KERNEL_BALLS = MAX_BALLS


cdef struct Search:
    int n_balls
    int n_groups
    int prefix
    int allow_empty
    int empty
    uint64_t base
    int seq[MAX_BALLS]
    uint64_t weight[MAX_BALLS]
    int start[MAX_CELLS]
    int size[MAX_CELLS]
    int used[MAX_CELLS]
    int load[MAX_CELLS]
    uint64_t codes[MAX_CELLS]


cdef void _leaf(Search* st, unordered_set[uint64_t]* seen) noexcept nogil:
    cdef uint64_t key = 0
    cdef uint64_t buf[MAX_CELLS]
    cdef uint64_t v
    cdef int g, s, c, a, b
    for g in range(st.n_groups):
        s = st.start[g]
        c = st.size[g]
        for a in range(c):
            v = st.codes[s + a]
            b = a
            while b > 0 and buf[b - 1] > v:
                buf[b] = buf[b - 1]
                b -= 1
            buf[b] = v
        for a in range(c):
            key = key * st.base + buf[a]
    seen.insert(key)


cdef void _rec(Search* st, int i, int lo, unordered_set[uint64_t]* seen) noexcept nogil:
    cdef int g, s, c, u, top, cell, floor, fresh
    cdef uint64_t w
    if i == st.n_balls:
        if st.allow_empty or st.empty == 0:
            _leaf(st, seen)
        return
    if not st.allow_empty and st.empty > st.n_balls - i:
        return
    w = st.weight[i]
    floor = lo if (i > 0 and st.seq[i - 1] == st.seq[i]) else 0
    for g in range(st.n_groups):
        s = st.start[g]
        c = st.size[g]
        u = st.used[g]
        top = s + (u + 1 if u < c else c)
        cell = s if s > floor else floor
        while cell < top:
            fresh = st.load[cell] == 0
            if i < st.prefix and not fresh:
                cell += 1
                continue
            st.codes[cell] += w
            st.load[cell] += 1
            if fresh:
                st.used[g] += 1
                st.empty -= 1
            _rec(st, i + 1, cell, seen)
            if fresh:
                st.used[g] -= 1
                st.empty += 1
            st.load[cell] -= 1
            st.codes[cell] -= w
            cell += 1


def fits_kernel(int n_balls, int n_cells, base):
    """True when ``base ** n_cells`` keys fit in 64 bits and arrays fit."""
    return n_balls <= MAX_BALLS and n_cells <= MAX_CELLS and base ** n_cells <= 2 ** 64


def count_configurations(seq, sizes, weights, allow_empty, int prefix):
    cdef Search st
    cdef unordered_set[uint64_t] seen
    cdef int i, g, pos = 0
    n_cells = sum(sizes)
    base = 1
    for w in weights:
        # weights are radix values; the code space is bounded by the sum of
        # all weights plus one
        base += w
    if not fits_kernel(len(seq), n_cells, base):
        raise OverflowError("instance exceeds compiled kernel limits")
    st.n_balls = len(seq)
    st.n_groups = len(sizes)
    st.prefix = prefix
    st.allow_empty = 1 if allow_empty else 0
    st.empty = n_cells
    st.base = base
    for i in range(st.n_balls):
        st.seq[i] = seq[i]
        st.weight[i] = weights[i]
    for g in range(st.n_groups):
        st.start[g] = pos
        st.size[g] = sizes[g]
        st.used[g] = 0
        pos += sizes[g]
    for i in range(n_cells):
        st.load[i] = 0
        st.codes[i] = 0
    with nogil:
        _rec(&st, 0, 0, &seen)
    return seen.size()


cdef inline uint64_t _mulmod(uint64_t a, uint64_t b, uint64_t m) noexcept nogil:
    return <uint64_t>((<u128>a * b) % m)


cdef uint64_t _powmod(uint64_t a, uint64_t e, uint64_t m) noexcept nogil:
    cdef uint64_t r = 1
    a %= m
    while e:
        if e & 1:
            r = _mulmod(r, a, m)
        a = _mulmod(a, a, m)
        e >>= 1
    return r


cdef uint64_t _gcd(uint64_t a, uint64_t b) noexcept nogil:
    cdef uint64_t t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef int _is_prime(uint64_t n) noexcept nogil:
    cdef uint64_t bases[12]
    cdef uint64_t d, x, p
    cdef int s, i, j, composite
    bases[:] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
    if n < 2:
        return 0
    for i in range(12):
        p = bases[i]
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for i in range(12):
        x = _powmod(bases[i], d, n)
        if x == 1 or x == n - 1:
            continue
        composite = 1
        for j in range(s - 1):
            x = _mulmod(x, x, n)
            if x == n - 1:
                composite = 0
                break
        if composite:
            return 0
    return 1


def is_prime_u64(n):
    if n < 0 or n >= 2 ** 64:
        raise OverflowError("n outside 64-bit range")
    return bool(_is_prime(<uint64_t>n))


cdef inline uint64_t _step(uint64_t v, uint64_t c, uint64_t n) noexcept nogil:
    # (v*v + c) mod n without wrapping past 2**64
    cdef uint64_t a = _mulmod(v, v, n)
    cdef uint64_t s = a + c
    if s < a or s >= n:
        s -= n
    return s


cdef inline uint64_t _absdiff(uint64_t a, uint64_t b) noexcept nogil:
    return a - b if a > b else b - a


cdef uint64_t _brent(uint64_t n, uint64_t c, uint64_t y) noexcept nogil:
    cdef uint64_t g = 1, r = 1, q = 1, x = y, ys = y, k, j, lim
    cdef uint64_t m = 128
    if n % 2 == 0:
        return 2
    while g == 1:
        x = y
        for j in range(r):
            y = _step(y, c, n)
        k = 0
        while k < r and g == 1:
            ys = y
            lim = m if m < r - k else r - k
            for j in range(lim):
                y = _step(y, c, n)
                q = _mulmod(q, _absdiff(x, y), n)
            g = _gcd(q, n)
            k += m
        r *= 2
    if g == n:
        while True:
            ys = _step(ys, c, n)
            g = _gcd(_absdiff(x, ys), n)
            if g > 1:
                break
    return g


def pollard_brent(n, c, y):
    if n < 2 or n >= 2 ** 64:
        raise OverflowError("n outside 64-bit range")
    cdef uint64_t nn = n, cc = c % n, yy = y % n, out
    with nogil:
        out = _brent(nn, cc, yy)
    return out

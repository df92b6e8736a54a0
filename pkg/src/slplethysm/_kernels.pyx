# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the loops in ``_kernels_py``; same signatures and results."""

from libc.stdlib cimport malloc, free
from math import gcd


cdef struct LRState:
    int ncells
    int width
    int m
    int *cell_r
    int *cell_c
    int *outer
    int *inner
    int *content
    int *grid
    int *counts


cdef object _place(LRState *s, int idx):
    cdef int r, c, v, lo, hi
    cdef object total = 0
    if idx == s.ncells:
        return 1
    r = s.cell_r[idx]
    c = s.cell_c[idx]
    hi = s.m
    if c + 1 < s.outer[r] and s.grid[r * s.width + c + 1] < hi:
        hi = s.grid[r * s.width + c + 1]
    lo = 1
    if r > 0 and c >= s.inner[r - 1]:
        lo = s.grid[(r - 1) * s.width + c] + 1
    for v in range(lo, hi + 1):
        if s.counts[v] >= s.content[v - 1]:
            continue
        if v > 1 and s.counts[v] + 1 > s.counts[v - 1]:
            continue
        s.grid[r * s.width + c] = v
        s.counts[v] += 1
        total += _place(s, idx + 1)
        s.counts[v] -= 1
    s.grid[r * s.width + c] = 0
    return total


def lr_count(outer, inner, content):
    """Number of LR tableaux of shape ``outer/inner`` with the given content."""
    cdef list o = list(outer)
    cdef list i_ = list(inner) + [0] * (len(o) - len(inner))
    cdef list ct = list(content)
    cdef LRState s
    cdef int r, c, k, rows
    if len(i_) > len(o):
        return 0
    for r in range(len(o)):
        if i_[r] > o[r]:
            return 0
    if sum(o) - sum(i_) != sum(ct):
        return 0
    rows = len(o)
    s.ncells = sum(o) - sum(i_)
    if s.ncells == 0:
        return 1
    s.width = o[0]
    s.m = len(ct)
    s.cell_r = <int *> malloc(s.ncells * sizeof(int))
    s.cell_c = <int *> malloc(s.ncells * sizeof(int))
    s.outer = <int *> malloc(rows * sizeof(int))
    s.inner = <int *> malloc(rows * sizeof(int))
    s.content = <int *> malloc((s.m + 1) * sizeof(int))
    s.grid = <int *> malloc(rows * s.width * sizeof(int))
    s.counts = <int *> malloc((s.m + 2) * sizeof(int))
    try:
        k = 0
        for r in range(rows):
            s.outer[r] = o[r]
            s.inner[r] = i_[r]
            for c in range(o[r] - 1, i_[r] - 1, -1):
                s.cell_r[k] = r
                s.cell_c[k] = c
                k += 1
        for r in range(s.m):
            s.content[r] = ct[r]
        for r in range(s.m + 2):
            s.counts[r] = 0
        for r in range(rows * s.width):
            s.grid[r] = 0
        return _place(&s, 0)
    finally:
        free(s.cell_r)
        free(s.cell_c)
        free(s.outer)
        free(s.inner)
        free(s.content)
        free(s.grid)
        free(s.counts)


cdef inline tuple _sorted3(long x, long y, long z):
    cdef long t
    if x > y:
        t = x; x = y; y = t
    if y > z:
        t = y; y = z; z = t
    if x > y:
        t = x; x = y; y = t
    return (x, y, z)


def ad_images(monomials, long n, long a, long b):
    """Images of ``ad(E_ab)`` (0-based, ``a != b``) on encoded cubic monomials."""
    cdef list out = []
    cdef dict acc
    cdef long m[3]
    cdef long i, j, p, o1, o2
    cdef tuple key
    for mono in monomials:
        m[0] = mono[0]
        m[1] = mono[1]
        m[2] = mono[2]
        acc = {}
        for p in range(3):
            i = m[p] // n
            j = m[p] % n
            o1 = m[(p + 1) % 3]
            o2 = m[(p + 2) % 3]
            if i == b:
                key = _sorted3(o1, o2, a * n + j)
                acc[key] = acc.get(key, 0) + 1
            if j == a:
                key = _sorted3(o1, o2, i * n + b)
                acc[key] = acc.get(key, 0) - 1
        out.append([(k, v) for k, v in acc.items() if v])
    return out


def sparse_rank(rows):
    """Exact fraction-free rank of integer rows given as ``{column: value}`` dicts."""
    cdef dict pivots = {}
    cdef dict r, piv, new
    cdef object lead, f, p, g, fr, fp, v, s
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        while r:
            lead = min(r)
            piv = pivots.get(lead)
            if piv is None:
                g = 0
                for v in r.values():
                    g = gcd(g, v)
                if g > 1:
                    r = {c: v // g for c, v in r.items()}
                pivots[lead] = r
                break
            f = r[lead]
            p = piv[lead]
            g = gcd(f, p)
            fr = p // g
            fp = f // g
            new = {c: v * fr for c, v in r.items()}
            for c, v in piv.items():
                s = new.get(c, 0) - fp * v
                if s:
                    new[c] = s
                else:
                    new.pop(c, None)
            g = 0
            for v in new.values():
                g = gcd(g, v)
                if g == 1:
                    break
            if g > 1:
                new = {c: v // g for c, v in new.items()}
            r = new
    return len(pivots)

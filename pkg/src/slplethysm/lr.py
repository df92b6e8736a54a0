"""Littlewood-Richardson coefficients.

:func:`lr_coefficient` and :func:`lr_expand` count LR tableaux (the counting
loop lives in :mod:`slplethysm.kernels`).  :func:`schur_product_oracle` is an
independent route through Jacobi-Trudi determinants: monomial coefficients of
products of complete homogeneous polynomials are counts of nonnegative
integer matrices with prescribed margins, and the Schur expansion is peeled
off by leading dominant monomial.  The two routes share no code.
"""

from __future__ import annotations

import random
from collections import Counter
from functools import lru_cache
from itertools import product
from typing import Iterator

from .kernels import lr_count
from .partitions import InvalidInput, Partition, partitions


def lr_coefficient(lam, mu, nu) -> int:
    """``N_{lam,mu}^nu``: multiplicity of ``S_nu`` in ``S_lam (x) S_mu``."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if nu.size() != lam.size() + mu.size() or not nu.contains(lam):
        return 0
    return lr_count(tuple(nu), tuple(lam), tuple(mu))


def _supersets(inner: Partition, boxes: int, max_length: int) -> Iterator[Partition]:
    """Partitions containing ``inner`` with ``boxes`` more cells and bounded length."""
    rows = max_length
    if inner.length() > rows:
        return
    base = list(inner.padded(rows))

    def rec(i: int, remaining: int, prev: int | None) -> Iterator[list[int]]:
        if i == rows:
            if remaining == 0:
                yield []
            return
        lo = base[i]
        hi = lo + remaining if prev is None else min(prev, lo + remaining)
        for v in range(hi, lo - 1, -1):
            for rest in rec(i + 1, remaining - (v - lo), v):
                yield [v] + rest

    for parts in rec(0, boxes, None):
        yield Partition(parts)


def lr_expand(lam, mu, max_length: int) -> Counter:
    """All ``nu`` of length at most ``max_length`` in ``S_lam (x) S_mu`` with multiplicities."""
    lam, mu = Partition(lam), Partition(mu)
    # skew shapes over the larger partition have fewer cells to fill
    inner, content = (lam, mu) if lam.size() >= mu.size() else (mu, lam)
    rows = min(max_length, inner.length() + content.length())
    out: Counter = Counter()
    if inner.length() > max_length:
        return out
    for nu in _supersets(inner, content.size(), rows):
        c = lr_count(tuple(nu), tuple(inner), tuple(content))
        if c:
            out[nu] = c
    return out


# --- independent oracle ----------------------------------------------------


@lru_cache(maxsize=None)
def _margin_count(rows: tuple[int, ...], cols: tuple[int, ...]) -> int:
    """Number of nonnegative integer matrices with row sums ``rows`` and column sums ``cols``.

    ``cols`` is kept sorted so column permutations share cache entries.
    """
    if not rows:
        return 1 if not any(cols) else 0
    if sum(rows) != sum(cols):
        return 0
    first, rest = rows[0], rows[1:]
    total = 0

    def split(j: int, left: int, taken: list[int]):
        nonlocal total
        if j == len(cols):
            if left == 0:
                remaining = tuple(sorted((c - t for c, t in zip(cols, taken) if c - t), reverse=True))
                total += _margin_count(rest, remaining)
            return
        for t in range(min(left, cols[j]), -1, -1):
            taken.append(t)
            split(j + 1, left - t, taken)
            taken.pop()

    split(0, first, [])
    return total


def _jacobi_trudi_terms(lam: Partition) -> list[tuple[int, tuple[int, ...]]]:
    """Nonzero terms ``(sign, degrees)`` of ``det(h_{lam_i - i + j})``."""
    ell = lam.length()
    terms = []

    def rec(i: int, used: list[bool], sign: int, degrees: list[int]):
        if i == ell:
            terms.append((sign, tuple(d for d in degrees if d)))
            return
        for j in range(ell):
            if used[j]:
                continue
            d = lam[i] - i + j
            if d < 0:
                continue
            # sign of the permutation: count later-fixed entries that jump over j
            inversions = sum(1 for jj in range(j) if not used[jj])
            used[j] = True
            degrees.append(d)
            rec(i + 1, used, sign * (-1) ** inversions, degrees)
            degrees.pop()
            used[j] = False

    rec(0, [False] * ell, 1, [])
    return terms


@lru_cache(maxsize=None)
def _jt_terms_cached(lam: tuple[int, ...]):
    return _jacobi_trudi_terms(Partition(lam))


def _dominant_coefficient(factors: tuple[tuple[int, ...], ...], alpha: tuple[int, ...]) -> int:
    """Coefficient of ``x^alpha`` in the product of the Schur polynomials ``factors``."""
    cols = tuple(sorted((a for a in alpha if a), reverse=True))
    total = 0
    for combo in product(*(_jt_terms_cached(f) for f in factors)):
        sign = 1
        degrees: list[int] = []
        for s, d in combo:
            sign *= s
            degrees.extend(d)
        total += sign * _margin_count(tuple(sorted(degrees, reverse=True)), cols)
    return total


def kostka(nu, alpha) -> int:
    """Monomial coefficient of ``x^alpha`` in ``s_nu`` (a Kostka number for dominant ``alpha``)."""
    return _dominant_coefficient((tuple(Partition(nu)),), tuple(alpha))


def schur_product_oracle(lam, mu, m: int) -> Counter:
    """Schur expansion of ``s_lam * s_mu`` in ``m`` variables, computed without tableaux."""
    lam, mu = Partition(lam), Partition(mu)
    total = lam.size() + mu.size()
    if m < total:
        raise InvalidInput(f"oracle needs m >= {total} variables, got {m}")
    alphas = list(partitions(total, max_length=m))  # reverse lex: leading first
    coeffs = {a: _dominant_coefficient((tuple(lam), tuple(mu)), tuple(a)) for a in alphas}
    out: Counter = Counter()
    for idx, lead in enumerate(alphas):
        c = coeffs[lead]
        if c == 0:
            continue
        if c < 0:
            raise ArithmeticError(f"negative leading coefficient at {list(lead)}")
        out[lead] = c
        for a in alphas[idx:]:
            coeffs[a] -= c * kostka(lead, a)
    if any(coeffs.values()):
        raise ArithmeticError("oracle residue is not zero")
    return out


# --- explicit symmetric polynomials (small m only) --------------------------


class SymmetricPolynomial(dict):
    """Sparse ``{exponent tuple: int}`` polynomial in ``m`` variables."""

    def __init__(self, m: int, terms=None):
        super().__init__()
        self.m = m
        for e, c in (terms or {}).items():
            if c:
                self[tuple(e)] = c

    def __mul__(self, other: "SymmetricPolynomial") -> "SymmetricPolynomial":
        out: dict = {}
        for e1, c1 in self.items():
            for e2, c2 in other.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SymmetricPolynomial(self.m, out)

    def __add__(self, other: "SymmetricPolynomial") -> "SymmetricPolynomial":
        out = dict(self)
        for e, c in other.items():
            out[e] = out.get(e, 0) + c
        return SymmetricPolynomial(self.m, out)

    def scaled(self, c: int) -> "SymmetricPolynomial":
        return SymmetricPolynomial(self.m, {e: c * v for e, v in self.items()})

    def is_symmetric(self, trials: int = 20, rng: random.Random | None = None) -> bool:
        """Spot check invariance under random transpositions of variables."""
        rng = rng or random.Random(0)
        if self.m < 2:
            return True
        for _ in range(trials):
            i, j = rng.sample(range(self.m), 2)
            for e, c in self.items():
                f = list(e)
                f[i], f[j] = f[j], f[i]
                if self.get(tuple(f), 0) != c:
                    return False
        return True

    def dominant_part(self) -> dict:
        return {e: c for e, c in self.items() if all(a >= b for a, b in zip(e, e[1:]))}


def complete_homogeneous(d: int, m: int) -> SymmetricPolynomial:
    if d < 0:
        return SymmetricPolynomial(m)
    terms = {}

    def rec(i: int, left: int, acc: list[int]):
        if i == m - 1:
            terms[tuple(acc + [left])] = 1
            return
        for t in range(left, -1, -1):
            rec(i + 1, left - t, acc + [t])

    if m == 0:
        return SymmetricPolynomial(0, {(): 1} if d == 0 else {})
    rec(0, d, [])
    return SymmetricPolynomial(m, terms)


def schur_polynomial(lam, m: int) -> SymmetricPolynomial:
    """Full expansion of ``s_lam(x_1..x_m)`` by the Jacobi-Trudi determinant."""
    lam = Partition(lam)
    one = SymmetricPolynomial(m, {(0,) * m: 1})
    total = SymmetricPolynomial(m)
    for sign, degrees in _jacobi_trudi_terms(lam):
        term = one
        for d in degrees:
            term = term * complete_homogeneous(d, m)
        total = total + term.scaled(sign)
    return total

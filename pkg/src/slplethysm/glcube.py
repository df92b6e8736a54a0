"""S^3(gl_n) as cubic polynomials in the matrix units E[i,j].

Indices are 1-based everywhere in this module's public API.  A monomial is a
sorted triple of index pairs; a :class:`GlCubePolynomial` maps monomials to
exact rational coefficients.  ``gl_n`` acts on ``E[i,j]`` by the commutator,
``[E_ab, E_ij] = delta_bi E_aj - delta_ja E_ib``, extended as a derivation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, permutations
from math import lcm
from typing import Callable, Iterable, Mapping, Sequence

from .kernels import ad_images, sparse_rank
from .partitions import GLWeight, InvalidInput

Pair = tuple[int, int]
GlMonomial = tuple[Pair, Pair, Pair]


def canonical(pairs: Iterable[Pair]) -> GlMonomial:
    pairs = tuple(sorted((int(i), int(j)) for i, j in pairs))
    if len(pairs) != 3:
        raise InvalidInput(f"a cubic monomial needs exactly three factors, got {len(pairs)}")
    return pairs  # type: ignore[return-value]


def monomial_weight(mono: GlMonomial, n: int) -> tuple[int, ...]:
    w = [0] * n
    for i, j in mono:
        w[i - 1] += 1
        w[j - 1] -= 1
    return tuple(w)


def _encode(mono: GlMonomial, n: int) -> tuple[int, int, int]:
    return tuple(sorted((i - 1) * n + (j - 1) for i, j in mono))  # type: ignore[return-value]


def _decode(codes: Sequence[int], n: int) -> GlMonomial:
    return tuple((c // n + 1, c % n + 1) for c in codes)  # type: ignore[return-value]


def _clean(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class GlCubePolynomial:
    """Exact linear combination of cubic monomials in the E[i,j] of gl_n."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[GlMonomial, int | Fraction] | None = None):
        self.n = n
        clean = {}
        for mono, c in (terms or {}).items():
            if not c:
                continue
            mono = canonical(mono)
            if any(not (1 <= x <= n) for pair in mono for x in pair):
                raise InvalidInput(f"monomial {mono} uses an index outside 1..{n}")
            clean[mono] = clean.get(mono, 0) + c
        self.terms = {m: _clean(c) for m, c in clean.items() if c}

    @classmethod
    def _from_codes(cls, n: int, coded: Mapping[tuple[int, ...], int]) -> "GlCubePolynomial":
        p = cls(n)
        p.terms = {_decode(k, n): _clean(v) for k, v in coded.items() if v}
        return p

    def _codes(self) -> dict[tuple[int, ...], int | Fraction]:
        return {_encode(m, self.n): c for m, c in self.terms.items()}

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GlCubePolynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def _check(self, other: "GlCubePolynomial"):
        if self.n != other.n:
            raise InvalidInput(f"polynomials live in different gl_n: {self.n} vs {other.n}")

    def __add__(self, other: "GlCubePolynomial") -> "GlCubePolynomial":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return GlCubePolynomial(self.n, out)

    def __neg__(self) -> "GlCubePolynomial":
        return GlCubePolynomial(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "GlCubePolynomial") -> "GlCubePolynomial":
        return self + (-other)

    def __rmul__(self, scalar) -> "GlCubePolynomial":
        return GlCubePolynomial(self.n, {m: scalar * c for m, c in self.terms.items()})

    def __repr__(self) -> str:
        return f"GlCubePolynomial(n={self.n}, {format_poly(self)!r})"


# --- building polynomials from linear forms ------------------------------------


LinearForm = dict  # {(i, j): coefficient}


def E(i: int, j: int) -> LinearForm:
    return {(i, j): 1}


def identity(n: int) -> LinearForm:
    return {(i, i): 1 for i in range(1, n + 1)}


def cube_product(n: int, a: LinearForm, b: LinearForm, c: LinearForm) -> GlCubePolynomial:
    """Product of three linear forms in the symmetric algebra."""
    out: dict = {}
    for p, x in a.items():
        for q, y in b.items():
            for r, z in c.items():
                m = canonical((p, q, r))
                out[m] = out.get(m, 0) + x * y * z
    return GlCubePolynomial(n, out)


class FactoredCubic:
    """Sum of scaled products of three linear forms, kept unexpanded.

    Table 2 writes its vectors this way (with ``I`` as a single factor); the
    number of summands, not the number of expanded monomials, is what bounds
    the Waring certificates built from it.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms = list(terms or [])

    def __add__(self, other: "FactoredCubic") -> "FactoredCubic":
        return FactoredCubic(self.n, self.terms + other.terms)

    def __neg__(self) -> "FactoredCubic":
        return FactoredCubic(self.n, [(-c, f) for c, f in self.terms])

    def __sub__(self, other: "FactoredCubic") -> "FactoredCubic":
        return self + (-other)

    def __len__(self) -> int:
        return len(self.terms)

    def expand(self) -> GlCubePolynomial:
        out: dict = {}
        for c, (a, b, d) in self.terms:
            for m, v in cube_product(self.n, a, b, d).terms.items():
                out[m] = out.get(m, 0) + c * v
        return GlCubePolynomial(self.n, out)


def _prod(n: int, a: LinearForm, b: LinearForm, c: LinearForm) -> FactoredCubic:
    return FactoredCubic(n, [(1, (a, b, c))])


# --- weights and the adjoint action ---------------------------------------------


def weight_of(p: GlCubePolynomial) -> tuple[int, ...] | None:
    """Common weight of all monomials, or ``None`` when ``p`` is not a weight vector."""
    if not p:
        raise InvalidInput("the zero polynomial has no weight")
    weights = {monomial_weight(m, p.n) for m in p.terms}
    return weights.pop() if len(weights) == 1 else None


def apply_ad(a: int, b: int, p: GlCubePolynomial) -> GlCubePolynomial:
    """Action of the root vector ``E_ab`` (``a != b``) on ``p``."""
    n = p.n
    if a == b:
        raise InvalidInput("apply_ad needs a != b; use apply_cartan for diagonal elements")
    if not (1 <= a <= n and 1 <= b <= n):
        raise InvalidInput(f"indices ({a},{b}) outside 1..{n}")
    coded = p._codes()
    monos = list(coded)
    out: dict = {}
    for mono, images in zip(monos, ad_images(monos, n, a - 1, b - 1)):
        c = coded[mono]
        for img, k in images:
            out[img] = out.get(img, 0) + k * c
    return GlCubePolynomial._from_codes(n, out)


def apply_cartan(a: int, b: int, p: GlCubePolynomial) -> GlCubePolynomial:
    """Action of ``E_aa - E_bb``: multiplies each monomial by its weight pairing."""
    out = {}
    for m, c in p.terms.items():
        w = monomial_weight(m, p.n)
        out[m] = (w[a - 1] - w[b - 1]) * c
    return GlCubePolynomial(p.n, out)


def is_highest_weight(p: GlCubePolynomial) -> bool:
    """True iff every simple raising operator ``E_(a,a+1)`` kills ``p``."""
    return all(not apply_ad(a, a + 1, p) for a in range(1, p.n))


# --- the sixteen highest-weight vectors ----------------------------------------


def _row_iii(n):
    I = identity(n)
    return _prod(n, I, I, I)


def _row_i_trace_sq(n):
    I = identity(n)
    out = FactoredCubic(n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            out = out + _prod(n, I, E(i, j), E(j, i))
    return out


def _row_trace_cube(n):
    terms = [(1, (E(i, j), E(j, k), E(k, i)))
             for i in range(1, n + 1) for j in range(1, n + 1) for k in range(1, n + 1)]
    return FactoredCubic(n, terms)


def _row_ii_e1n(n):
    I = identity(n)
    return _prod(n, I, I, E(1, n))


def _row_i_e1i_ein(n):
    I = identity(n)
    out = FactoredCubic(n)
    for i in range(1, n + 1):
        out = out + _prod(n, I, E(1, i), E(i, n))
    return out


def _row_e1n_trace_sq(n):
    out = FactoredCubic(n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            out = out + _prod(n, E(1, n), E(i, j), E(j, i))
    return out


def _row_e1i_eij_ejn(n):
    out = FactoredCubic(n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            out = out + _prod(n, E(1, i), E(i, j), E(j, n))
    return out


def _row_i_e1n_e1n(n):
    return _prod(n, identity(n), E(1, n), E(1, n))


def _row_e1n_e1i_ein(n):
    out = FactoredCubic(n)
    for i in range(1, n + 1):
        out = out + _prod(n, E(1, n), E(1, i), E(i, n))
    return out


def _row_11_m2(n):
    out = FactoredCubic(n)
    for i in range(1, n + 1):
        out = out + _prod(n, E(1, n), E(2, i), E(i, n)) - _prod(n, E(2, n), E(1, i), E(i, n))
    return out


def _row_2_m11(n):
    out = FactoredCubic(n)
    for i in range(1, n + 1):
        out = (out + _prod(n, E(1, n), E(1, i), E(i, n - 1))
               - _prod(n, E(1, n - 1), E(1, i), E(i, n)))
    return out


def _row_i_11_m11(n):
    I = identity(n)
    return _prod(n, I, E(1, n), E(2, n - 1)) - _prod(n, I, E(1, n - 1), E(2, n))


def _row_11_m11_sum(n):
    out = FactoredCubic(n)
    for i in range(1, n + 1):
        out = (out
               + _prod(n, E(1, n), E(2, i), E(i, n - 1))
               - _prod(n, E(2, n), E(1, i), E(i, n - 1))
               - _prod(n, E(1, n - 1), E(2, i), E(i, n))
               + _prod(n, E(2, n - 1), E(1, i), E(i, n)))
    return out


def _row_e1n_cubed(n):
    return _prod(n, E(1, n), E(1, n), E(1, n))


def _row_21_m12(n):
    return _prod(n, E(1, n), E(1, n - 1), E(2, n)) - _prod(n, E(1, n), E(1, n), E(2, n - 1))


def _perm_sign(p: Sequence[int]) -> int:
    sign = 1
    for x in range(len(p)):
        for y in range(x + 1, len(p)):
            if p[x] > p[y]:
                sign = -sign
    return sign


def _row_111_m111(n):
    out = FactoredCubic(n)
    for s in permutations((1, 2, 3)):
        term = _prod(n, E(s[0], n), E(s[1], n - 1), E(s[2], n - 2))
        out = out + (term if _perm_sign(s) > 0 else -term)
    return out


@dataclass(frozen=True)
class Table2Row:
    row: int
    prefix: tuple[int, ...]
    suffix: tuple[int, ...]
    text: str
    indices: Callable[[int], tuple[int, ...]]
    build: Callable[[int], "FactoredCubic"]

    def weight(self, n: int) -> tuple[int, ...]:
        return self.prefix + (0,) * (n - len(self.prefix) - len(self.suffix)) + self.suffix

    @property
    def min_n(self) -> int:
        n = 2
        while True:
            idx = self.indices(n)
            if all(1 <= i <= n for i in idx) and len(set(idx)) == len(idx):
                return n
            n += 1


def _none(n):
    return ()


TABLE2: tuple[Table2Row, ...] = (
    Table2Row(1, (), (), "III", _none, _row_iii),
    Table2Row(2, (), (), "sum_{i,j} I E[i,j]E[j,i]", _none, _row_i_trace_sq),
    Table2Row(3, (), (), "sum_{i,j,k} E[i,j]E[j,k]E[k,i]", _none, _row_trace_cube),
    Table2Row(4, (1,), (-1,), "IIE[1,n]", lambda n: (1, n), _row_ii_e1n),
    Table2Row(5, (1,), (-1,), "sum_i IE[1,i]E[i,n]", lambda n: (1, n), _row_i_e1i_ein),
    Table2Row(6, (1,), (-1,), "sum_{i,j} E[1,n]E[i,j]E[j,i]", lambda n: (1, n), _row_e1n_trace_sq),
    Table2Row(7, (1,), (-1,), "sum_{i,j} E[1,i]E[i,j]E[j,n]", lambda n: (1, n), _row_e1i_eij_ejn),
    Table2Row(8, (2,), (-2,), "IE[1,n]E[1,n]", lambda n: (1, n), _row_i_e1n_e1n),
    Table2Row(9, (2,), (-2,), "sum_i E[1,n]E[1,i]E[i,n]", lambda n: (1, n), _row_e1n_e1i_ein),
    Table2Row(10, (1, 1), (-2,), "sum_i E[1,n]E[2,i]E[i,n] - E[2,n]E[1,i]E[i,n]",
              lambda n: (1, 2, n), _row_11_m2),
    Table2Row(11, (2,), (-1, -1), "sum_i E[1,n]E[1,i]E[i,n-1] - E[1,n-1]E[1,i]E[i,n]",
              lambda n: (1, n - 1, n), _row_2_m11),
    Table2Row(12, (1, 1), (-1, -1), "IE[1,n]E[2,n-1] - IE[1,n-1]E[2,n]",
              lambda n: (1, 2, n - 1, n), _row_i_11_m11),
    Table2Row(13, (1, 1), (-1, -1),
              "sum_i E[1,n]E[2,i]E[i,n-1] - E[2,n]E[1,i]E[i,n-1] - E[1,n-1]E[2,i]E[i,n] + E[2,n-1]E[1,i]E[i,n]",
              lambda n: (1, 2, n - 1, n), _row_11_m11_sum),
    Table2Row(14, (3,), (-3,), "E[1,n]E[1,n]E[1,n]", lambda n: (1, n), _row_e1n_cubed),
    Table2Row(15, (2, 1), (-1, -2), "E[1,n]E[1,n-1]E[2,n] - E[1,n]E[1,n]E[2,n-1]",
              lambda n: (1, 2, n - 1, n), _row_21_m12),
    Table2Row(16, (1, 1, 1), (-1, -1, -1), "sum_{s in S_3} sgn(s) E[s1,n]E[s2,n-1]E[s3,n-2]",
              lambda n: (1, 2, 3, n - 2, n - 1, n), _row_111_m111),
)

CYCLIC_ROW = 3


def table2_row(row: int) -> Table2Row:
    if not 1 <= row <= len(TABLE2):
        raise InvalidInput(f"row must be in 1..{len(TABLE2)}, got {row}")
    return TABLE2[row - 1]


def table2_factored(row: int, n: int) -> FactoredCubic:
    """The row's vector as written, a sum of products of linear forms (sums unrestricted)."""
    entry = table2_row(row)
    if n < entry.min_n:
        raise InvalidInput(f"row {row} requires n >= {entry.min_n}, got n={n}")
    return entry.build(n)


def table2_vector(row: int, n: int) -> GlCubePolynomial:
    """Fully expanded highest-weight vector of the given row."""
    return table2_factored(row, n).expand()


def verification_record(row: int, n: int) -> dict:
    """``{"row", "weight", "is_hwv", "n"}`` for one row."""
    p = table2_vector(row, n)
    w = weight_of(p)
    return {
        "row": row,
        "weight": list(w) if w is not None else None,
        "is_hwv": w is not None and is_highest_weight(p),
        "n": n,
    }


# --- weight spaces and the highest-weight kernel --------------------------------


def _weight_space_codes(n: int, mu: Sequence[int]) -> list[tuple[int, int, int]]:
    mu = tuple(mu)
    if len(mu) != n or sum(mu) != 0:
        return []
    out = []
    N = n * n
    for c1 in range(N):
        i1, j1 = divmod(c1, n)
        for c2 in range(c1, N):
            i2, j2 = divmod(c2, n)
            rem = list(mu)
            rem[i1] -= 1
            rem[j1] += 1
            rem[i2] -= 1
            rem[j2] += 1
            plus = [x for x in range(n) if rem[x] > 0]
            minus = [x for x in range(n) if rem[x] < 0]
            if not plus and not minus:
                for d in range(n):
                    c3 = d * n + d
                    if c3 >= c2:
                        out.append((c1, c2, c3))
            elif len(plus) == 1 and len(minus) == 1 and rem[plus[0]] == 1 and rem[minus[0]] == -1:
                c3 = plus[0] * n + minus[0]
                if c3 >= c2:
                    out.append((c1, c2, c3))
    out.sort()
    return out


def weight_space_basis(n: int, mu: Sequence[int]) -> list[GlMonomial]:
    """All cubic monomials of weight ``mu``, sorted."""
    if isinstance(mu, GLWeight):
        mu = mu.entries
    return [_decode(c, n) for c in _weight_space_codes(n, mu)]


def hwv_space_dim(n: int, mu: Sequence[int]) -> int:
    """Dimension of the joint kernel of the raising operators on the ``mu`` weight space."""
    if isinstance(mu, GLWeight):
        mu = mu.entries
    mu = tuple(mu)
    if len(mu) != n:
        raise InvalidInput(f"weight {list(mu)} does not have length n={n}")
    if sum(mu) != 0 or any(a < b for a, b in zip(mu, mu[1:])):
        raise InvalidInput(f"weight {list(mu)} must be dominant and sum to zero")
    basis = _weight_space_codes(n, mu)
    if not basis:
        return 0
    index: dict = {}
    rows = [dict() for _ in basis]
    for a in range(n - 1):
        for r, images in enumerate(ad_images(basis, n, a, a + 1)):
            for img, c in images:
                key = index.setdefault((a, img), len(index))
                rows[r][key] = rows[r].get(key, 0) + c
    return len(basis) - sparse_rank(rows)


def _integer_rows(vs: Sequence[GlCubePolynomial]) -> list[dict]:
    keys: dict = {}
    rows = []
    for p in vs:
        den = 1
        for c in p.terms.values():
            if isinstance(c, Fraction):
                den = lcm(den, c.denominator)
        rows.append({keys.setdefault(m, len(keys)): int(c * den) for m, c in p.terms.items()})
    return rows


def exact_rank(vs: Sequence[GlCubePolynomial]) -> int:
    if len({p.n for p in vs}) > 1:
        raise InvalidInput("all polynomials must share n")
    return sparse_rank(_integer_rows(vs))


def linear_independence(vs: Sequence[GlCubePolynomial]) -> bool:
    return exact_rank(vs) == len(vs)


def rows_of_weight(mu: Sequence[int], n: int) -> list[int]:
    mu = tuple(mu)
    return [r.row for r in TABLE2 if n >= r.min_n and r.weight(n) == mu]


def all_monomials(n: int) -> list[GlMonomial]:
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    return [canonical(t) for t in combinations_with_replacement(pairs, 3)]


# --- text format ---------------------------------------------------------------


def _format_coeff(c) -> str:
    return str(c)


def format_poly(p: GlCubePolynomial) -> str:
    """``c * E[i,j]E[k,l]E[p,q] + ...`` with monomials in sorted order."""
    if not p:
        return "0"
    parts = []
    for mono in sorted(p.terms):
        c = p.terms[mono]
        body = "".join(f"E[{i},{j}]" for i, j in mono)
        sign = "-" if c < 0 else "+"
        parts.append((sign, f"{_format_coeff(abs(c))} * {body}"))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, s in parts[1:]:
        text += f" {sign} {s}"
    return text


_FACTOR_RE = re.compile(r"E\[\s*(\d+)\s*,\s*(\d+)\s*\]|I")
_TERM_RE = re.compile(r"^\s*(?:(?P<coeff>\d+(?:/\d+)?)\s*\*?\s*)?(?P<body>(?:\s*(?:E\[\s*\d+\s*,\s*\d+\s*\]|I))+)\s*$")


def parse_poly(text: str, n: int) -> GlCubePolynomial:
    """Inverse of :func:`format_poly`; ``I`` is expanded as the identity matrix."""
    text = text.strip()
    if text == "0":
        return GlCubePolynomial(n)
    chunks = re.split(r"(?<!^)\s*([+-])\s*(?=\d|E|I)", text)
    sign = 1
    first = chunks[0]
    if first.startswith("-"):
        sign, first = -1, first[1:]
    elif first.startswith("+"):
        first = first[1:]
    items = [(sign, first)]
    for op, body in zip(chunks[1::2], chunks[2::2]):
        items.append((1 if op == "+" else -1, body))
    out = GlCubePolynomial(n)
    for sign, body in items:
        m = _TERM_RE.match(body)
        if not m:
            raise InvalidInput(f"cannot parse term {body!r}")
        coeff = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
        factors: list[LinearForm] = []
        for fm in _FACTOR_RE.finditer(m.group("body")):
            if fm.group(0) == "I":
                factors.append(identity(n))
            else:
                factors.append(E(int(fm.group(1)), int(fm.group(2))))
        if len(factors) != 3:
            raise InvalidInput(f"term {body!r} has {len(factors)} factors, expected 3")
        out = out + (sign * coeff) * cube_product(n, *factors)
    return out

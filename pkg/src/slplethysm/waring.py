"""Cubic forms over the Gaussian rationals and checkable Waring certificates.

Nothing here computes a rank.  A :class:`WaringCertificate` is an explicit
identity ``f = sum c_j * l_j^3`` and certifies ``rank(f) <= len``; an
:class:`EpsilonFamily` is an identity in ``eps`` whose ``eps^0`` part is ``f``
and whose negative powers vanish, certifying ``border rank(f) <= len``.  The
catalecticant rank is the matching lower bound.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from itertools import combinations_with_replacement
from math import factorial
from typing import Iterable, Sequence

from .partitions import InvalidInput


# --- scalars --------------------------------------------------------------------


class GaussianRational:
    """``re + im*i`` with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x)
        if isinstance(x, str):
            return cls.parse(x)
        if isinstance(x, complex):
            raise TypeError("floating complex numbers are not exact; pass a string or GaussianRational")
        raise TypeError(f"cannot coerce {type(x).__name__} to GaussianRational")

    def __add__(self, o):
        o = _gr(o)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, o):
        o = _gr(o)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        o = _gr(o)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __truediv__(self, o):
        o = _gr(o)
        if o is NotImplemented:
            return o
        d = o.norm()
        if d == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * o.conjugate()
        return GaussianRational(num.re / d, num.im / d)

    def __rtruediv__(self, o):
        return GaussianRational.coerce(o) / self

    def __pow__(self, k: int):
        out = GaussianRational(1)
        base = self if k >= 0 else GaussianRational(1) / self
        for _ in range(abs(k)):
            out = out * base
        return out

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, o):
        o = _gr(o)
        if o is NotImplemented:
            return False
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im)) if self.im else hash(self.re)

    def __repr__(self):
        return f"GaussianRational({str(self)!r})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        im = "" if abs(self.im) == 1 else str(abs(self.im))
        if not self.re:
            return ("-" if self.im < 0 else "") + im + "i"
        return f"{self.re}{'-' if self.im < 0 else '+'}{im}i"

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        s = text.replace(" ", "").replace("*", "")
        if not s:
            raise InvalidInput("empty scalar")
        try:
            if not s.endswith("i"):
                return cls(Fraction(s))
            body = s[:-1]
            cut = max(body.rfind("+"), body.rfind("-"))
            if cut > 0:
                re_part, im_part = body[:cut], body[cut:]
            else:
                re_part, im_part = "0", body
            if im_part in ("", "+"):
                im_part = "1"
            elif im_part == "-":
                im_part = "-1"
            return cls(Fraction(re_part), Fraction(im_part))
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInput(f"cannot parse Gaussian rational {text!r}") from exc


def _gr(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    return NotImplemented


I_UNIT = GaussianRational(0, 1)
ZERO = GaussianRational(0)
ONE = GaussianRational(1)


class LaurentPoly:
    """Finite Laurent polynomial in ``eps`` with Gaussian-rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        for d, c in (coeffs or {}).items():
            c = GaussianRational.coerce(c)
            if c:
                self.coeffs[int(d)] = c

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def coerce(cls, x) -> "LaurentPoly":
        return x if isinstance(x, LaurentPoly) else cls.const(x)

    def __add__(self, o):
        o = LaurentPoly.coerce(o)
        out = dict(self.coeffs)
        for d, c in o.coeffs.items():
            out[d] = out.get(d, ZERO) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({d: -c for d, c in self.coeffs.items()})

    def __sub__(self, o):
        return self + (-LaurentPoly.coerce(o))

    def __mul__(self, o):
        o = LaurentPoly.coerce(o)
        out: dict = {}
        for d1, c1 in self.coeffs.items():
            for d2, c2 in o.coeffs.items():
                out[d1 + d2] = out.get(d1 + d2, ZERO) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, o):
        if not isinstance(o, LaurentPoly):
            o = LaurentPoly.coerce(o)
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __getitem__(self, d: int) -> GaussianRational:
        return self.coeffs.get(d, ZERO)

    def min_degree(self) -> int:
        return min(self.coeffs) if self.coeffs else 0

    def max_degree(self) -> int:
        return max(self.coeffs) if self.coeffs else 0

    def __repr__(self):
        return "LaurentPoly(" + ", ".join(f"eps^{d}: {c}" for d, c in sorted(self.coeffs.items())) + ")"


# --- cubic forms ------------------------------------------------------------------


Exponent = tuple[int, ...]


class CubicForm:
    """Homogeneous cubic in ``m`` variables: ``{exponent: GaussianRational}``."""

    __slots__ = ("m", "terms", "variables")

    def __init__(self, m: int, terms=None, variables: Sequence[str] | None = None):
        self.m = m
        self.variables = tuple(variables) if variables is not None else tuple(f"x{i}" for i in range(m))
        if len(self.variables) != m:
            raise InvalidInput(f"{len(self.variables)} variable names for {m} variables")
        self.terms: dict[Exponent, GaussianRational] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != m or sum(e) != 3 or min(e) < 0:
                raise InvalidInput(f"exponent {e} is not a cubic exponent in {m} variables")
            c = GaussianRational.coerce(c)
            if c:
                self.terms[e] = self.terms.get(e, ZERO) + c
        self.terms = {e: c for e, c in self.terms.items() if c}

    @classmethod
    def from_monomials(cls, m: int, items: Iterable[tuple[int, Sequence[int]]],
                       variables: Sequence[str] | None = None) -> "CubicForm":
        """``items`` are ``(coefficient, [v1, v2, v3])`` with variable indices."""
        terms: dict = {}
        for c, idx in items:
            e = [0] * m
            for v in idx:
                e[v] += 1
            e = tuple(e)
            terms[e] = terms.get(e, ZERO) + GaussianRational.coerce(c)
        return cls(m, terms, variables)

    def __eq__(self, o):
        return isinstance(o, CubicForm) and self.m == o.m and self.terms == o.terms

    def __hash__(self):
        return hash((self.m, frozenset(self.terms.items())))

    def __add__(self, o: "CubicForm") -> "CubicForm":
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, ZERO) + c
        return CubicForm(self.m, out, self.variables)

    def __neg__(self):
        return CubicForm(self.m, {e: -c for e, c in self.terms.items()}, self.variables)

    def __sub__(self, o):
        return self + (-o)

    def scaled(self, c) -> "CubicForm":
        c = GaussianRational.coerce(c)
        return CubicForm(self.m, {e: c * v for e, v in self.terms.items()}, self.variables)

    def renamed(self, variables: Sequence[str]) -> "CubicForm":
        return CubicForm(self.m, self.terms, variables)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            mono = "*".join(
                (v if k == 1 else f"{v}^{k}") for v, k in zip(self.variables, e) if k
            )
            parts.append(f"({self.terms[e]})*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"CubicForm({self.m}, {str(self)!r})"

    def to_json(self) -> dict:
        return {
            "variables": list(self.variables),
            "terms": [{"exponent": list(e), "coeff": str(c)} for e, c in sorted(self.terms.items(), reverse=True)],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CubicForm":
        variables = data["variables"]
        terms: dict = {}
        for t in data["terms"]:
            e = tuple(t["exponent"])
            terms[e] = terms.get(e, ZERO) + GaussianRational.coerce(str(t["coeff"]))
        return cls(len(variables), terms, variables)


def _multinomial(counts: Sequence[int]) -> int:
    out = factorial(sum(counts))
    for c in counts:
        out //= factorial(c)
    return out


def _expand_product(forms: Sequence[Sequence], m: int) -> dict:
    """Expand a product of linear forms into ``{exponent: coefficient}``."""
    acc: dict = {(0,) * m: 1}
    for form in forms:
        nxt: dict = {}
        for e, c in acc.items():
            for v, a in enumerate(form):
                if not a:
                    continue
                f = list(e)
                f[v] += 1
                f = tuple(f)
                term = a * c
                nxt[f] = nxt[f] + term if f in nxt else term
        acc = nxt
    return acc


def _expand_cube(form: Sequence, m: int) -> dict:
    """``(sum a_v x_v)^3`` by multisets of support indices."""
    support = [v for v in range(m) if form[v]]
    out: dict = {}
    for combo in combinations_with_replacement(support, 3):
        e = [0] * m
        for v in combo:
            e[v] += 1
        counts = [e[v] for v in set(combo)]
        c = _multinomial(counts) * form[combo[0]] * form[combo[1]] * form[combo[2]]
        out[tuple(e)] = c
    return out


def linear_cube(form: Sequence, variables: Sequence[str] | None = None) -> CubicForm:
    form = [GaussianRational.coerce(a) for a in form]
    return CubicForm(len(form), _expand_cube(form, len(form)), variables)


# --- matrices over the Gaussian rationals ---------------------------------------


def _matrix(M) -> list[list[GaussianRational]]:
    return [[GaussianRational.coerce(x) for x in row] for row in M]


def row_echelon_rank(rows: Sequence[Sequence[GaussianRational]]) -> int:
    """Exact rank by Gaussian elimination over Q(i)."""
    A = [list(r) for r in rows]
    if not A:
        return 0
    ncols = len(A[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(A)) if A[r][col]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        p = A[rank][col]
        for r in range(rank + 1, len(A)):
            if A[r][col]:
                f = A[r][col] / p
                A[r] = [x - f * y for x, y in zip(A[r], A[rank])]
        rank += 1
        if rank == len(A):
            break
    return rank


def determinant(M) -> GaussianRational:
    A = _matrix(M)
    n = len(A)
    if any(len(r) != n for r in A):
        raise InvalidInput("determinant needs a square matrix")
    det = ONE
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col]), None)
        if piv is None:
            return ZERO
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            det = -det
        p = A[col][col]
        det = det * p
        for r in range(col + 1, n):
            if A[r][col]:
                f = A[r][col] / p
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return det


def inverse(M) -> list[list[GaussianRational]]:
    A = _matrix(M)
    n = len(A)
    aug = [row + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise InvalidInput("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def change_of_basis(f: CubicForm, M, variables: Sequence[str] | None = None) -> CubicForm:
    """Substitute variable ``r`` of ``f`` by the linear form ``sum_c M[r][c] y_c``."""
    A = _matrix(M)
    if len(A) != f.m or any(len(r) != f.m for r in A):
        raise InvalidInput(f"substitution matrix must be {f.m}x{f.m}")
    if not determinant(A):
        raise InvalidInput("substitution matrix is singular")
    out: dict = {}
    for e, c in f.terms.items():
        forms = [A[v] for v, k in enumerate(e) for _ in range(k)]
        for g, v in _expand_product(forms, f.m).items():
            out[g] = out.get(g, ZERO) + c * v
    return CubicForm(f.m, out, variables)


def partial_derivatives(f: CubicForm) -> list[dict]:
    """The ``m`` first partials as ``{quadric exponent: coefficient}``."""
    parts = []
    for v in range(f.m):
        d: dict = {}
        for e, c in f.terms.items():
            if e[v]:
                g = list(e)
                g[v] -= 1
                d[tuple(g)] = c * e[v]
        parts.append(d)
    return parts


def catalecticant_rank(f: CubicForm) -> int:
    """Rank of the span of the first partials; a lower bound for (border) Waring rank."""
    parts = partial_derivatives(f)
    keys = sorted({k for d in parts for k in d})
    rows = [[d.get(k, ZERO) for k in keys] for d in parts]
    return row_echelon_rank(rows) if keys else 0


# --- certificates -----------------------------------------------------------------


@dataclass
class WaringCertificate:
    """``f = sum coeff * form^3``; forms are coefficient vectors over the variables."""

    terms: list[tuple[GaussianRational, list[GaussianRational]]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.terms)

    def expand(self, m: int) -> CubicForm:
        out: dict = {}
        for c, form in self.terms:
            if len(form) != m:
                raise InvalidInput(f"form of length {len(form)} in {m} variables")
            for e, v in _expand_cube(form, m).items():
                out[e] = out.get(e, ZERO) + c * v
        return CubicForm(m, out)

    def to_family(self) -> "EpsilonFamily":
        return EpsilonFamily([(LaurentPoly.const(c), [LaurentPoly.const(a) for a in form])
                              for c, form in self.terms])


@dataclass
class EpsilonFamily:
    """``f = lim_{eps->0} sum coeff(eps) * form(eps)^3``."""

    terms: list[tuple[LaurentPoly, list[LaurentPoly]]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.terms)

    def degree_bounds(self) -> tuple[int, int]:
        """Lowest and highest ``eps`` degree the expansion can reach."""
        lo = hi = 0
        for c, form in self.terms:
            nz = [a for a in form if a]
            if not nz:
                continue
            lo = min(lo, c.min_degree() + 3 * min(a.min_degree() for a in nz))
            hi = max(hi, c.max_degree() + 3 * max(a.max_degree() for a in nz))
        return lo, hi

    def expand(self, m: int) -> dict[Exponent, LaurentPoly]:
        """Full symbolic expansion; nothing is truncated."""
        out: dict = {}
        for c, form in self.terms:
            if len(form) != m:
                raise InvalidInput(f"form of length {len(form)} in {m} variables")
            for e, v in _expand_cube(form, m).items():
                out[e] = out.get(e, LaurentPoly()) + c * v
        return {e: v for e, v in out.items() if v}


def first_difference(f: CubicForm, g: CubicForm):
    """First monomial (in sorted order) where two cubics differ, or ``None``."""
    for e in sorted(set(f.terms) | set(g.terms), reverse=True):
        a, b = f.terms.get(e, ZERO), g.terms.get(e, ZERO)
        if a != b:
            return e, a, b
    return None


def verify_waring_certificate(f: CubicForm, cert: WaringCertificate) -> bool:
    """True iff the certificate expands exactly to ``f``."""
    try:
        return first_difference(f, cert.expand(f.m)) is None
    except InvalidInput:
        return False


def border_residue(f: CubicForm, fam: EpsilonFamily):
    """``None`` if ``fam`` certifies ``f``; otherwise ``(exponent, eps degree, got, expected)``."""
    expansion = fam.expand(f.m)
    for e in sorted(set(expansion) | set(f.terms), reverse=True):
        lp = expansion.get(e, LaurentPoly())
        for d in sorted(lp.coeffs):
            if d < 0:
                return e, d, lp[d], ZERO
        want = f.terms.get(e, ZERO)
        if lp[0] != want:
            return e, 0, lp[0], want
    return None


def verify_border_certificate(f: CubicForm, fam: EpsilonFamily) -> bool:
    try:
        return border_residue(f, fam) is None
    except InvalidInput:
        return False


# --- constructive certificates ----------------------------------------------------


_XYZ_SIGNS = ((1, 1, 1, 1), (-1, 1, 1, -1), (-1, 1, -1, 1), (1, 1, -1, -1))


def _product_certificate(a: Sequence, b: Sequence, c: Sequence, scale) -> list:
    """Certificate for ``scale * a*b*c`` where a, b, c are linear forms (vectors).

    ``abc`` is ``(1/24) sum +-(a +- b +- c)^3``; ``a^2 b`` is
    ``(1/6)(a+b)^3 - (1/6)(a-b)^3 - (1/3) b^3``; ``a^3`` is itself.
    """
    scale = GaussianRational.coerce(scale)
    a, b, c = list(a), list(b), list(c)
    if a == b == c:
        return [(scale, a)]
    if a == b or b == c or a == c:
        sq, other = (a, c) if a == b else ((b, a) if b == c else (a, b))
        plus = [x + y for x, y in zip(sq, other)]
        minus = [x - y for x, y in zip(sq, other)]
        return [
            (scale * Fraction(1, 6), plus),
            (scale * Fraction(-1, 6), minus),
            (scale * Fraction(-1, 3), other),
        ]
    out = []
    for outer, sa, sb, sc in _XYZ_SIGNS:
        form = [sa * x + sb * y + sc * z for x, y, z in zip(a, b, c)]
        out.append((scale * Fraction(outer, 24), form))
    return out


def _unit(m: int, v: int) -> list[GaussianRational]:
    return [ONE if i == v else ZERO for i in range(m)]


def monomial_certificate(exponent: Sequence[int]) -> WaringCertificate:
    """Size 1, 3 or 4 certificate for ``x^3``, ``x^2 y`` or ``xyz``."""
    e = tuple(int(x) for x in exponent)
    m = len(e)
    if sum(e) != 3 or min(e, default=0) < 0:
        raise InvalidInput(f"{e} is not a cubic monomial exponent")
    idx = [v for v in range(m) for _ in range(e[v])]
    cert = WaringCertificate(_product_certificate(_unit(m, idx[0]), _unit(m, idx[1]), _unit(m, idx[2]), ONE))
    if not verify_waring_certificate(CubicForm(m, {e: 1}), cert):
        raise ArithmeticError(f"monomial certificate for {e} failed to verify")
    return cert


class ExcludedByObservation(InvalidInput):
    """The cyclic invariant ``sum E_ij E_jk E_ki`` has no O(n^2) certificate here."""


def _gl_variables(n: int) -> list[str]:
    return [f"E{i},{j}" for i in range(1, n + 1) for j in range(1, n + 1)]


def gl_cubic_form(p) -> CubicForm:
    """A :class:`GlCubePolynomial` as a cubic in the ``n^2`` matrix-entry variables."""
    n = p.n
    items = [(Fraction(c), [(i - 1) * n + (j - 1) for i, j in mono]) for mono, c in p.terms.items()]
    return CubicForm.from_monomials(n * n, items, _gl_variables(n))


def _is_cyclic_invariant(p) -> bool:
    from .glcube import CYCLIC_ROW, table2_vector

    if p.n < 2 or not p:
        return False
    cyc = table2_vector(CYCLIC_ROW, p.n)
    if set(cyc.terms) != set(p.terms):
        return False
    mono = next(iter(cyc.terms))
    ratio = Fraction(p.terms[mono]) / Fraction(cyc.terms[mono])
    return all(Fraction(p.terms[m]) == ratio * Fraction(c) for m, c in cyc.terms.items())


def hwv_certificate(p) -> WaringCertificate:
    """Waring certificate for a Table 2 vector with at most 4 cubes per summand.

    ``p`` may be a :class:`FactoredCubic` (each product of three linear forms
    is one summand, ``I`` included) or an expanded :class:`GlCubePolynomial`
    (each monomial is one summand).  The result is verified before returning.
    """
    from .glcube import FactoredCubic

    if isinstance(p, FactoredCubic):
        expanded = p.expand()
        products = p.terms
    else:
        expanded = p
        products = [(c, tuple({pair: 1} for pair in mono)) for mono, c in p.terms.items()]
    if _is_cyclic_invariant(expanded):
        raise ExcludedByObservation("the cyclic invariant sum E_ij E_jk E_ki is excluded")
    n = expanded.n
    N = n * n

    def vec(lf: dict) -> list[GaussianRational]:
        v = [ZERO] * N
        for (i, j), c in lf.items():
            v[(i - 1) * n + (j - 1)] += GaussianRational.coerce(Fraction(c))
        return v

    # merge repeated products so each distinct summand is certified once
    merged: dict = {}
    order = []
    for c, (a, b, d) in products:
        key = tuple(sorted(tuple(sorted(lf.items())) for lf in (a, b, d)))
        if key not in merged:
            merged[key] = Fraction(0)
            order.append((key, (a, b, d)))
        merged[key] += Fraction(c)
    terms = []
    for key, (a, b, d) in order:
        c = merged[key]
        if c:
            terms.extend(_product_certificate(vec(a), vec(b), vec(d), c))
    cert = WaringCertificate(terms)
    if not verify_waring_certificate(gl_cubic_form(expanded), cert):
        raise ArithmeticError("hwv certificate failed to verify")
    return cert


# --- the named cubics ---------------------------------------------------------------


def cw_tensor(q: int) -> CubicForm:
    """``x0 * (x1^2 + ... + xq^2)``."""
    if q < 1:
        raise InvalidInput("q must be positive")
    m = q + 1
    return CubicForm.from_monomials(m, [(1, [0, i, i]) for i in range(1, q + 1)])


def cw_tilde(q: int) -> CubicForm:
    """``x0 * (x1^2 + ... + xq^2) + x0^2 * x(q+1)``."""
    if q < 1:
        raise InvalidInput("q must be positive")
    m = q + 2
    items = [(1, [0, i, i]) for i in range(1, q + 1)] + [(1, [0, 0, q + 1])]
    return CubicForm.from_monomials(m, items)


def f1() -> CubicForm:
    """``xyz - xwt`` in variables (x, y, z, w, t)."""
    return CubicForm.from_monomials(5, [(1, [0, 1, 2]), (-1, [0, 3, 4])], "x y z w t".split())


def f2() -> CubicForm:
    """``xzt - x^2 y`` in variables (x, y, z, t)."""
    return CubicForm.from_monomials(4, [(1, [0, 2, 3]), (-1, [0, 0, 1])], "x y z t".split())


_i = I_UNIT

# rows: x, y, z, w, t in terms of x0..x4
F1_SUBSTITUTION = [
    [1, 0, 0, 0, 0],
    [0, 1, _i, 0, 0],
    [0, 1, -_i, 0, 0],
    [0, 0, 0, 1, _i],
    [0, 0, 0, -1, _i],
]

# rows: x, y, z, t in terms of x0..x3
F2_SUBSTITUTION = [
    [1, 0, 0, 0],
    [0, 0, 0, -1],
    [0, 1, _i, 0],
    [0, 1, -_i, 0],
]


# --- bundled certificate assets --------------------------------------------------------


def _scalar_json(x):
    if isinstance(x, LaurentPoly):
        return {str(d): str(c) for d, c in sorted(x.coeffs.items())}
    return str(GaussianRational.coerce(x))


def _scalar_from_json(x, laurent: bool):
    if isinstance(x, dict):
        lp = LaurentPoly({int(d): GaussianRational.parse(str(c)) for d, c in x.items()})
        return lp if laurent else _laurent_to_scalar(lp)
    g = GaussianRational.parse(str(x))
    return LaurentPoly.const(g) if laurent else g


def _laurent_to_scalar(lp: LaurentPoly) -> GaussianRational:
    if any(d != 0 for d in lp.coeffs):
        raise InvalidInput("rank certificates cannot depend on eps")
    return lp[0]


@dataclass
class CertificateFile:
    target: CubicForm
    kind: str
    certificate: WaringCertificate | EpsilonFamily
    name: str | None = None

    def to_json(self) -> dict:
        terms = [{"coeff": _scalar_json(c), "form": [_scalar_json(a) for a in form]}
                 for c, form in self.certificate.terms]
        out = {"target": self.target.to_json(), "kind": self.kind, "terms": terms}
        if self.name:
            out = {"name": self.name, **out}
        return out

    @classmethod
    def from_json(cls, data: dict) -> "CertificateFile":
        try:
            target = CubicForm.from_json(data["target"])
            kind = data["kind"]
            if kind not in ("rank", "border"):
                raise InvalidInput(f"kind must be 'rank' or 'border', got {kind!r}")
            laurent = kind == "border"
            terms = [(_scalar_from_json(t["coeff"], laurent), [_scalar_from_json(a, laurent) for a in t["form"]])
                     for t in data["terms"]]
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"certificate does not match the schema: {exc}") from exc
        cert = EpsilonFamily(terms) if laurent else WaringCertificate(terms)
        return cls(target, kind, cert, data.get("name"))

    def verify(self) -> bool:
        if self.kind == "rank":
            return verify_waring_certificate(self.target, self.certificate)
        return verify_border_certificate(self.target, self.certificate)

    def residue(self):
        """First failing monomial as a printable dict, or ``None``."""
        if self.kind == "rank":
            try:
                diff = first_difference(self.target, self.certificate.expand(self.target.m))
            except InvalidInput as exc:
                return {"error": str(exc)}
            if diff is None:
                return None
            e, want, got = diff
            return {"exponent": list(e), "eps_degree": 0, "expected": str(want), "got": str(got)}
        try:
            res = border_residue(self.target, self.certificate)
        except InvalidInput as exc:
            return {"error": str(exc)}
        if res is None:
            return None
        e, d, got, want = res
        return {"exponent": list(e), "eps_degree": d, "expected": str(want), "got": str(got)}


def load_certificate(path) -> CertificateFile:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidInput(f"{path}: not valid JSON ({exc})") from exc
    return CertificateFile.from_json(data)


# Values stated for these cubics in the literature the package reproduces.
CITED = {
    "f1": {"rank": 9, "border": 6},
    "f2": {"rank": 7, "border": 4},
    "x2y": {"rank": 3, "border": 2},
    "xyz": {"rank": 4},
    "x3": {"rank": 1, "border": 1},
}


def _lp(d: dict) -> LaurentPoly:
    return LaurentPoly(d)


def _named_targets() -> dict[str, CubicForm]:
    return {
        "x3": CubicForm.from_monomials(1, [(1, [0, 0, 0])], ["x"]),
        "x2y": CubicForm.from_monomials(2, [(1, [0, 0, 1])], ["x", "y"]),
        "xyz": CubicForm.from_monomials(3, [(1, [0, 1, 2])], ["x", "y", "z"]),
        "f1": f1(),
        "f2": f2(),
    }


def identify(target: CubicForm) -> str | None:
    for name, f in _named_targets().items():
        if f.m == target.m and f.terms == target.terms:
            return name
    return None


def bundled_certificates() -> dict[str, CertificateFile]:
    """The certificates shipped in ``data/``, rebuilt from first principles."""
    t = _named_targets()
    out = {
        "x3_rank": CertificateFile(t["x3"], "rank", monomial_certificate((3,)), "x3"),
        "x2y_rank": CertificateFile(t["x2y"], "rank", monomial_certificate((2, 1)), "x2y"),
        "xyz_rank": CertificateFile(t["xyz"], "rank", monomial_certificate((1, 1, 1)), "xyz"),
    }
    # f1 = x*y*z - x*w*t, one xyz-type certificate per monomial
    m = 5
    f1_terms = (_product_certificate(_unit(m, 0), _unit(m, 1), _unit(m, 2), ONE)
                + _product_certificate(_unit(m, 0), _unit(m, 3), _unit(m, 4), -ONE))
    out["f1_rank"] = CertificateFile(t["f1"], "rank", WaringCertificate(f1_terms), "f1")
    # f2 = x*z*t - x^2*y
    m = 4
    f2_terms = (_product_certificate(_unit(m, 0), _unit(m, 2), _unit(m, 3), ONE)
                + _product_certificate(_unit(m, 0), _unit(m, 0), _unit(m, 1), -ONE))
    out["f2_rank"] = CertificateFile(t["f2"], "rank", WaringCertificate(f2_terms), "f2")
    # x^2 y = lim (1/(3 eps)) ((x + eps y)^3 - x^3)
    third = Fraction(1, 3)
    out["x2y_border"] = CertificateFile(t["x2y"], "border", EpsilonFamily([
        (_lp({-1: third}), [_lp({0: 1}), _lp({1: 1})]),
        (_lp({-1: -third}), [_lp({0: 1}), _lp({})]),
    ]), "x2y")
    # x*(z*t - x*y) = lim (1/(3 eps^2)) sum c_j (x + eps l_j)^3 with
    # sum c_j = 0 and sum c_j l_j = -eps*y:
    # l = z, t, z + t, -2 eps y and c = -1/2, -1/2, 1/2, 1/2
    s = Fraction(1, 6)
    out["f2_border"] = CertificateFile(t["f2"], "border", EpsilonFamily([
        (_lp({-2: -s}), [_lp({0: 1}), _lp({}), _lp({1: 1}), _lp({})]),
        (_lp({-2: -s}), [_lp({0: 1}), _lp({}), _lp({}), _lp({1: 1})]),
        (_lp({-2: s}), [_lp({0: 1}), _lp({}), _lp({1: 1}), _lp({1: 1})]),
        (_lp({-2: s}), [_lp({0: 1}), _lp({2: -2}), _lp({}), _lp({})]),
    ]), "f2")
    return out


def bundled_path(name: str):
    return resources.files("slplethysm") / "data" / f"{name}.json"


def bundled_names() -> list[str]:
    return sorted(bundled_certificates())


def certificate_report(cf: CertificateFile) -> dict:
    """Verdict, certified bound and catalecticant lower bound for one certificate."""
    ok = cf.verify()
    size = len(cf.certificate)
    lower = catalecticant_rank(cf.target)
    label = "rank" if cf.kind == "rank" else "border rank"
    report = {
        "name": cf.name or identify(cf.target),
        "kind": cf.kind,
        "size": size,
        "verified": ok,
        "catalecticant_lower_bound": lower,
        "summary": (f"{label} <= {size}; catalecticant >= {lower}" if ok else "certificate does not verify"),
        "notes": [],
    }
    if cf.kind == "border" and ok:
        report["eps_degree_range"] = list(cf.certificate.degree_bounds())
    if not ok:
        report["first_difference"] = cf.residue()
    name = identify(cf.target)
    cited = CITED.get(name or "", {}).get(cf.kind)
    if ok and cited is not None:
        report["cited_value"] = cited
        if size < cited:
            report["notes"].append(
                f"certified {label} <= {size} is below the cited value {label}({name}) = {cited}; "
                "the discrepancy is reported, not adjudicated"
            )
        elif size == cited:
            report["notes"].append(f"certificate size matches the cited value {label}({name}) = {cited}")
    if ok and lower > size:
        report["notes"].append("catalecticant bound exceeds the certificate size: inconsistent")
    return report

"""Decomposition of S^k(gl_n) and S^k(sl_n) into SL_n irreducibles.

``S^k(gl_n)`` comes from the Cauchy formula, ``sum_{lam |- k} S_lam (x) S_lam^*``,
with each tensor product split by Littlewood-Richardson coefficients.
``S^k(sl_n)`` is ``S^k(gl_n)`` minus ``S^(k-1)(gl_n)`` because
``S^k(sl_n + C) = sum_{i<=k} S^i(sl_n)``.
"""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import comb
from typing import Callable

from .dims import variety_dim, weyl_dim
from .lr import lr_expand
from .partitions import (
    GLWeight,
    InvalidInput,
    WeightTemplate,
    dual_partition,
    gl_weight_of_component,
    match_template,
    partitions,
    sl_weight,
)


class ConsistencyError(RuntimeError):
    """An internal identity failed; this is a bug, never a valid state."""


@dataclass(frozen=True)
class Component:
    weight: GLWeight
    multiplicity: int
    dimension: int | None = None
    variety_dim: int | None = None


@dataclass
class Decomposition:
    algebra: str
    k: int
    n: int
    components: list[Component] = field(default_factory=list)

    def as_counter(self) -> Counter:
        return Counter({c.weight: c.multiplicity for c in self.components})

    def multiplicity(self, w: GLWeight) -> int:
        for c in self.components:
            if c.weight == w:
                return c.multiplicity
        return 0

    def ambient_dim(self) -> int:
        if self.algebra == "gl":
            return comb(self.n**2 + self.k - 1, self.k)
        return comb(self.n**2 + self.k - 2, self.k)

    def total_dim(self) -> int:
        return sum(c.multiplicity * (c.dimension if c.dimension is not None else weyl_dim(c.weight))
                   for c in self.components)


def _sorted_components(counts: Counter) -> list[Component]:
    # largest weights first, in the spirit of the usual table layout
    return [Component(w, m) for w, m in sorted(counts.items(), key=lambda kv: kv[0].entries, reverse=True)]


def _gl_counts(k: int, n: int) -> Counter:
    counts: Counter = Counter()
    if k == 0:
        counts[GLWeight.trivial(n)] = 1
        return counts
    for lam in partitions(k, max_length=n):
        dual = dual_partition(lam, n)
        for nu, mult in lr_expand(lam, dual, n).items():
            counts[gl_weight_of_component(nu, lam[0], n)] += mult
    return counts


def decompose_gl(k: int, n: int) -> Decomposition:
    if k < 0 or n < 2:
        raise InvalidInput(f"need k >= 0 and n >= 2, got k={k}, n={n}")
    return Decomposition("gl", k, n, _sorted_components(_gl_counts(k, n)))


def decompose_sl(k: int, n: int) -> Decomposition:
    if k < 1 or n < 2:
        raise InvalidInput(f"need k >= 1 and n >= 2, got k={k}, n={n}")
    top, below = _gl_counts(k, n), _gl_counts(k - 1, n)
    diff: Counter = Counter()
    for w in set(top) | set(below):
        m = top[w] - below[w]
        if m < 0:
            raise ConsistencyError(f"S^{k - 1}(gl_{n}) has more copies of {w} than S^{k}(gl_{n})")
        if m:
            diff[w] = m
    return Decomposition("sl", k, n, _sorted_components(diff))


def decompose(algebra: str, k: int, n: int) -> Decomposition:
    if algebra == "gl":
        return decompose_gl(k, n)
    if algebra == "sl":
        return decompose_sl(k, n)
    raise InvalidInput(f"algebra must be 'gl' or 'sl', got {algebra!r}")


def annotate(d: Decomposition) -> Decomposition:
    """Attach Weyl and orbit dimensions to every component and recheck the total."""
    comps = [replace(c, dimension=weyl_dim(c.weight), variety_dim=variety_dim(c.weight)) for c in d.components]
    out = Decomposition(d.algebra, d.k, d.n, comps)
    if out.total_dim() != out.ambient_dim():
        raise ConsistencyError(f"dimension mismatch: {out.total_dim()} != {out.ambient_dim()}")
    return out


# --- the k = 3 table ---------------------------------------------------------


@dataclass(frozen=True)
class Table1Row:
    template: WeightTemplate
    gl_mult: int
    sl_mult: int
    dimension: Callable[[int], Fraction]
    variety: Callable[[int], int]
    dimension_text: str
    variety_text: str


def _t(prefix, suffix) -> WeightTemplate:
    return WeightTemplate(tuple(prefix), tuple(suffix))


F = Fraction

TABLE1: tuple[Table1Row, ...] = (
    Table1Row(_t([], []), 3, 1, lambda n: F(1), lambda n: 0, "1", "0"),
    Table1Row(_t([1], [-1]), 4, 2, lambda n: F(n * n - 1), lambda n: 2 * n - 3, "n^2-1", "2n-3"),
    Table1Row(_t([2], [-2]), 2, 1, lambda n: F((n - 1) * n**2 * (n + 3), 4), lambda n: 2 * n - 3,
              "(n-1)n^2(n+3)/4", "2n-3"),
    Table1Row(_t([3], [-3]), 1, 1, lambda n: F((n - 1) * n**2 * (n + 1) ** 2 * (n + 5), 36),
              lambda n: 2 * n - 3, "(n-1)n^2(n+1)^2(n+5)/36", "2n-3"),
    Table1Row(_t([1, 1], [-1, -1]), 2, 1, lambda n: F((n - 3) * n**2 * (n + 1), 4), lambda n: 4 * n - 12,
              "(n-3)n^2(n+1)/4", "4n-12"),
    Table1Row(_t([2], [-1, -1]), 1, 1, lambda n: F((n - 2) * (n - 1) * (n + 1) * (n + 2), 4),
              lambda n: 3 * n - 7, "(n-2)(n-1)(n+1)(n+2)/4", "3n-7"),
    Table1Row(_t([1, 1], [-2]), 1, 1, lambda n: F((n - 2) * (n - 1) * (n + 1) * (n + 2), 4),
              lambda n: 3 * n - 7, "(n-2)(n-1)(n+1)(n+2)/4", "3n-7"),
    Table1Row(_t([2, 1], [-1, -2]), 1, 1, lambda n: F((n - 3) * (n - 1) ** 2 * (n + 1) ** 2 * (n + 3), 9),
              lambda n: 4 * n - 10, "(n-3)(n-1)^2(n+1)^2(n+3)/9", "4n-10"),
    Table1Row(_t([1, 1, 1], [-1, -1, -1]), 1, 1, lambda n: F((n - 5) * (n - 1) ** 2 * n**2 * (n + 1), 36),
              lambda n: 6 * n - 27, "(n-5)(n-1)^2n^2(n+1)/36", "6n-27"),
)

TEMPLATE_MIN_N = 6


def template_of(w: GLWeight, k: int) -> WeightTemplate | None:
    """Template label for presentation; only trusted for k = 3 and n >= 6."""
    if k != 3 or w.n < TEMPLATE_MIN_N:
        return None
    return match_template(w)


def table1_view(gl: Decomposition, sl: Decomposition) -> list[dict]:
    """Rows of the k = 3 table recovered from concrete decompositions, in table order."""
    rows = []
    for row in TABLE1:
        w = row.template.instantiate(gl.n)
        rows.append({
            "template": row.template,
            "gl_mult": gl.multiplicity(w),
            "sl_mult": sl.multiplicity(w),
            "dimension": weyl_dim(w),
            "variety_dim": variety_dim(w),
        })
    return rows


# --- emitters -----------------------------------------------------------------


def to_json(d: Decomposition) -> dict:
    d = d if all(c.dimension is not None for c in d.components) else annotate(d)
    comps = []
    for c in d.components:
        t = template_of(c.weight, d.k)
        comps.append({
            "gl_weight": list(c.weight.entries),
            "sl_weight": list(sl_weight(c.weight)),
            "template": t.to_json() if t is not None else None,
            "multiplicity": c.multiplicity,
            "dimension": c.dimension,
            "variety_dim": c.variety_dim,
        })
    return {"algebra": d.algebra, "k": d.k, "n": d.n, "total_dim": d.total_dim(), "components": comps}


def _label(c: Component, k: int) -> str:
    t = template_of(c.weight, k)
    return str(t) if t is not None else str(c.weight)


def to_markdown(d: Decomposition, other: Decomposition | None = None) -> str:
    """Table with columns weight, gl-mult, sl-mult, dimension, variety.

    ``other`` supplies the second multiplicity column; when absent it is
    computed from the complementary algebra.
    """
    d = annotate(d)
    if other is None:
        other = decompose("sl" if d.algebra == "gl" else "gl", d.k, d.n)
    gl, sl = (d, other) if d.algebra == "gl" else (other, d)
    lines = [
        f"| Highest weight | S^{d.k}(gl_n) | S^{d.k}(sl_n) | Dimension | Variety |",
        "|---|---|---|---|---|",
    ]
    if d.k == 3 and d.n >= TEMPLATE_MIN_N:
        order = [row.template.instantiate(d.n) for row in TABLE1]
        order += [c.weight for c in gl.components if c.weight not in order]
    else:
        order = [c.weight for c in gl.components]
    for w in order:
        m_sl = sl.multiplicity(w)
        if d.algebra == "sl" and m_sl == 0:
            continue
        m_gl = gl.multiplicity(w)
        if m_gl == 0:
            continue
        c = Component(w, m_gl)
        lines.append(f"| {_label(c, d.k)} | {m_gl} | {m_sl} | {weyl_dim(w)} | {variety_dim(w)} |")
    return "\n".join(lines) + "\n"


def to_csv(d: Decomposition) -> str:
    d = annotate(d)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["gl_weight", "sl_weight", "template", "multiplicity", "dimension", "variety_dim"])
    for c in d.components:
        t = template_of(c.weight, d.k)
        writer.writerow([
            " ".join(map(str, c.weight.entries)),
            " ".join(map(str, sl_weight(c.weight))),
            str(t) if t is not None else "",
            c.multiplicity,
            c.dimension,
            c.variety_dim,
        ])
    return buf.getvalue()

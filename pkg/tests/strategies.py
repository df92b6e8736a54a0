"""Hypothesis strategies shared by the property tests."""

from hypothesis import strategies as st

from slplethysm.glcube import GlCubePolynomial, monomial_weight, weight_space_basis
from slplethysm.partitions import Partition
from slplethysm.waring import CubicForm, GaussianRational, determinant

partitions_st = st.lists(st.integers(0, 9), max_size=8).map(lambda xs: Partition(sorted(xs, reverse=True)))


def pair(n):
    return st.tuples(st.integers(1, n), st.integers(1, n))


def monomial(n):
    return st.tuples(pair(n), pair(n), pair(n))


coeff_st = st.integers(-4, 4).filter(bool)


@st.composite
def gl_polys(draw, n=3, max_terms=5):
    items = draw(st.lists(st.tuples(monomial(n), coeff_st), min_size=1, max_size=max_terms))
    terms = {}
    for mono, c in items:
        key = tuple(sorted(mono))
        terms[key] = terms.get(key, 0) + c
    return GlCubePolynomial(n, terms)


@st.composite
def weight_vectors(draw, n=3, max_terms=4):
    """A nonzero polynomial supported on a single weight space."""
    seed = tuple(sorted(draw(monomial(n))))
    basis = weight_space_basis(n, monomial_weight(seed, n))
    chosen = draw(st.lists(st.sampled_from(basis), min_size=0, max_size=max_terms - 1))
    terms = {seed: draw(coeff_st)}
    for mono in chosen:
        terms[mono] = terms.get(mono, 0) + draw(coeff_st)
    p = GlCubePolynomial(n, terms)
    if not p:
        p = GlCubePolynomial(n, {seed: 1})
    return p


gaussian_st = st.builds(GaussianRational, st.integers(-3, 3), st.integers(-2, 2))


@st.composite
def cubic_forms(draw, m):
    exps = [(a, b, 3 - a - b) for a in range(4) for b in range(4 - a)] if m == 3 else None
    if m == 2:
        exps = [(a, 3 - a) for a in range(4)]
    chosen = draw(st.lists(st.sampled_from(exps), min_size=1, max_size=len(exps), unique=True))
    return CubicForm(m, {e: draw(gaussian_st) for e in chosen})


@st.composite
def invertible_matrices(draw, m):
    while True:
        M = [[draw(gaussian_st) for _ in range(m)] for _ in range(m)]
        if determinant(M):
            return M
        # nudge the diagonal; a singular draw rarely survives this
        for i in range(m):
            M[i][i] = M[i][i] + GaussianRational(i + 1 + draw(st.integers(0, 2)))
        if determinant(M):
            return M

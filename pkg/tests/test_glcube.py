from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slplethysm import glcube
from slplethysm.glcube import (
    E,
    FactoredCubic,
    GlCubePolynomial,
    apply_ad,
    apply_cartan,
    cube_product,
    format_poly,
    identity,
    is_highest_weight,
    parse_poly,
    weight_of,
)
from slplethysm.partitions import InvalidInput
from slplethysm.plethysm import TABLE1, decompose_gl

from strategies import gl_polys, weight_vectors


def bracket_action(a, b, c, d, p):
    """``[E_ab, E_cd]`` applied to ``p`` via the commutator formula."""
    out = GlCubePolynomial(p.n)
    if b == c and a == d:
        return apply_cartan(a, b, p)
    if b == c:
        out = out + apply_ad(a, d, p)
    if d == a:
        out = out - apply_ad(c, b, p)
    return out


def pair_st(n):
    return st.tuples(st.integers(1, n), st.integers(1, n)).filter(lambda t: t[0] != t[1])


def test_single_action():
    # ad(E_12) E_21 = E_11 - E_22, applied as a derivation
    p = cube_product(3, E(2, 1), E(3, 3), E(3, 3))
    q = apply_ad(1, 2, p)
    expected = cube_product(3, E(1, 1), E(3, 3), E(3, 3)) - cube_product(3, E(2, 2), E(3, 3), E(3, 3))
    assert q == expected
    assert apply_ad(1, 2, cube_product(3, E(1, 2), E(1, 2), E(1, 2))) == GlCubePolynomial(3)


def test_identity_is_invariant():
    iii = cube_product(4, identity(4), identity(4), identity(4))
    for a in range(1, 5):
        for b in range(1, 5):
            if a != b:
                assert not apply_ad(a, b, iii)


def test_apply_ad_validates():
    p = cube_product(3, E(1, 1), E(1, 1), E(1, 1))
    with pytest.raises(InvalidInput):
        apply_ad(1, 1, p)
    with pytest.raises(InvalidInput):
        apply_ad(1, 4, p)


def test_weight_of():
    assert weight_of(cube_product(4, E(1, 4), E(1, 4), E(2, 3))) == (2, 1, -1, -2)
    mixed = cube_product(3, E(1, 2), E(1, 1), E(1, 1)) + cube_product(3, E(1, 1), E(1, 1), E(1, 1))
    assert weight_of(mixed) is None
    with pytest.raises(InvalidInput):
        weight_of(GlCubePolynomial(3))


@settings(max_examples=300)
@given(gl_polys(), pair_st(3), pair_st(3))
def test_lie_bracket_compatibility(p, x, y):
    (a, b), (c, d) = x, y
    lhs = apply_ad(a, b, apply_ad(c, d, p)) - apply_ad(c, d, apply_ad(a, b, p))
    assert lhs == bracket_action(a, b, c, d, p)


@settings(max_examples=300)
@given(weight_vectors(), pair_st(3))
def test_weight_shift(p, x):
    a, b = x
    q = apply_ad(a, b, p)
    if q:
        w = list(weight_of(p))
        w[a - 1] += 1
        w[b - 1] -= 1
        assert weight_of(q) == tuple(w)


@settings(max_examples=200)
@given(gl_polys(n=4))
def test_format_parse_round_trip(p):
    assert parse_poly(format_poly(p), 4) == p


def test_parse_expands_identity():
    assert parse_poly("III", 3) == cube_product(3, identity(3), identity(3), identity(3))
    assert parse_poly("2 * IE[1,2]E[2,1] - E[1,1]E[1,1]E[1,1]", 2) == (
        2 * cube_product(2, identity(2), E(1, 2), E(2, 1)) - cube_product(2, E(1, 1), E(1, 1), E(1, 1))
    )
    with pytest.raises(InvalidInput):
        parse_poly("E[1,2]E[2,1]", 3)


def test_fractional_coefficients():
    p = Fraction(1, 2) * cube_product(2, E(1, 2), E(1, 2), E(1, 2))
    assert parse_poly(format_poly(p), 2) == p


@pytest.mark.parametrize("n", [3, 4, 5])
def test_cyclic_invariant_is_fully_invariant(n):
    cyc = glcube.table2_vector(glcube.CYCLIC_ROW, n)
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if a != b:
                assert not apply_ad(a, b, cyc)


def test_factored_expand_counts():
    f = glcube.table2_factored(2, 6)
    assert len(f) == 36
    # I * tr(X^2) has n * n^2 monomials before merging diagonal squares
    assert f.expand() == sum(
        (cube_product(6, identity(6), E(i, j), E(j, i)) for i in range(1, 7) for j in range(1, 7)),
        GlCubePolynomial(6),
    )


def test_factored_arithmetic():
    a = FactoredCubic(2, [(1, (E(1, 1), E(1, 1), E(1, 2)))])
    assert (a - a).expand() == GlCubePolynomial(2)
    assert len(a + a) == 2


def test_row_minimums():
    mins = {r.row: r.min_n for r in glcube.TABLE2}
    assert mins[16] == 6
    assert mins[12] == mins[13] == mins[15] == 4
    assert mins[10] == mins[11] == 3
    assert mins[1] == 2
    with pytest.raises(InvalidInput):
        glcube.table2_factored(16, 5)
    with pytest.raises(InvalidInput):
        glcube.table2_row(17)


@pytest.mark.parametrize("n", [6, 8])
def test_table2_rows_are_highest_weight(n):
    for row in glcube.TABLE2:
        rec = glcube.verification_record(row.row, n)
        assert rec["weight"] == list(row.weight(n))
        assert rec["is_hwv"], row.row


def test_non_highest_weight_detected():
    assert not is_highest_weight(cube_product(3, E(2, 1), E(1, 1), E(1, 1)))


def test_weight_space_basis():
    basis = glcube.weight_space_basis(3, (1, 0, -1))
    assert all(glcube.monomial_weight(m, 3) == (1, 0, -1) for m in basis)
    everything = [m for m in glcube.all_monomials(3) if glcube.monomial_weight(m, 3) == (1, 0, -1)]
    assert sorted(everything) == basis


def test_hwv_space_dim_rejects_bad_weights():
    with pytest.raises(InvalidInput):
        glcube.hwv_space_dim(3, (0, 1, -1))
    with pytest.raises(InvalidInput):
        glcube.hwv_space_dim(3, (1, 0))


def test_kernel_dims_match_table_at_n6():
    gl = decompose_gl(3, 6)
    for row in TABLE1:
        w = row.template.instantiate(6)
        assert glcube.hwv_space_dim(6, w.entries) == row.gl_mult == gl.multiplicity(w)


def test_same_weight_rows_are_independent():
    n = 6
    for row in TABLE1:
        w = row.template.instantiate(n).entries
        rows = glcube.rows_of_weight(w, n)
        assert len(rows) == row.gl_mult
        assert glcube.linear_independence([glcube.table2_vector(r, n) for r in rows])


def test_dependent_vectors_detected():
    p = glcube.table2_vector(5, 6)
    assert glcube.exact_rank([p, 2 * p, p + p]) == 1
    assert not glcube.linear_independence([p, Fraction(1, 3) * p])

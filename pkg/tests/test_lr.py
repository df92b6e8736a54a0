from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slplethysm.lr import (
    SymmetricPolynomial,
    _margin_count,
    complete_homogeneous,
    kostka,
    lr_coefficient,
    lr_expand,
    schur_polynomial,
    schur_product_oracle,
)
from slplethysm.partitions import InvalidInput, Partition, conjugate, partitions

small = st.integers(0, 4).flatmap(lambda k: st.sampled_from(list(partitions(k))))


def test_known_coefficients():
    assert lr_coefficient([2, 1], [2, 1], [3, 2, 1]) == 2
    assert lr_coefficient([2, 1], [2, 1], [4, 2]) == 1
    assert lr_coefficient([2, 1], [2, 1], [6]) == 0
    assert lr_coefficient([1], [1], [1, 1]) == 1


def test_pieri_rule():
    assert set(lr_expand([2, 1], [1], 8)) == {Partition([3, 1]), Partition([2, 2]), Partition([2, 1, 1])}
    # horizontal strips only
    got = lr_expand([2, 1], [2], 8)
    assert got == Counter({Partition([4, 1]): 1, Partition([3, 2]): 1, Partition([3, 1, 1]): 1, Partition([2, 2, 1]): 1})


def test_self_dual_product_contains_trivial():
    # S_[2,2] and its dual in gl_4 meet in the determinant power [2,2,2,2]
    assert lr_expand([2, 2], [2, 2], 4)[Partition([2, 2, 2, 2])] == 1


def test_length_bound_truncates():
    full = lr_expand([1, 1], [1, 1], 8)
    assert Partition([1, 1, 1, 1]) in full
    assert Partition([1, 1, 1, 1]) not in lr_expand([1, 1], [1, 1], 3)
    assert full == Counter({Partition([2, 2]): 1, Partition([2, 1, 1]): 1, Partition([1, 1, 1, 1]): 1})


def test_margin_count():
    # 2x2 nonnegative integer matrices with margins (2,1), (1,2)
    assert _margin_count((2, 1), (1, 2)) == 2
    assert _margin_count((1, 1, 1), (1, 1, 1)) == 6


def test_kostka_numbers():
    assert kostka([2, 1], [1, 1, 1]) == 2
    assert kostka([3], [1, 1, 1]) == 1
    assert kostka([2, 2], [2, 1, 1]) == 1
    assert kostka([2, 1], [3]) == 0


def test_oracle_needs_enough_variables():
    with pytest.raises(InvalidInput):
        schur_product_oracle([2], [2], 3)


def test_oracle_matches_tableaux_small():
    for lam in map(Partition, ([2, 1], [3], [1, 1, 1])):
        for mu in map(Partition, ([2, 1], [2], [1, 1])):
            assert lr_expand(lam, mu, 8) == schur_product_oracle(lam, mu, 8)


@settings(max_examples=300)
@given(small, small)
def test_commutative(lam, mu):
    assert lr_expand(lam, mu, 8) == lr_expand(mu, lam, 8)


@settings(max_examples=300)
@given(small, small)
def test_conjugation_symmetry(lam, mu):
    a = lr_expand(lam, mu, 8)
    b = lr_expand(conjugate(lam), conjugate(mu), 8)
    assert Counter({conjugate(nu): c for nu, c in a.items()}) == b


def test_dimension_count_via_hooks():
    # sum over nu of N * f^nu equals binom(|lam|+|mu|, |lam|) f^lam f^mu
    from math import comb, factorial

    def f(lam):
        lam = Partition(lam)
        hooks = 1
        conj = conjugate(lam)
        for i, row in enumerate(lam):
            for j in range(row):
                hooks *= row - j + conj[j] - i - 1
        return factorial(lam.size()) // hooks

    lam, mu = Partition([3, 1]), Partition([2, 2])
    total = sum(c * f(nu) for nu, c in lr_expand(lam, mu, 8).items())
    assert total == comb(8, 4) * f(lam) * f(mu)


def test_complete_homogeneous_counts():
    assert len(complete_homogeneous(3, 3)) == 10
    assert complete_homogeneous(-1, 2) == {}


def test_schur_polynomials_are_symmetric():
    for lam in ([2, 1], [3, 1], [2, 2, 1]):
        s = schur_polynomial(lam, 4)
        assert s.is_symmetric(trials=50)
        # leading term is x^lam with coefficient one
        assert s[Partition(lam).padded(4)] == 1


def test_schur_full_expansion_agrees_with_kostka():
    s = schur_polynomial([2, 1], 3)
    for e, c in s.dominant_part().items():
        assert c == kostka([2, 1], e)
    assert sum(s.values()) == 8  # dim of S_[2,1](C^3)


def test_product_of_full_expansions_matches_lr():
    # independent of both the tableau code and the margin counts
    m = 4
    lam, mu = Partition([2, 1]), Partition([1, 1])
    lhs = schur_polynomial(lam, m) * schur_polynomial(mu, m)
    rhs = SymmetricPolynomial(m)
    for nu, c in lr_expand(lam, mu, m).items():
        rhs = rhs + schur_polynomial(nu, m).scaled(c)
    assert dict(lhs) == dict(rhs)

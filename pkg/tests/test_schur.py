import random
from itertools import combinations, permutations

import pytest

from schurforge.errors import BadParameter, BadSequence, SizeError
from schurforge.fields import make_prime_field, make_rationals
from schurforge.mpoly import MPoly, exact_divide, parse_poly
from schurforge.schur import (
    ExponentSequence,
    ck_biv,
    ck_uni,
    schur_poly,
    schur_ssyt,
    vandermonde,
)

Q = make_rationals()


def test_sequence_validation():
    assert ExponentSequence((0, 2, 5)).gaps() == (2, 3)
    with pytest.raises(BadSequence):
        ExponentSequence((0, 2, 2))
    with pytest.raises(BadSequence):
        ExponentSequence((2, 1))
    with pytest.raises(BadSequence):
        ExponentSequence((-1, 0))
    assert ExponentSequence.parse("0,2,5").c == (0, 2, 5)
    with pytest.raises(BadSequence):
        ExponentSequence.parse("0,x")


def test_sequence_ops():
    c = ExponentSequence((0, 2, 5))
    assert c.remove({2}).c == (0, 2)
    assert ExponentSequence(c.remove({0}).shifted(2)).c == (0, 3)
    assert c.reflected().c == (0, 3, 5)
    assert c.reflected().reflected() == c
    assert ExponentSequence.standard(4).c == (0, 1, 2, 3)
    assert c.partition() == (3, 1, 0)


def test_vandermonde_classical():
    V = vandermonde((0, 1, 2), Q)
    x0, x1, x2 = (MPoly.variable(3, Q, i) for i in range(3))
    assert V == (x1 - x0) * (x2 - x0) * (x2 - x1)
    assert vandermonde((0, 1), Q) == parse_poly("x1 - x0", 2, Q)


def test_vandermonde_square_substitution():
    # V_(0,2,4) is V_(0,1,2) with every exponent doubled
    V = vandermonde((0, 2, 4), Q)
    doubled = MPoly(3, Q, {tuple(2 * e for e in exps): c for exps, c in vandermonde((0, 1, 2), Q).terms.items()})
    assert V == doubled


def test_vandermonde_size_bound():
    with pytest.raises(SizeError):
        vandermonde(tuple(range(7)), Q)


def test_schur_standard_is_one():
    for n in (1, 2, 3, 4):
        assert schur_poly(ExponentSequence.standard(n), Q) == MPoly.one(n, Q)


def test_schur_013():
    assert schur_poly((0, 1, 3), Q) == parse_poly("x0 + x1 + x2", 3, Q)


def test_schur_024_gf3_product_form():
    F3 = make_prime_field(3)
    prod = (
        ck_biv(2, F3, 3, (0, 1))
        * ck_biv(2, F3, 3, (0, 2))
        * ck_biv(2, F3, 3, (1, 2))
    )
    assert schur_poly((0, 2, 4), F3) == prod


def test_ssyt_examples():
    assert schur_ssyt((0, 2, 3), Q) == parse_poly("x0*x1 + x0*x2 + x1*x2", 3, Q)
    assert schur_ssyt(ExponentSequence.standard(3), Q) == MPoly.one(3, Q)


def test_ssyt_count_via_evaluation():
    # S_(0,2,5) at (1,1,1) counts SSYT of shape (3,1) with entries <= 3
    S = schur_poly((0, 2, 5), Q)
    assert S.evaluate([1, 1, 1]) == Q.element(15)


def test_ssyt_bounds():
    with pytest.raises(SizeError):
        schur_ssyt((0, 1, 2, 3, 4, 5), Q)
    with pytest.raises(SizeError):
        schur_ssyt((0, 20), Q)


def test_cross_oracle_small_grid():
    fields = [Q, make_prime_field(2), make_prime_field(5)]
    for n in (2, 3):
        for tail in combinations(range(1, 7), n - 1):
            c = ExponentSequence((0,) + tail)
            for ctx in fields:
                assert schur_poly(c, ctx) == schur_ssyt(c, ctx)


def test_schur_symmetry_exhaustive():
    for c in [(0, 2, 5), (0, 1, 4), (0, 2, 3, 5)]:
        S = schur_poly(c, Q)
        for sigma in permutations(range(len(c))):
            assert S.permute_vars(sigma) == S


def test_schur_homogeneity():
    for c in [(0, 2, 5), (1, 3, 4), (0, 2, 5, 7)]:
        S = schur_poly(c, Q)
        n = len(c)
        assert S.is_homogeneous()
        assert S.total_degree() == sum(c) - n * (n - 1) // 2


def test_schur_mindeg_zero_when_c0_zero():
    for c in [(0, 2, 5), (0, 3, 7), (0, 2, 5, 7)]:
        S = schur_poly(c, Q)
        for i in range(len(c)):
            assert S.mindeg(i) == 0


def test_ck_uni():
    assert ck_uni(4, Q) == parse_poly("x0^3 + x0^2 + x0 + 1", 1, Q)
    with pytest.raises(BadParameter):
        ck_uni(0, Q)


def test_ck_biv():
    assert ck_biv(2, Q, 3, (1, 2)) == parse_poly("x1 + x2", 3, Q)
    assert ck_biv(1, Q, 3, (1, 2)) == MPoly.one(3, Q)
    with pytest.raises(BadParameter):
        ck_biv(2, Q, 3, (1, 1))


def test_ck_telescoping_identity():
    # (x - y) * C_k(x, y) = x^k - y^k
    for ctx in (Q, make_prime_field(3)):
        x, y = MPoly.variable(2, ctx, 0), MPoly.variable(2, ctx, 1)
        for k in range(1, 9):
            lhs = (x - y) * ck_biv(k, ctx, 2, (0, 1))
            assert lhs == x**k - y**k


def test_ck_mirror_identity():
    for k in range(1, 13):
        c = ck_biv(k, Q, 2, (0, 1))
        assert c.exponent_reverse((k - 1, k - 1)) == c


def test_schur_cache_returns_consistent_objects():
    a = schur_poly((0, 2, 5), Q)
    b = schur_poly((0, 2, 5), Q)
    assert a is b  # cached; safe because MPoly values are immutable


def test_quotient_always_exact_random():
    rng = random.Random(17)
    for _ in range(25):
        n = rng.choice([2, 3, 4])
        tail = sorted(rng.sample(range(1, 9), n - 1))
        c = ExponentSequence((0, *tail))
        V = vandermonde(c, Q)
        E = vandermonde(ExponentSequence.standard(n), Q)
        S = schur_poly(c, Q)
        assert exact_divide(V, E) == S
        assert E * S == V

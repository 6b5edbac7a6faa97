import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from schurforge.errors import (
    BadBounds,
    BadPermutation,
    BadSubstitution,
    ContextError,
    DivisionByZero,
    ZeroPolynomial,
)
from schurforge.fields import make_prime_field, make_rationals
from schurforge.mpoly import MPoly, exact_divide, monomial_associate, parse_poly

from conftest import random_poly

Q = make_rationals()
F2 = make_prime_field(2)
F7 = make_prime_field(7)


def P(text, n=3, ctx=Q):
    return parse_poly(text, n, ctx)


def test_product_difference_of_squares():
    x, y = MPoly.variable(2, Q, 0), MPoly.variable(2, Q, 1)
    assert (x + y) * (x - y) == x * x - y * y


def test_char2_binomial():
    x, y = MPoly.variable(2, F2, 0), MPoly.variable(2, F2, 1)
    assert (x + y) * (x + y) == x * x + y * y


def test_add_scale_cancel():
    rng = random.Random(0)
    for _ in range(20):
        p = random_poly(rng, Q)
        assert (p + p.scale(-1)).is_zero()


def test_ring_mismatch():
    with pytest.raises(ContextError):
        MPoly.one(2, Q) + MPoly.one(3, Q)
    with pytest.raises(ContextError):
        MPoly.one(2, Q) * MPoly.one(2, F7)


def test_exact_divide_examples():
    x, y = MPoly.variable(2, Q, 0), MPoly.variable(2, Q, 1)
    assert exact_divide(x * x - y * y, x - y) == x + y
    assert exact_divide(x * x + y * y, x + y) is None
    with pytest.raises(DivisionByZero):
        exact_divide(x, MPoly.zero(2, Q))


def test_exact_divide_roundtrip_random():
    rng = random.Random(42)
    for ctx in (Q, F7, F2):
        for _ in range(80):
            p = random_poly(rng, ctx, nonzero=False)
            a = random_poly(rng, ctx, nonzero=True)
            assert exact_divide(p * a, a) == p


def test_min_max_part_examples():
    p = P("x0^2*x1 + x0^2*x2 + x0*x1^2")
    assert p.min_part(0) == P("x0*x1^2")
    assert p.max_part(0) == P("x0^2*x1 + x0^2*x2")
    c = MPoly.constant(3, Q, 5)
    assert c.min_part(1) == c
    with pytest.raises(ZeroPolynomial):
        MPoly.zero(3, Q).min_part(0)


def test_width_examples():
    assert P("x0^2*x1 + x0*x1^2").width(0) == 1
    assert P("x1 + x2").width(0) == 0
    with pytest.raises(ZeroPolynomial):
        MPoly.zero(3, Q).deg(0)


def test_substitute_examples():
    F3 = make_prime_field(3)
    p = parse_poly("x1 + x2", 3, F3)
    assert p.substitute_var(1, F3.element(2), 2).is_zero()
    q = P("x1^2")
    assert q.substitute_var(1, Q.element(3), 2) == P("9*x2^2")
    with pytest.raises(BadSubstitution):
        q.substitute_var(1, Q.element(1), 1)


def test_substitute_is_ring_homomorphism():
    rng = random.Random(99)
    for _ in range(60):
        p = random_poly(rng, F7)
        q = random_poly(rng, F7)
        alpha = F7.element(rng.randrange(7))
        sub = lambda r: r.substitute_var(0, alpha, 2)
        assert sub(p + q) == sub(p) + sub(q)
        assert sub(p * q) == sub(p) * sub(q)


def test_evaluate_examples():
    p = parse_poly("x0 + x1", 2, F7)
    assert p.evaluate([F7.element(2), F7.element(3)]) == F7.element(5)
    assert MPoly.zero(2, F7).evaluate([F7.element(1), F7.element(4)]).is_zero()
    with pytest.raises(ContextError):
        p.evaluate([F7.element(1)])


def test_permute_vars():
    p = P("x0*x1^2")
    assert p.permute_vars([1, 0, 2]) == P("x0^2*x1")
    assert p.permute_vars([0, 1, 2]) == p
    with pytest.raises(BadPermutation):
        p.permute_vars([0, 0, 1])


def test_monomial_associate_examples():
    f = P("2*x0*x1^3")
    g = P("x1^2")
    w = monomial_associate(f, g)
    assert w is not None
    assert w.scalar == Q.element(2)
    assert w.shift == (1, 1, 0)
    assert monomial_associate(P("x0 + x1"), P("x0 + 2*x1")) is None
    with pytest.raises(ZeroPolynomial):
        monomial_associate(MPoly.zero(3, Q), g)


def test_monomial_associate_is_equivalence():
    rng = random.Random(7)
    for _ in range(40):
        g = random_poly(rng, F7, nonzero=True)
        refl = monomial_associate(g, g)
        assert refl.scalar == F7.one and refl.shift == (0,) * 3
        scalar = F7.element(rng.randrange(1, 7))
        mono = MPoly.monomial(3, F7, (rng.randint(0, 2), rng.randint(0, 2), 0))
        f = g * mono * scalar
        fw = monomial_associate(f, g)
        assert fw is not None
        back = monomial_associate(g, f)
        assert back is not None
        assert (fw.scalar * back.scalar) == F7.one
        assert tuple(a + b for a, b in zip(fw.shift, back.shift)) == (0, 0, 0)


def test_homogeneous_components():
    p = P("x0^2 + x0*x1 + x1", n=2)
    comps = p.homogeneous_components()
    assert set(comps) == {1, 2}
    assert comps[2] == P("x0^2 + x0*x1", n=2)
    assert comps[1] == P("x1", n=2)
    assert not p.is_homogeneous()
    assert sum(comps.values(), MPoly.zero(2, Q)) == p
    assert MPoly.zero(2, Q).homogeneous_components() == {}
    assert not MPoly.zero(2, Q).is_homogeneous()


def test_exponent_reverse():
    c2 = P("x0 + x1", n=2)
    assert c2.exponent_reverse((1, 1)) == c2
    assert P("x0^2", n=2).exponent_reverse((2, 0)) == MPoly.one(2, Q)
    with pytest.raises(BadBounds):
        P("x0^2", n=2).exponent_reverse((1, 1))


def test_exponent_reverse_involution():
    rng = random.Random(3)
    for _ in range(40):
        p = random_poly(rng, F7, nonzero=True)
        bounds = tuple(p.deg(i) for i in range(3))
        assert p.exponent_reverse(bounds).exponent_reverse(bounds) == p


def test_insert_drop_variable():
    p = P("x0*x1 + 1", n=2)
    emb = p.insert_variable(1)
    assert emb.n == 3
    assert emb == P("x0*x2 + 1", n=3)
    assert emb.drop_variable(1) == p
    with pytest.raises(BadBounds):
        emb.drop_variable(0)


def test_canonical_text_and_parse_roundtrip():
    golden = "2*x0^3*x1 + x1*x2^2 + 1"
    assert parse_poly(golden, 3, Q).to_str() == golden
    rng = random.Random(11)
    for ctx in (Q, F7):
        for _ in range(60):
            p = random_poly(rng, ctx)
            assert parse_poly(p.to_str(), 3, ctx) == p


def test_text_of_negative_and_fraction_coefficients():
    p = MPoly(2, Q, {(1, 0): Fraction(-1), (0, 0): Fraction(1, 2)})
    assert p.to_str() == "-x0 + 1/2"
    assert parse_poly("-x0 + 1/2", 2, Q) == p


def test_extension_coefficient_text_roundtrip(F4):
    t = F4.raw_from_index(2)
    p = MPoly(2, F4, {(1, 0): t, (0, 0): F4.rone})
    text = p.to_str()
    assert text == "(1*t)*x0 + 1"
    assert parse_poly(text, 2, F4) == p


@st.composite
def small_polys(draw):
    terms = draw(
        st.dictionaries(
            st.tuples(st.integers(0, 3), st.integers(0, 3)),
            st.integers(-5, 5),
            max_size=4,
        )
    )
    return MPoly(2, Q, terms)


@settings(max_examples=60)
@given(small_polys(), small_polys(), small_polys())
def test_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@settings(max_examples=60)
@given(small_polys(), small_polys())
def test_minmax_multiplicative(p, q):
    if p.is_zero() or q.is_zero():
        return
    for i in range(2):
        assert (p * q).min_part(i) == p.min_part(i) * q.min_part(i)
        assert (p * q).max_part(i) == p.max_part(i) * q.max_part(i)
        assert (p * q).deg(i) == p.deg(i) + q.deg(i)
        assert (p * q).mindeg(i) == p.mindeg(i) + q.mindeg(i)
        assert (p * q).width(i) == p.width(i) + q.width(i)

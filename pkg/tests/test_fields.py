import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from schurforge import unipoly
from schurforge.errors import ConstructionError, ContextError, DivisionByZero, NotFinite
from schurforge.fields import (
    enumerate_elements,
    is_prime,
    make_extension_field,
    make_prime_field,
    make_rationals,
)


def test_make_prime_field_examples():
    assert make_prime_field(7).p == 7
    assert make_prime_field(2).p == 2
    with pytest.raises(ConstructionError):
        make_prime_field(4)
    with pytest.raises(ConstructionError):
        make_prime_field(1)
    with pytest.raises(ConstructionError):
        make_prime_field(2**16 + 1)


def test_extension_field_gf4_modulus():
    F4 = make_extension_field(2, 2)
    # lex-least monic irreducible quadratic over GF(2) is t^2 + t + 1
    assert F4.modulus == (1, 1, 1)
    assert F4.order == 4


def test_extension_degree_one_is_prime_field():
    ctx = make_extension_field(7, 1)
    assert ctx.kind == "prime"
    assert ctx == make_prime_field(7)


def test_extension_bound():
    with pytest.raises(ConstructionError):
        make_extension_field(2, 21)


def test_extension_modulus_is_irreducible_by_trial_division():
    for p, m in [(2, 3), (3, 2), (5, 2), (2, 5)]:
        ctx = make_extension_field(p, m)
        base = make_prime_field(p)
        assert unipoly.is_irreducible_by_trial(base, list(ctx.modulus))


def test_inverse_in_gf7():
    F7 = make_prime_field(7)
    # scan: 3*x = 1 mod 7 has the single solution x = 5
    assert [x for x in range(7) if (3 * x) % 7 == 1] == [5]
    assert F7.element(3).inv() == F7.element(5)


def test_rational_arithmetic():
    Q = make_rationals()
    third = Q.element(Fraction(1, 3))
    sixth = Q.element(Fraction(1, 6))
    assert third + sixth == Q.element(Fraction(1, 2))
    assert str(third) == "1/3"


def test_from_integer_reduction():
    F2 = make_prime_field(2)
    assert F2.from_integer(3) == F2.one
    F9 = make_extension_field(3, 2)
    assert F9.from_integer(3).is_zero()


def test_division_by_zero():
    F7 = make_prime_field(7)
    with pytest.raises(DivisionByZero):
        F7.element(0).inv()
    with pytest.raises(DivisionByZero):
        make_rationals().element(0).inv()
    with pytest.raises(DivisionByZero):
        make_extension_field(2, 2).zero.inv()


def test_context_mixing_is_an_error():
    F5 = make_prime_field(5)
    F7 = make_prime_field(7)
    with pytest.raises(ContextError):
        F5.element(1) + F7.element(1)
    with pytest.raises(ContextError):
        F5.element(1) == F7.element(1)


def test_enumerate_elements():
    F3 = make_prime_field(3)
    assert [e.raw for e in enumerate_elements(F3)] == [0, 1, 2]
    F4 = make_extension_field(2, 2)
    elems = list(enumerate_elements(F4))
    assert len(elems) == 4
    assert len({e.raw for e in elems}) == 4
    with pytest.raises(NotFinite):
        list(enumerate_elements(make_rationals()))


def test_element_text_forms():
    F4 = make_extension_field(2, 2)
    texts = [str(e) for e in enumerate_elements(F4)]
    assert texts == ["0", "1", "1*t", "1+1*t"]
    assert str(make_prime_field(11).element(10)) == "10"


@pytest.mark.parametrize("maker", [lambda: make_prime_field(7), lambda: make_extension_field(2, 3), make_rationals])
def test_field_axioms_random(maker):
    ctx = maker()
    rng = random.Random(1234)

    def rand():
        if ctx.kind == "rational":
            return ctx.element(Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
        return ctx.element(ctx.raw_from_index(rng.randrange(ctx.order)))

    for _ in range(300):
        a, b, c = rand(), rand(), rand()
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if not a.is_zero():
            assert a * a.inv() == ctx.one


@pytest.mark.parametrize("p,m", [(2, 1), (3, 1), (7, 1), (2, 2), (3, 2), (2, 4)])
def test_fermat_lagrange(p, m):
    ctx = make_extension_field(p, m)
    q = p**m
    for e in enumerate_elements(ctx):
        if not e.is_zero():
            assert e ** (q - 1) == ctx.one


@given(st.integers(min_value=-50, max_value=50), st.integers(min_value=-50, max_value=50))
def test_from_integer_is_a_ring_homomorphism(a, b):
    for ctx in (make_prime_field(5), make_extension_field(2, 2), make_rationals()):
        assert ctx.from_integer(a) + ctx.from_integer(b) == ctx.from_integer(a + b)
        assert ctx.from_integer(a) * ctx.from_integer(b) == ctx.from_integer(a * b)


def test_is_prime_small():
    primes_below_40 = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}
    assert {n for n in range(40) if is_prime(n)} == primes_below_40

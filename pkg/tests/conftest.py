import random

import pytest

from schurforge.fields import (
    make_extension_field,
    make_prime_field,
    make_rationals,
)
from schurforge.mpoly import MPoly


@pytest.fixture(scope="session")
def Q():
    return make_rationals()


@pytest.fixture(scope="session")
def F2():
    return make_prime_field(2)


@pytest.fixture(scope="session")
def F3():
    return make_prime_field(3)


@pytest.fixture(scope="session")
def F5():
    return make_prime_field(5)


@pytest.fixture(scope="session")
def F7():
    return make_prime_field(7)


@pytest.fixture(scope="session")
def F4():
    return make_extension_field(2, 2)


def random_poly(rng: random.Random, ctx, n=3, max_terms=4, max_exp=3, nonzero=False):
    """Small random polynomial; coefficients drawn from a fixed pool."""
    terms = {}
    for _ in range(rng.randint(0 if not nonzero else 1, max_terms)):
        exps = tuple(rng.randint(0, max_exp) for _ in range(n))
        if ctx.kind == "rational":
            coeff = rng.randint(-4, 4)
        elif ctx.kind == "prime":
            coeff = rng.randrange(ctx.p)
        else:
            coeff = ctx.raw_from_index(rng.randrange(ctx.order))
        terms[exps] = coeff
    poly = MPoly(n, ctx, terms)
    if nonzero and poly.is_zero():
        return MPoly(n, ctx, {(0,) * n: 1})
    return poly

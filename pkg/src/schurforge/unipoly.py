"""Univariate polynomial helpers over a field context.

Polynomials are plain lists of raw coefficient values (see fields.FieldCtx
for the raw representation of each field kind), little-endian: coefficient
of t^i at index i.  The zero polynomial is the empty list; a normalized
list never ends with a zero coefficient.  These routines back the
extension-modulus search, squarefreeness checks, and the binary-form
factorization used by the divisor-search oracle.
"""

from __future__ import annotations


def normalize(ctx, coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == ctx.rzero:
        coeffs.pop()
    return coeffs


def degree(f):
    """Degree of f, or -1 for the zero polynomial."""
    return len(f) - 1


def is_zero(f):
    return not f


def add(ctx, f, g):
    radd = ctx.radd
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = radd(out[i], c)
    return normalize(ctx, out)


def sub(ctx, f, g):
    rneg = ctx.rneg
    return add(ctx, f, [rneg(c) for c in g])


def scale(ctx, f, c):
    rmul = ctx.rmul
    if c == ctx.rzero:
        return []
    return [rmul(a, c) for a in f]


def mul(ctx, f, g):
    if not f or not g:
        return []
    radd, rmul = ctx.radd, ctx.rmul
    out = [ctx.rzero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == ctx.rzero:
            continue
        for j, b in enumerate(g):
            out[i + j] = radd(out[i + j], rmul(a, b))
    return normalize(ctx, out)


def divmod_poly(ctx, f, g):
    """Quotient and remainder of f by g (g nonzero)."""
    if not g:
        raise ZeroDivisionError("univariate division by zero polynomial")
    radd, rmul, rneg = ctx.radd, ctx.rmul, ctx.rneg
    lead_inv = ctx.rinv(g[-1])
    rem = list(f)
    dg = len(g) - 1
    if len(rem) - 1 < dg:
        return [], normalize(ctx, rem)
    quot = [ctx.rzero] * (len(rem) - dg)
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k]
        if c == ctx.rzero:
            continue
        q = rmul(c, lead_inv)
        quot[k - dg] = q
        nq = rneg(q)
        for j in range(dg + 1):
            rem[k - dg + j] = radd(rem[k - dg + j], rmul(nq, g[j]))
    return normalize(ctx, quot), normalize(ctx, rem)


def exact_div(ctx, f, g):
    """f // g when the division is exact, else None."""
    q, r = divmod_poly(ctx, f, g)
    return q if not r else None


def monic(ctx, f):
    if not f:
        return f
    return scale(ctx, f, ctx.rinv(f[-1]))


def gcd(ctx, f, g):
    """Monic greatest common divisor via the Euclidean algorithm."""
    a, b = list(f), list(g)
    while b:
        _, r = divmod_poly(ctx, a, b)
        a, b = b, r
    return monic(ctx, a)


def xgcd(ctx, f, g):
    """(d, u, v) with u*f + v*g = d, d the monic gcd."""
    a, ua, va = list(f), [ctx.rone], []
    b, ub, vb = list(g), [], [ctx.rone]
    while b:
        q, r = divmod_poly(ctx, a, b)
        a, b = b, r
        ua, ub = ub, sub(ctx, ua, mul(ctx, q, ub))
        va, vb = vb, sub(ctx, va, mul(ctx, q, vb))
    if a:
        lead_inv = ctx.rinv(a[-1])
        a = scale(ctx, a, lead_inv)
        ua = scale(ctx, ua, lead_inv)
        va = scale(ctx, va, lead_inv)
    return a, ua, va


def evaluate(ctx, f, x):
    """Horner evaluation at a raw field value."""
    radd, rmul = ctx.radd, ctx.rmul
    acc = ctx.rzero
    for c in reversed(f):
        acc = radd(rmul(acc, x), c)
    return acc


def monic_polys(ctx, deg):
    """All monic polynomials of the given degree, lexicographically.

    The free coefficients (c_{deg-1}, ..., c_0) run in ascending
    lexicographic order over the context's element order, so the first
    polynomial yielded is t^deg and the last is the all-(q-1) one.
    """
    q = ctx.order
    idx = ctx.raw_from_index
    for v in range(q**deg):
        coeffs = []
        for i in range(deg):
            coeffs.append(idx((v // q**i) % q))
        coeffs.append(ctx.rone)
        yield coeffs


def is_irreducible_by_trial(ctx, f):
    """Exhaustive trial division by all monic divisors of degree <= deg/2."""
    d = degree(f)
    if d <= 0:
        return False
    if d == 1:
        return True
    for e in range(1, d // 2 + 1):
        for g in monic_polys(ctx, e):
            _, r = divmod_poly(ctx, f, g)
            if not r:
                return False
    return True


def factor(ctx, f):
    """Complete factorization by exhaustive trial division.

    Returns (lead, [(g, multiplicity), ...]) with every g monic irreducible
    and f = lead * prod g^multiplicity.  Factors come out in the
    deterministic candidate order (degree ascending, then lexicographic).
    Cost is O(q^(deg f / 2)) trial divisions; callers stay inside the
    desk-scale envelope.
    """
    if not f:
        raise ZeroDivisionError("cannot factor the zero polynomial")
    lead = f[-1]
    rem = monic(ctx, f)
    factors = []
    e = 1
    while degree(rem) > 0:
        if e > degree(rem) // 2:
            factors.append((rem, 1))
            break
        for g in monic_polys(ctx, e):
            mult = 0
            while True:
                quot = exact_div(ctx, rem, g)
                if quot is None:
                    break
                rem = quot
                mult += 1
            if mult:
                factors.append((g, mult))
            if degree(rem) < e:
                break
        e += 1
    return lead, factors

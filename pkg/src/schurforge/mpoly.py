"""Sparse multivariate polynomials over any field context.

Terms live in a dict mapping exponent tuples to nonzero raw coefficient
values (the zero polynomial is the empty dict).  MPoly values are
immutable: every operation returns a fresh polynomial, so results can be
cached and shared freely.

The monomial order is graded lexicographic with x0 > x1 > ... > x_{n-1},
fixed globally; the canonical text form lists terms in descending order
under it, e.g. ``2*x0^3*x1 + x1*x2^2 + 1``.
"""

from __future__ import annotations

import heapq
import re
from fractions import Fraction
from typing import NamedTuple

from .errors import (
    BadBounds,
    BadPermutation,
    BadSubstitution,
    ContextError,
    DivisionByZero,
    ZeroPolynomial,
)
from .fields import FieldElement


def grlex_key(exps):
    """Sort key realizing graded lex with x0 > x1 > ...; bigger = later."""
    return (sum(exps), exps)


class MonomialAssociate(NamedTuple):
    """Witness of F = scalar * x^shift * G; shift entries may be negative."""

    scalar: FieldElement
    shift: tuple


class MPoly:
    __slots__ = ("n", "ctx", "terms")

    def __init__(self, n, ctx, terms=None):
        self.n = n
        self.ctx = ctx
        clean = {}
        if terms:
            rzero = ctx.rzero
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != n or any(e < 0 for e in exps):
                    raise ContextError(f"bad exponent vector {exps} for {n} variables")
                raw = ctx.coerce_raw(coeff)
                if raw != rzero:
                    clean[exps] = raw
        self.terms = clean

    @classmethod
    def _make(cls, n, ctx, terms):
        # internal fast path: terms already canonical
        poly = object.__new__(cls)
        poly.n = n
        poly.ctx = ctx
        poly.terms = terms
        return poly

    @classmethod
    def zero(cls, n, ctx):
        return cls._make(n, ctx, {})

    @classmethod
    def constant(cls, n, ctx, value):
        raw = ctx.coerce_raw(value)
        if raw == ctx.rzero:
            return cls.zero(n, ctx)
        return cls._make(n, ctx, {(0,) * n: raw})

    @classmethod
    def one(cls, n, ctx):
        return cls._make(n, ctx, {(0,) * n: ctx.rone})

    @classmethod
    def variable(cls, n, ctx, i):
        exps = tuple(1 if j == i else 0 for j in range(n))
        return cls._make(n, ctx, {exps: ctx.rone})

    @classmethod
    def monomial(cls, n, ctx, exps, coeff=1):
        return cls(n, ctx, {tuple(exps): coeff})

    # -- basic queries ----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def _check_ring(self, other):
        if not isinstance(other, MPoly):
            raise ContextError(f"expected MPoly, got {type(other).__name__}")
        if self.n != other.n or self.ctx != other.ctx:
            raise ContextError("polynomials from different rings")

    def leading_monomial(self):
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading monomial")
        return max(self.terms, key=grlex_key)

    def leading_coefficient(self):
        return FieldElement(self.ctx, self.terms[self.leading_monomial()])

    def total_degree(self):
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no degree")
        return max(sum(e) for e in self.terms)

    def deg(self, i):
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no degree")
        return max(e[i] for e in self.terms)

    def mindeg(self, i):
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no degree")
        return min(e[i] for e in self.terms)

    def width(self, i):
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no width")
        degs = [e[i] for e in self.terms]
        return max(degs) - min(degs)

    def coefficient(self, exps):
        raw = self.terms.get(tuple(exps))
        return FieldElement(self.ctx, raw if raw is not None else self.ctx.rzero)

    def sorted_terms(self):
        """Terms in descending graded-lex order, as (exps, raw) pairs."""
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    # -- ring arithmetic --------------------------------------------------

    def __add__(self, other):
        self._check_ring(other)
        radd = self.ctx.radd
        rzero = self.ctx.rzero
        out = dict(self.terms)
        for exps, c in other.terms.items():
            cur = out.get(exps)
            if cur is None:
                out[exps] = c
            else:
                s = radd(cur, c)
                if s == rzero:
                    del out[exps]
                else:
                    out[exps] = s
        return MPoly._make(self.n, self.ctx, out)

    def __neg__(self):
        rneg = self.ctx.rneg
        return MPoly._make(self.n, self.ctx, {e: rneg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            return self.scale(other)
        self._check_ring(other)
        radd, rmul = self.ctx.radd, self.ctx.rmul
        rzero = self.ctx.rzero
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                u = tuple(a + b for a, b in zip(e1, e2))
                prod = rmul(c1, c2)
                cur = out.get(u)
                if cur is None:
                    out[u] = prod
                else:
                    s = radd(cur, prod)
                    if s == rzero:
                        del out[u]
                    else:
                        out[u] = s
        return MPoly._make(self.n, self.ctx, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        acc = MPoly.one(self.n, self.ctx)
        for _ in range(k):
            acc = acc * self
        return acc

    def scale(self, value):
        raw = self.ctx.coerce_raw(value)
        if raw == self.ctx.rzero:
            return MPoly.zero(self.n, self.ctx)
        rmul = self.ctx.rmul
        return MPoly._make(self.n, self.ctx, {e: rmul(c, raw) for e, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.n == other.n and self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, self.ctx, tuple(self.sorted_terms())))

    def __reduce__(self):
        return (_unpickle_mpoly, (self.n, self.ctx, tuple(self.terms.items())))

    # -- structural operators ---------------------------------------------

    def min_part(self, i):
        """Sub-sum of terms attaining the minimal x_i-degree."""
        if not self.terms:
            raise ZeroPolynomial("min_part of zero polynomial")
        lo = min(e[i] for e in self.terms)
        return MPoly._make(self.n, self.ctx, {e: c for e, c in self.terms.items() if e[i] == lo})

    def max_part(self, i):
        """Sub-sum of terms attaining the maximal x_i-degree."""
        if not self.terms:
            raise ZeroPolynomial("max_part of zero polynomial")
        hi = max(e[i] for e in self.terms)
        return MPoly._make(self.n, self.ctx, {e: c for e, c in self.terms.items() if e[i] == hi})

    def substitute_var(self, src, alpha, dst):
        """Image under the ring homomorphism x_src -> alpha * x_dst."""
        if src == dst:
            raise BadSubstitution("source and destination variable coincide")
        ctx = self.ctx
        a = ctx.coerce_raw(alpha)
        radd, rmul, rpow = ctx.radd, ctx.rmul, ctx.rpow
        rzero = ctx.rzero
        out = {}
        for exps, c in self.terms.items():
            k = exps[src]
            if k:
                c = rmul(c, rpow(a, k))
                e = list(exps)
                e[dst] += k
                e[src] = 0
                exps = tuple(e)
            if c == rzero:
                continue
            cur = out.get(exps)
            if cur is None:
                out[exps] = c
            else:
                s = radd(cur, c)
                if s == rzero:
                    del out[exps]
                else:
                    out[exps] = s
        return MPoly._make(self.n, self.ctx, out)

    def evaluate(self, point):
        point = [self.ctx.coerce_raw(x) for x in point]
        if len(point) != self.n:
            raise ContextError(f"expected {self.n} coordinates, got {len(point)}")
        radd, rmul, rpow = self.ctx.radd, self.ctx.rmul, self.ctx.rpow
        acc = self.ctx.rzero
        for exps, c in self.terms.items():
            v = c
            for x, e in zip(point, exps):
                if e:
                    v = rmul(v, rpow(x, e))
            acc = radd(acc, v)
        return FieldElement(self.ctx, acc)

    def permute_vars(self, sigma):
        """Apply x_i -> x_{sigma[i]} to every term."""
        sigma = list(sigma)
        if sorted(sigma) != list(range(self.n)):
            raise BadPermutation(f"{sigma} is not a permutation of 0..{self.n - 1}")
        out = {}
        for exps, c in self.terms.items():
            e = [0] * self.n
            for i, v in enumerate(exps):
                e[sigma[i]] = v
            out[tuple(e)] = c
        return MPoly._make(self.n, self.ctx, out)

    def homogeneous_components(self):
        comps = {}
        for exps, c in self.terms.items():
            comps.setdefault(sum(exps), {})[exps] = c
        return {d: MPoly._make(self.n, self.ctx, t) for d, t in sorted(comps.items())}

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) == 1

    def exponent_reverse(self, bounds):
        """Map every term x^e to x^(bounds - e), coefficients unchanged."""
        bounds = tuple(bounds)
        if len(bounds) != self.n:
            raise BadBounds(f"expected {self.n} bounds, got {len(bounds)}")
        if not self.terms:
            return self
        for i in range(self.n):
            if bounds[i] < self.deg(i):
                raise BadBounds(f"bound {bounds[i]} below degree in x{i}")
        out = {tuple(b - x for b, x in zip(bounds, e)): c for e, c in self.terms.items()}
        return MPoly._make(self.n, self.ctx, out)

    def insert_variable(self, pos):
        """Embed into a ring with one more variable, unused, at index pos."""
        if not 0 <= pos <= self.n:
            raise BadPermutation(f"insert position {pos} out of range")
        out = {}
        for exps, c in self.terms.items():
            out[exps[:pos] + (0,) + exps[pos:]] = c
        return MPoly._make(self.n + 1, self.ctx, out)

    def drop_variable(self, pos):
        """Remove an unused variable at index pos."""
        if not 0 <= pos < self.n:
            raise BadPermutation(f"drop position {pos} out of range")
        out = {}
        for exps, c in self.terms.items():
            if exps[pos] != 0:
                raise BadBounds(f"variable x{pos} occurs with positive degree")
            out[exps[:pos] + exps[pos + 1 :]] = c
        return MPoly._make(self.n - 1, self.ctx, out)

    def content_monomial(self):
        """Componentwise minimal exponents (the largest dividing monomial)."""
        if not self.terms:
            raise ZeroPolynomial("content of zero polynomial")
        gamma = None
        for exps in self.terms:
            if gamma is None:
                gamma = list(exps)
            else:
                gamma = [min(a, b) for a, b in zip(gamma, exps)]
        return tuple(gamma)

    def shift_exponents(self, delta):
        """Multiply by x^delta (entries may be negative if degrees allow)."""
        out = {}
        for exps, c in self.terms.items():
            e = tuple(a + b for a, b in zip(exps, delta))
            if any(x < 0 for x in e):
                raise BadBounds("negative exponent after shift")
            out[e] = c
        return MPoly._make(self.n, self.ctx, out)

    # -- text form ----------------------------------------------------------

    def to_str(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, raw in self.sorted_terms():
            coeff = self.ctx.raw_to_str(raw)
            factors = []
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(f"x{i}")
                elif e > 1:
                    factors.append(f"x{i}^{e}")
            if not factors:
                body = coeff if _is_plain_coeff(coeff) else f"({coeff})"
            elif coeff == "1":
                body = "*".join(factors)
            elif coeff == "-1":
                body = "-" + "*".join(factors)
            else:
                chead = coeff if _is_plain_coeff(coeff) else f"({coeff})"
                body = chead + "*" + "*".join(factors)
            parts.append(body)
        text = parts[0]
        for part in parts[1:]:
            if part.startswith("-"):
                text += " - " + part[1:]
            else:
                text += " + " + part
        return text

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"MPoly({self.to_str()!r}, n={self.n}, ctx={self.ctx!r})"


def _unpickle_mpoly(n, ctx, items):
    return MPoly._make(n, ctx, dict(items))


def _is_plain_coeff(text):
    # extension coefficients like "1+2*t" need parentheses inside products
    return "+" not in text and "t" not in text and not ("-" in text[1:])


# -- exact division -------------------------------------------------------


def exact_divide(P: MPoly, A: MPoly):
    """Quotient Q with P = A*Q, or None when no such Q exists.

    Single-divisor division under graded lex: the loop cancels the current
    leading term of the remainder against the leading term of A; the first
    leading term A cannot cancel proves the remainder nonzero, so the
    division is exact iff the remainder empties.
    """
    P._check_ring(A)
    if A.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    if P.is_zero():
        return MPoly.zero(P.n, P.ctx)
    ctx = P.ctx
    radd, rmul, rneg = ctx.radd, ctx.rmul, ctx.rneg
    rzero = ctx.rzero
    la = A.leading_monomial()
    ca_inv = ctx.rinv(A.terms[la])
    aterms = [(e, c) for e, c in A.terms.items()]
    rem = dict(P.terms)
    heap = [(-sum(e), tuple(-x for x in e), e) for e in rem]
    heapq.heapify(heap)
    quot = {}
    while heap:
        _, _, mono = heapq.heappop(heap)
        c = rem.get(mono)
        if c is None:
            continue  # stale entry
        t = tuple(a - b for a, b in zip(mono, la))
        if any(x < 0 for x in t):
            return None
        qc = rmul(c, ca_inv)
        quot[t] = qc
        nqc = rneg(qc)
        for ea, ca in aterms:
            u = tuple(a + b for a, b in zip(t, ea))
            cur = rem.get(u)
            if cur is None:
                val = rmul(nqc, ca)
                if val != rzero:
                    rem[u] = val
                    heapq.heappush(heap, (-sum(u), tuple(-x for x in u), u))
            else:
                val = radd(cur, rmul(nqc, ca))
                if val == rzero:
                    del rem[u]
                else:
                    rem[u] = val
    assert not rem
    return MPoly._make(P.n, ctx, quot)


def monomial_associate(F: MPoly, G: MPoly):
    """The unique (scalar, shift) with F = scalar * x^shift * G, or None."""
    F._check_ring(G)
    if F.is_zero() or G.is_zero():
        raise ZeroPolynomial("monomial association of zero polynomial")
    if len(F.terms) != len(G.terms):
        return None
    lf = F.leading_monomial()
    lg = G.leading_monomial()
    shift = tuple(a - b for a, b in zip(lf, lg))
    ctx = F.ctx
    scalar = ctx.rmul(F.terms[lf], ctx.rinv(G.terms[lg]))
    rmul = ctx.rmul
    for exps, c in G.terms.items():
        target = tuple(a + b for a, b in zip(exps, shift))
        if any(x < 0 for x in target):
            return None
        if F.terms.get(target) != rmul(scalar, c):
            return None
    return MonomialAssociate(FieldElement(ctx, scalar), shift)


# -- parsing ----------------------------------------------------------------

_VAR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_poly(text: str, n: int, ctx) -> MPoly:
    """Parse the canonical text form back into a polynomial."""
    text = text.strip()
    if text == "0":
        return MPoly.zero(n, ctx)
    terms = {}
    for sign, chunk in _split_terms(text):
        exps = [0] * n
        coeff_text = None
        for factor in _split_factors(chunk):
            m = _VAR_RE.match(factor)
            if m:
                idx = int(m.group(1))
                if idx >= n:
                    raise ValueError(f"variable x{idx} out of range for n={n}")
                exps[idx] += int(m.group(2) or 1)
            else:
                if coeff_text is not None:
                    raise ValueError(f"two coefficients in term {chunk!r}")
                coeff_text = factor
        raw = _parse_coeff(coeff_text, ctx) if coeff_text is not None else ctx.rone
        if sign == "-":
            raw = ctx.rneg(raw)
        key = tuple(exps)
        cur = terms.get(key, ctx.rzero)
        terms[key] = ctx.radd(cur, raw)
    return MPoly(n, ctx, terms)


def _split_terms(text):
    out = []
    depth = 0
    sign = "+"
    cur = []
    prev = ""  # last significant character seen
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in "+-" and prev not in ("", "^", "(", "+", "-", "*"):
            out.append((sign, "".join(cur).strip()))
            sign = ch
            cur = []
            prev = ""
        else:
            cur.append(ch)
            if not ch.isspace():
                prev = ch
    if cur:
        out.append((sign, "".join(cur).strip()))
    # a leading "-" on the first term arrives as part of the chunk
    fixed = []
    for sign, chunk in out:
        if chunk.startswith("-"):
            sign = "-" if sign == "+" else "+"
            chunk = chunk[1:].strip()
        fixed.append((sign, chunk))
    return fixed


def _split_factors(chunk):
    out = []
    depth = 0
    cur = []
    for ch in chunk:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "*" and depth == 0:
            out.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    if cur:
        out.append("".join(cur).strip())
    return [f for f in out if f]


def _parse_coeff(text, ctx):
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1].strip()
    kind = ctx.kind
    if kind == "rational":
        if "/" in text:
            num, den = text.split("/")
            return ctx.coerce_raw(Fraction(int(num), int(den)))
        return ctx.coerce_raw(int(text))
    if kind == "prime":
        return ctx.coerce_raw(int(text))
    # extension: c0+c1*t+c2*t^2...
    coeffs = [0] * ctx.m
    for part in text.split("+"):
        part = part.strip()
        if not part:
            continue
        if "t" not in part:
            coeffs[0] = (coeffs[0] + int(part)) % ctx.p
            continue
        if "*" in part:
            c_txt, t_txt = part.split("*", 1)
        else:
            c_txt, t_txt = "1", part
        k = 1 if t_txt.strip() == "t" else int(t_txt.strip().split("^")[1])
        coeffs[k] = (coeffs[k] + int(c_txt)) % ctx.p
    return tuple(coeffs)

"""Exact field arithmetic: GF(p), GF(p^m), and the rationals.

Each kind of field is a FieldCtx subclass.  Contexts expose two layers:

* raw values -- the canonical internal representation (int residue for
  prime fields, fixed-length coefficient tuple for extensions, Fraction
  for the rationals) together with ``r``-prefixed arithmetic methods.
  Polynomial kernels work on raw values for speed.
* FieldElement -- an immutable wrapper pairing a raw value with its
  context, with operator overloading and strict context checking
  (mixing contexts raises ContextError, never coerces).

Bounds are fixed up front: p < 2^16 and p^m <= 2^20, which keeps element
enumeration and the exhaustive modulus search cheap.
"""

from __future__ import annotations

from fractions import Fraction

from . import unipoly
from .errors import ConstructionError, ContextError, DivisionByZero, NotFinite

MAX_PRIME = 2**16
MAX_ORDER = 2**20


def is_prime(n: int) -> bool:
    """Trial-division primality check, adequate below 2^16."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


class FieldElement:
    """A value in a specific field context."""

    __slots__ = ("ctx", "raw")

    def __init__(self, ctx, raw):
        self.ctx = ctx
        self.raw = raw

    def _check(self, other):
        if not isinstance(other, FieldElement):
            raise ContextError(f"expected FieldElement, got {type(other).__name__}")
        if self.ctx != other.ctx:
            raise ContextError(f"context mismatch: {self.ctx} vs {other.ctx}")

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.ctx, self.ctx.radd(self.raw, other.raw))

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.ctx, self.ctx.rsub(self.raw, other.raw))

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.ctx, self.ctx.rmul(self.raw, other.raw))

    def __truediv__(self, other):
        self._check(other)
        return FieldElement(self.ctx, self.ctx.rmul(self.raw, self.ctx.rinv(other.raw)))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.rneg(self.raw))

    def __pow__(self, n: int):
        return FieldElement(self.ctx, self.ctx.rpow(self.raw, n))

    def inv(self):
        return FieldElement(self.ctx, self.ctx.rinv(self.raw))

    def is_zero(self) -> bool:
        return self.raw == self.ctx.rzero

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        if self.ctx != other.ctx:
            raise ContextError(f"context mismatch: {self.ctx} vs {other.ctx}")
        return self.raw == other.raw

    def __hash__(self):
        return hash((self.ctx, self.raw))

    def __str__(self):
        return self.ctx.raw_to_str(self.raw)

    def __repr__(self):
        return f"{self.ctx.raw_to_str(self.raw)} in {self.ctx}"


class FieldCtx:
    """Common interface of the three field kinds."""

    kind = None
    p = 0
    m = 1
    modulus = None
    order = 0  # number of elements, 0 when infinite

    def element(self, raw) -> FieldElement:
        return FieldElement(self, self.coerce_raw(raw))

    def from_integer(self, n: int) -> FieldElement:
        return FieldElement(self, self.rfrom_int(n))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, self.rzero)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, self.rone)

    def rsub(self, a, b):
        return self.radd(a, self.rneg(b))

    def rpow(self, a, n: int):
        if n < 0:
            return self.rpow(self.rinv(a), -n)
        acc = self.rone
        base = a
        while n:
            if n & 1:
                acc = self.rmul(acc, base)
            base = self.rmul(base, base)
            n >>= 1
        return acc

    def is_finite(self) -> bool:
        return self.order > 0

    def describe(self) -> dict:
        """JSON-ready description used in reports."""
        d = {"kind": self.kind, "p": self.p, "m": self.m}
        if self.modulus is not None:
            d["modulus"] = list(self.modulus)
        return d


class PrimeField(FieldCtx):
    kind = "prime"

    def __init__(self, p: int):
        self.p = p
        self.m = 1
        self.order = p
        self.rzero = 0
        self.rone = 1 % p

    def coerce_raw(self, raw):
        if isinstance(raw, FieldElement):
            if raw.ctx != self:
                raise ContextError(f"context mismatch: {raw.ctx} vs {self}")
            return raw.raw
        if isinstance(raw, int):
            return raw % self.p
        raise ContextError(f"cannot interpret {raw!r} as a GF({self.p}) value")

    def radd(self, a, b):
        return (a + b) % self.p

    def rsub(self, a, b):
        return (a - b) % self.p

    def rmul(self, a, b):
        return (a * b) % self.p

    def rneg(self, a):
        return -a % self.p

    def rinv(self, a):
        if a == 0:
            raise DivisionByZero(f"inverse of zero in GF({self.p})")
        return pow(a, self.p - 2, self.p)

    def rfrom_int(self, n: int):
        return n % self.p

    def raw_from_index(self, i: int):
        return i

    def raw_sort_key(self, a):
        return a

    def raw_to_str(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class ExtensionField(FieldCtx):
    kind = "extension"

    def __init__(self, p: int, m: int, modulus: tuple):
        self.p = p
        self.m = m
        self.order = p**m
        self.modulus = modulus  # little-endian, length m+1, monic
        self.base = PrimeField(p)
        self.rzero = (0,) * m
        self.rone = (1,) + (0,) * (m - 1)
        # t^(m+k) reduced mod the modulus, for k = 0..m-2
        tail = [(-c) % p for c in modulus[:m]]
        self._red = []
        cur = list(tail)  # t^m
        for _ in range(m - 1):
            self._red.append(tuple(cur))
            overflow = cur[-1]
            cur = [0] + cur[:-1]
            if overflow:
                cur = [(cur[i] + overflow * tail[i]) % p for i in range(m)]

    def coerce_raw(self, raw):
        if isinstance(raw, FieldElement):
            if raw.ctx != self:
                raise ContextError(f"context mismatch: {raw.ctx} vs {self}")
            return raw.raw
        if isinstance(raw, int):
            return self.rfrom_int(raw)
        if isinstance(raw, (tuple, list)) and len(raw) == self.m:
            return tuple(c % self.p for c in raw)
        raise ContextError(f"cannot interpret {raw!r} as a {self} value")

    def radd(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def rsub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def rneg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def rmul(self, a, b):
        p, m = self.p, self.m
        conv = [0] * (2 * m - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    conv[i + j] += x * y
        out = [c % p for c in conv[:m]]
        for k in range(m, 2 * m - 1):
            c = conv[k] % p
            if c:
                red = self._red[k - m]
                for i in range(m):
                    out[i] = (out[i] + c * red[i]) % p
        return tuple(out)

    def rinv(self, a):
        if a == self.rzero:
            raise DivisionByZero(f"inverse of zero in {self}")
        f = unipoly.normalize(self.base, list(a))
        d, u, _ = unipoly.xgcd(self.base, f, list(self.modulus))
        if unipoly.degree(d) != 0:
            raise ArithmeticError("modulus not coprime to nonzero element")
        u = unipoly.scale(self.base, u, self.base.rinv(d[0]))
        u = u + [0] * (self.m - len(u))
        return tuple(u[: self.m])

    def rfrom_int(self, n: int):
        return (n % self.p,) + (0,) * (self.m - 1)

    def raw_from_index(self, i: int):
        p = self.p
        return tuple((i // p**k) % p for k in range(self.m))

    def raw_sort_key(self, a):
        return sum(c * self.p**k for k, c in enumerate(a))

    def raw_to_str(self, a) -> str:
        parts = []
        for k, c in enumerate(a):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*t")
            else:
                parts.append(f"{c}*t^{k}")
        return "+".join(parts) if parts else "0"

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and other.p == self.p
            and other.m == self.m
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("extension", self.p, self.m, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.m})"


class RationalField(FieldCtx):
    kind = "rational"

    def __init__(self):
        self.p = 0
        self.m = 1
        self.order = 0
        self.rzero = Fraction(0)
        self.rone = Fraction(1)

    def coerce_raw(self, raw):
        if isinstance(raw, FieldElement):
            if raw.ctx != self:
                raise ContextError(f"context mismatch: {raw.ctx} vs {self}")
            return raw.raw
        if isinstance(raw, (int, Fraction)):
            return Fraction(raw)
        raise ContextError(f"cannot interpret {raw!r} as a rational value")

    def radd(self, a, b):
        return a + b

    def rsub(self, a, b):
        return a - b

    def rmul(self, a, b):
        return a * b

    def rneg(self, a):
        return -a

    def rinv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero in Q")
        return 1 / a

    def rfrom_int(self, n: int):
        return Fraction(n)

    def raw_sort_key(self, a):
        return a

    def raw_to_str(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "Q"


_RATIONALS = RationalField()


def make_prime_field(p: int) -> PrimeField:
    if not isinstance(p, int) or not 2 <= p < MAX_PRIME:
        raise ConstructionError(f"prime modulus must satisfy 2 <= p < 2^16, got {p}")
    if not is_prime(p):
        raise ConstructionError(f"{p} is not prime")
    return PrimeField(p)


def make_extension_field(p: int, m: int) -> FieldCtx:
    """GF(p^m) modulo the lexicographically least monic irreducible.

    Candidate moduli t^m + a_{m-1} t^{m-1} + ... + a_0 are scanned in
    ascending lexicographic order of (a_{m-1}, ..., a_0); irreducibility
    is established by exhaustive trial division, so the chosen modulus is
    reproducible across runs and machines.
    """
    base = make_prime_field(p)
    if not isinstance(m, int) or m < 1:
        raise ConstructionError(f"extension degree must be a positive integer, got {m}")
    if p**m > MAX_ORDER:
        raise ConstructionError(f"field order {p}^{m} exceeds the 2^20 bound")
    if m == 1:
        return base
    for cand in unipoly.monic_polys(base, m):
        if unipoly.is_irreducible_by_trial(base, cand):
            return ExtensionField(p, m, tuple(cand))
    raise ConstructionError(f"no irreducible modulus of degree {m} over GF({p})")


def make_rationals() -> RationalField:
    return _RATIONALS


def enumerate_elements(ctx: FieldCtx):
    """Yield every element of a finite context once, in a fixed order."""
    if not ctx.is_finite():
        raise NotFinite("cannot enumerate an infinite field")
    for i in range(ctx.order):
        yield FieldElement(ctx, ctx.raw_from_index(i))

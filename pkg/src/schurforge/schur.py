"""Schur polynomials as generalized Vandermonde quotients, plus the SSYT oracle.

Two independent constructions of the same symmetric polynomial live here:

* ``schur_poly`` divides the generalized Vandermonde determinant by the
  classical one (the division is always exact; a nonzero remainder would
  be an internal error, not a user error);
* ``schur_ssyt`` enumerates semistandard Young tableaux of the derived
  partition shape and sums their content monomials.

Their agreement on the whole test envelope is the central correctness
check for both paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .errors import BadParameter, BadSequence, SizeError
from .mpoly import MPoly, exact_divide

MAX_VARS = 6  # determinant expansion bound
SSYT_MAX_PART = 12
SSYT_MAX_VARS = 5


@dataclass(frozen=True)
class ExponentSequence:
    """Strictly increasing non-negative exponents c_0 < c_1 < ... < c_{n-1}."""

    c: tuple

    def __post_init__(self):
        c = tuple(int(x) for x in self.c)
        object.__setattr__(self, "c", c)
        if not c:
            raise BadSequence("empty exponent sequence")
        if c[0] < 0:
            raise BadSequence(f"negative exponent in {c}")
        if any(a >= b for a, b in zip(c, c[1:])):
            raise BadSequence(f"{c} is not strictly increasing")

    @classmethod
    def standard(cls, n: int) -> "ExponentSequence":
        return cls(tuple(range(n)))

    @classmethod
    def parse(cls, text: str) -> "ExponentSequence":
        try:
            vals = tuple(int(part) for part in text.split(","))
        except ValueError as exc:
            raise BadSequence(f"cannot parse exponent sequence {text!r}") from exc
        return cls(vals)

    @property
    def n(self) -> int:
        return len(self.c)

    def __len__(self):
        return len(self.c)

    def __iter__(self):
        return iter(self.c)

    def __getitem__(self, i):
        return self.c[i]

    def __str__(self):
        return ",".join(str(x) for x in self.c)

    def gaps(self) -> tuple:
        """The consecutive differences d_i = c_{i+1} - c_i (all >= 1)."""
        return tuple(b - a for a, b in zip(self.c, self.c[1:]))

    def partition(self) -> tuple:
        """lambda_j = c_{n-1-j} - (n-1-j), weakly decreasing."""
        n = len(self.c)
        return tuple(self.c[n - 1 - j] - (n - 1 - j) for j in range(n))

    def remove(self, indices) -> "ExponentSequence":
        """Drop the entries at the given indices (hat notation)."""
        drop = set(indices)
        if any(i < 0 or i >= len(self.c) for i in drop):
            raise BadSequence(f"removal indices {sorted(drop)} out of range")
        kept = tuple(x for i, x in enumerate(self.c) if i not in drop)
        return ExponentSequence(kept)

    def shifted(self, b: int) -> tuple:
        """The plain integer sequence (c_0 - b, ..., c_{n-1} - b)."""
        return tuple(x - b for x in self.c)

    def reflected(self) -> "ExponentSequence":
        """Reflect exponents through c_{n-1}: (0, a, b) -> (0, b-a, b)."""
        top = self.c[-1]
        return ExponentSequence(tuple(top - x for x in reversed(self.c)))


def as_sequence(c) -> ExponentSequence:
    if isinstance(c, ExponentSequence):
        return c
    return ExponentSequence(tuple(c))


def _permutation_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def vandermonde(c, ctx) -> MPoly:
    """det[x_i^{c_j}], expanded exactly over the n! permutations."""
    c = as_sequence(c)
    n = len(c)
    if n > MAX_VARS:
        raise SizeError(f"{n} variables exceeds the determinant bound {MAX_VARS}")
    pos = ctx.rfrom_int(1)
    neg = ctx.rfrom_int(-1)
    terms = {}
    for sigma in permutations(range(n)):
        exps = tuple(c[sigma[i]] for i in range(n))
        terms[exps] = pos if _permutation_sign(sigma) == 1 else neg
    return MPoly(n, ctx, terms)


@lru_cache(maxsize=None)
def _schur_cached(c_tuple, ctx) -> MPoly:
    c = ExponentSequence(c_tuple)
    n = len(c)
    numerator = vandermonde(c, ctx)
    denominator = vandermonde(ExponentSequence.standard(n), ctx)
    quotient = exact_divide(numerator, denominator)
    # the quotient exists over the integers, so a failure here is a bug
    assert quotient is not None, f"Vandermonde quotient failed for c={c_tuple}"
    return quotient


def schur_poly(c, ctx) -> MPoly:
    """S_c = V_c / V_(0,1,...,n-1), computed by exact division."""
    c = as_sequence(c)
    if len(c) > MAX_VARS:
        raise SizeError(f"{len(c)} variables exceeds the bound {MAX_VARS}")
    return _schur_cached(c.c, ctx)


@lru_cache(maxsize=None)
def _ssyt_cached(c_tuple, ctx) -> MPoly:
    c = ExponentSequence(c_tuple)
    n = len(c)
    lam = [part for part in c.partition() if part > 0]
    counts = {}
    if not lam:
        counts[(0,) * n] = 1
    else:
        rows = len(lam)
        grid = [[0] * lam[r] for r in range(rows)]
        cells = [(r, j) for r in range(rows) for j in range(lam[r])]
        content = [0] * n

        def fill(pos):
            if pos == len(cells):
                key = tuple(content)
                counts[key] = counts.get(key, 0) + 1
                return
            r, j = cells[pos]
            low = 1
            if j > 0:
                low = grid[r][j - 1]
            if r > 0 and j < lam[r - 1]:
                low = max(low, grid[r - 1][j] + 1)
            for val in range(low, n + 1):
                grid[r][j] = val
                content[val - 1] += 1
                fill(pos + 1)
                content[val - 1] -= 1
            grid[r][j] = 0

        fill(0)
    terms = {exps: ctx.rfrom_int(cnt) for exps, cnt in counts.items()}
    return MPoly(n, ctx, terms)


def schur_ssyt(c, ctx) -> MPoly:
    """Tableau-sum construction of the same polynomial as schur_poly.

    Enumerates all semistandard fillings of the shape derived from c with
    entries in {1..n}, row-by-row with column-strictness pruning, counts
    each content monomial over the integers, and maps the counts into ctx.
    """
    c = as_sequence(c)
    lam = c.partition()
    if len(c) > SSYT_MAX_VARS:
        raise SizeError(f"{len(c)} variables exceeds the SSYT bound {SSYT_MAX_VARS}")
    if lam[0] > SSYT_MAX_PART:
        raise SizeError(f"partition part {lam[0]} exceeds the SSYT bound {SSYT_MAX_PART}")
    return _ssyt_cached(c.c, ctx)


def ck_uni(k: int, ctx) -> MPoly:
    """1 + x + x^2 + ... + x^(k-1) as a one-variable polynomial."""
    if k < 1:
        raise BadParameter(f"ck requires k >= 1, got {k}")
    one = ctx.rone
    return MPoly(1, ctx, {(i,): one for i in range(k)})


def ck_biv(k: int, ctx, n: int = 2, pair=(0, 1)) -> MPoly:
    """sum_{t=0}^{k-1} x_i^t x_j^{k-1-t} on the requested variable pair."""
    if k < 1:
        raise BadParameter(f"ck requires k >= 1, got {k}")
    i, j = pair
    if i == j or not (0 <= i < n and 0 <= j < n):
        raise BadParameter(f"bad variable pair {pair} for {n} variables")
    one = ctx.rone
    terms = {}
    for t in range(k):
        exps = [0] * n
        exps[i] = t
        exps[j] = k - 1 - t
        terms[tuple(exps)] = one
    return MPoly(n, ctx, terms)

"""Ground-truth irreducibility oracle, hypothesis predicate, and survey.

The oracle decides reducibility of a homogeneous polynomial over a finite
field by exhausting every candidate factor degree d = 1..floor(T/2).  Two
interchangeable search methods cover a degree:

* ``lift`` (default): complete divisor enumeration.  The candidate's
  bottom slice in the last active variable must divide the polynomial's
  bottom slice; slices in two variables are binary forms whose divisors
  are read off an exhaustive trial-division factorization, and the
  remaining slices of the candidate are recovered by solving exact linear
  systems, one slice at a time.  Every solution is verified by exact
  division, so no candidate is ever accepted structurally.
* ``enumerate``: the literal scan of all monic coefficient vectors.  It
  is exponential in the number of candidate monomials and only usable on
  small instances, where it cross-checks the lift method.

Both methods report the same verdict and the same first witness: the
divisor whose coefficient vector (monomials ascending in graded lex) is
lexicographically least under the field's element order, found at the
least reducible degree.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import reduce
from math import gcd
from time import perf_counter

from . import unipoly
from .errors import BadParameter, SizeError
from .fields import make_prime_field
from .mpoly import MPoly, exact_divide, grlex_key
from .schur import ExponentSequence, as_sequence, ck_biv, schur_poly

SURVEY_MAX_B = 12
SURVEY_MAX_PRIME = 11
_KERNEL_BRANCH_LIMIT = 10**6
_CERT_ATTEMPTS = 8

IRREDUCIBLE = "irreducible"
REDUCIBLE = "reducible"
INCONCLUSIVE = "inconclusive"


@dataclass
class TheoremCheck:
    """Which of the named hypothesis conditions hold for (c, p).

    ``applies`` collects the sufficient conditions (c_0 = 0, all gaps > 1
    and coprime to their neighbors, none divisible by p); the predicate is
    meaningful for n >= 3.  ``only_if_holds`` is the necessary condition
    c_0 = 0 and gcd(c) = 1 valid over any field.
    """

    applies: bool
    only_if_holds: bool
    failures: list

    def to_json(self) -> dict:
        return {
            "applies": self.applies,
            "only_if_holds": self.only_if_holds,
            "failures": list(self.failures),
        }


@dataclass
class Verdict:
    kind: str
    witness: tuple | None  # (factor, cofactor) MPoly pair
    searched_degree: int
    candidates_tested: int

    def to_json(self) -> dict:
        out = {
            "kind": self.kind,
            "searched_degree": self.searched_degree,
            "candidates_tested": self.candidates_tested,
        }
        if self.witness is not None:
            out["witness"] = {
                "factor": self.witness[0].to_str(),
                "cofactor": self.witness[1].to_str(),
            }
        return out


@dataclass
class SurveyRecord:
    c: ExponentSequence
    p: int
    total_degree: int
    check: TheoremCheck
    verdict: Verdict
    consistent: bool
    elapsed_ms: int

    @property
    def theorem_applies(self) -> bool:
        return self.check.applies


@dataclass
class SpecializationResult:
    status: str  # "certified" | "unknown"
    attempts: int


def theorem_conditions(c, p: int) -> TheoremCheck:
    """Evaluate every named condition; p = 0 makes the p-condition vacuous."""
    c = as_sequence(c)
    if p != 0 and p < 2:
        raise BadParameter(f"characteristic must be 0 or a prime, got {p}")
    gaps = c.gaps()
    failures = []
    if c[0] != 0:
        failures.append("c0_nonzero")
    if any(d <= 1 for d in gaps):
        failures.append("gap_le_1")
    if any(gcd(a, b) > 1 for a, b in zip(gaps, gaps[1:])):
        failures.append("adjacent_gcd")
    if p > 0 and any(d % p == 0 for d in gaps):
        failures.append("p_divides_gap")
    applies = not failures
    gcd_c = reduce(gcd, c.c, 0)
    only_if = c[0] == 0 and gcd_c == 1
    if gcd_c != 1:
        failures.append("gcd_c_not_1")
    return TheoremCheck(applies=applies, only_if_holds=only_if, failures=failures)


# -- divisor search ----------------------------------------------------------


def _monomials_of_degree(n: int, d: int, variables) -> list:
    """Exponent tuples of total degree d supported on the given variables,
    ascending in graded lex (equivalently, plain lex at fixed degree)."""
    variables = sorted(variables)
    out = []

    def rec(idx, remaining, exps):
        if idx == len(variables) - 1:
            e = list(exps)
            e[variables[idx]] = remaining
            out.append(tuple(e))
            return
        for k in range(remaining + 1):
            e = list(exps)
            e[variables[idx]] = k
            rec(idx + 1, remaining - k, e)

    if not variables:
        if d == 0:
            out.append((0,) * n)
        return out
    rec(0, d, [0] * n)
    out.sort()
    return out


def _poly_key(P: MPoly):
    return tuple(sorted(P.terms.items()))


def candidate_sort_key(P: MPoly):
    """Coefficient vector of P over its degree monomials, ascending graded lex."""
    d = P.total_degree()
    ctx = P.ctx
    key = []
    for exps in _monomials_of_degree(P.n, d, range(P.n)):
        raw = P.terms.get(exps, ctx.rzero)
        key.append(ctx.raw_sort_key(raw))
    return tuple(key)


def _grlex_monic(P: MPoly) -> MPoly:
    lead = P.terms[P.leading_monomial()]
    if lead == P.ctx.rone:
        return P
    return P.scale(P.ctx.rinv(lead))


def _lcg_stream(seed=0x5EED):
    """Tiny fixed linear congruential generator; pinned so that candidate
    coordinate choices are identical on every platform and Python version."""
    state = seed & 0xFFFFFFFF
    while True:
        state = (1664525 * state + 1013904223) & 0xFFFFFFFF
        yield state


class _DivisorSearch:
    """Complete enumeration of the degree-d divisors of a homogeneous polynomial.

    Three-variable inputs are first moved through an invertible linear
    change of coordinates chosen so that the bottom slice in the last
    variable is a squarefree binary form; the bottom slices of any factor
    pair are then coprime, every slice-lifting step has a unique solution,
    and the search is branch-free.  When no squarefree line exists (the
    polynomial has a repeated factor, or the field is too small), the
    search falls back to enumerating the solution space of each lifting
    step, which is still complete but may branch.
    """

    def __init__(self, ctx, n):
        self.ctx = ctx
        self.n = n
        self.tested = 0
        self._memo = {}
        self._factor_memo = {}
        self._transform_memo = {}

    # ..binary forms.........................................................

    def _binary_divisors(self, P: MPoly, d: int, pair) -> list:
        """Divisors of a content-free binary form through exhaustive
        univariate factorization of its dehomogenization."""
        ctx = self.ctx
        va, vb = pair
        T = P.total_degree()
        u = [ctx.rzero] * (T + 1)
        for exps, c in P.terms.items():
            u[exps[va]] = c
        key = (tuple(u),)
        factors = self._factor_memo.get(key)
        if factors is None:
            _, factors = unipoly.factor(ctx, u)
            self._factor_memo[key] = factors
        # multisets of irreducible factors with degrees summing to d
        out = []

        def rec(idx, remaining, acc):
            if remaining == 0:
                self.tested += 1
                h = acc
                exps_template = [0] * self.n
                terms = {}
                for t, coeff in enumerate(h):
                    if coeff == ctx.rzero:
                        continue
                    e = list(exps_template)
                    e[va] = t
                    e[vb] = d - t
                    terms[tuple(e)] = coeff
                out.append(MPoly._make(self.n, ctx, terms))
                return
            if idx == len(factors):
                return
            g, mult = factors[idx]
            dg = unipoly.degree(g)
            power = acc
            for k in range(mult + 1):
                if k * dg > remaining:
                    break
                rec(idx + 1, remaining - k * dg, power)
                if k < mult:
                    power = unipoly.mul(ctx, power, g)

        rec(0, d, [ctx.rone])
        return out

    # ..linear slice lifting..................................................

    def _solve_affine(self, rows, rhs):
        """Solve M x = rhs over the field; (particular, kernel_basis) or None."""
        ctx = self.ctx
        rzero, rone = ctx.rzero, ctx.rone
        radd, rmul, rneg, rinv = ctx.radd, ctx.rmul, ctx.rneg, ctx.rinv
        m = len(rows)
        k = len(rows[0]) if m else 0
        aug = [list(row) + [r] for row, r in zip(rows, rhs)]
        pivots = []
        r = 0
        for col in range(k):
            sel = None
            for i in range(r, m):
                if aug[i][col] != rzero:
                    sel = i
                    break
            if sel is None:
                continue
            aug[r], aug[sel] = aug[sel], aug[r]
            inv = rinv(aug[r][col])
            aug[r] = [rmul(x, inv) for x in aug[r]]
            for i in range(m):
                if i != r and aug[i][col] != rzero:
                    f = rneg(aug[i][col])
                    aug[i] = [radd(x, rmul(f, y)) for x, y in zip(aug[i], aug[r])]
            pivots.append(col)
            r += 1
            if r == m:
                break
        for i in range(r, m):
            if aug[i][k] != rzero:
                return None
        particular = [rzero] * k
        for row_idx, col in enumerate(pivots):
            particular[col] = aug[row_idx][k]
        pivot_set = set(pivots)
        free_cols = [c for c in range(k) if c not in pivot_set]
        basis = []
        for fc in free_cols:
            vec = [rzero] * k
            vec[fc] = rone
            for row_idx, col in enumerate(pivots):
                vec[col] = rneg(aug[row_idx][fc])
            basis.append(vec)
        return particular, basis

    # ..squarefree change of coordinates......................................

    def _line_candidates(self, q):
        """Deterministic stream of coordinate pairs (u, w) in F^3."""
        units = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1)]
        seen = []
        for i in range(len(units)):
            for j in range(i + 1, len(units)):
                seen.append((units[i], units[j]))
        yield from seen
        stream = _lcg_stream()
        for _ in range(256):
            u = tuple(next(stream) % q for _ in range(3))
            w = tuple(next(stream) % q for _ in range(3))
            yield (u, w)

    def _restrict_to_line(self, P, active, u_raw, w_raw):
        """The binary form P(s*u + t*w) as a univariate list (index = s-exponent)."""
        ctx = self.ctx
        T = P.total_degree()
        lines = []
        for pos in range(3):
            lines.append([w_raw[pos], u_raw[pos]])  # w + u*t per active coordinate
        total = [ctx.rzero] * (T + 1)
        pow_cache = [{} for _ in range(3)]
        for exps, c in P.terms.items():
            form = [c]
            for pos, var in enumerate(active):
                e = exps[var]
                if not e:
                    continue
                cached = pow_cache[pos].get(e)
                if cached is None:
                    cached = [ctx.rone]
                    for _ in range(e):
                        cached = unipoly.mul(ctx, cached, lines[pos])
                    pow_cache[pos][e] = cached
                form = unipoly.mul(ctx, form, cached)
            for t, coeff in enumerate(form):
                if coeff != ctx.rzero:
                    total[t] = ctx.radd(total[t], coeff)
        return total

    def _linear_substitute(self, P, active, rows):
        """Substitute x_{active[i]} -> sum_j rows[i][j] * x_{active[j]}."""
        ctx = self.ctx
        n = self.n
        forms = []
        for i in range(len(active)):
            terms = {}
            for j, coeff in enumerate(rows[i]):
                if coeff != ctx.rzero:
                    e = [0] * n
                    e[active[j]] = 1
                    terms[tuple(e)] = coeff
            forms.append(MPoly._make(n, ctx, terms))
        pow_cache = [{0: MPoly.one(n, ctx)} for _ in range(len(active))]

        def power(pos, e):
            cached = pow_cache[pos].get(e)
            if cached is None:
                cached = power(pos, e - 1) * forms[pos]
                pow_cache[pos][e] = cached
            return cached

        total = MPoly.zero(n, ctx)
        for exps, c in P.terms.items():
            piece = MPoly.constant(n, ctx, c)
            for pos, var in enumerate(active):
                if exps[var]:
                    piece = piece * power(pos, exps[var])
            total = total + piece
        return total

    def _mat_inv(self, rows):
        """Inverse of a small matrix over the field, or None if singular."""
        ctx = self.ctx
        k = len(rows)
        rzero, rone = ctx.rzero, ctx.rone
        aug = [list(r) + [rone if i == j else rzero for j in range(k)] for i, r in enumerate(rows)]
        for col in range(k):
            sel = None
            for i in range(col, k):
                if aug[i][col] != rzero:
                    sel = i
                    break
            if sel is None:
                return None
            aug[col], aug[sel] = aug[sel], aug[col]
            inv = ctx.rinv(aug[col][col])
            aug[col] = [ctx.rmul(x, inv) for x in aug[col]]
            for i in range(k):
                if i != col and aug[i][col] != rzero:
                    f = ctx.rneg(aug[i][col])
                    aug[i] = [ctx.radd(x, ctx.rmul(f, y)) for x, y in zip(aug[i], aug[col])]
        return [row[k:] for row in aug]

    def _squarefree_transform(self, P: MPoly, active):
        """Find M with P∘M content-free and squarefree in the bottom slice.

        Returns (transformed polynomial, inverse substitution rows) or None
        when the deterministic candidate budget finds no suitable line.
        """
        key = ("transform", _poly_key(P))
        if key in self._transform_memo:
            return self._transform_memo[key]
        ctx = self.ctx
        T = P.total_degree()
        q = ctx.order
        result = None
        units = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
        for u_idx, w_idx in self._line_candidates(q):
            u = tuple(ctx.raw_from_index(x % q) for x in u_idx)
            w = tuple(ctx.raw_from_index(x % q) for x in w_idx)
            restricted = unipoly.normalize(ctx, self._restrict_to_line(P, active, u, w))
            if not restricted or T - unipoly.degree(restricted) > 1:
                continue
            deriv = unipoly.normalize(
                ctx,
                [ctx.rmul(ctx.rfrom_int(i), c) for i, c in enumerate(restricted)][1:],
            )
            if not deriv:
                continue
            if unipoly.degree(unipoly.gcd(ctx, restricted, deriv)) != 0:
                continue
            # complete (u, w) to an invertible matrix with a unit column
            for extra in units:
                cols = [u, w, tuple(ctx.raw_from_index(x) for x in extra)]
                rows = [[cols[j][i] for j in range(3)] for i in range(3)]
                inv = self._mat_inv(rows)
                if inv is not None:
                    break
            else:
                continue
            transformed = self._linear_substitute(P, active, rows)
            if any(transformed.mindeg(v) != 0 for v in active):
                continue
            result = (transformed, inv)
            break
        self._transform_memo[key] = result
        return result

    def _slices(self, P: MPoly, v: int):
        """Slices of P by the x_v exponent (x_v removed), and the top index."""
        slices = {}
        top = 0
        for exps, c in P.terms.items():
            j = exps[v]
            if j > top:
                top = j
            stripped = exps[:v] + (0,) + exps[v + 1 :]
            slices.setdefault(j, {})[stripped] = c
        return slices, top

    def _slice_rho(self, P: MPoly, active, top: bool) -> int:
        """Degree of the repeated part of the bottom/top slice, which bounds
        the branching of the corresponding lift (0 = branch-free)."""
        ctx = self.ctx
        v = active[-1]
        ra = [w for w in active if w != v][0]
        slices, J = self._slices(P, v)
        idx = J if top else 0
        terms = slices.get(idx)
        if not terms:
            return 10**9
        D = P.total_degree() - idx
        u = [ctx.rzero] * (D + 1)
        for exps, c in terms.items():
            u[exps[ra]] = c
        u = unipoly.normalize(ctx, u)
        other_mult = D - unipoly.degree(u)
        deriv = unipoly.normalize(
            ctx, [ctx.rmul(ctx.rfrom_int(i), c) for i, c in enumerate(u)][1:]
        )
        if not deriv:
            rho = unipoly.degree(u)
        else:
            rho = unipoly.degree(unipoly.gcd(ctx, u, deriv))
        return rho + max(0, other_mult - 1)

    def _mirrored_divisors(self, P: MPoly, d: int, active, mirrored: MPoly) -> list:
        """Divisors of P read off the exponent-mirrored polynomial.

        Reversing every exponent vector at P's own degree profile is a
        divisor-preserving bijection: P = A*Q maps to rev(P) = rev(A)*rev(Q)
        with each factor reversed at its own profile (per-variable degrees
        add under multiplication).  A degree-d divisor of P maps to a
        divisor of rev(P) of degree |profile| - d, so every feasible
        mirrored degree is scanned and candidates are filtered back
        through their own profile.
        """
        n = self.n
        profile = tuple(P.deg(i) for i in range(n))
        max_profile_sum = sum(min(d, D_i) for D_i in profile)
        out = []
        for dprime in range(0, max_profile_sum - d + 1):
            for cand in self.divisors(mirrored, dprime):
                cand_profile = tuple(cand.deg(i) for i in range(n))
                if sum(cand_profile) - dprime != d:
                    continue
                back = cand.exponent_reverse(cand_profile)
                self.tested += 1
                if exact_divide(P, back) is not None:
                    out.append(back)
        return out

    def _sliced_divisors(self, P: MPoly, d: int, active) -> list:
        """Divisors through slice lifting.

        For three active variables the lift base is chosen to be squarefree
        whenever possible: the natural bottom slice, the bottom slice of
        the exponent-mirrored polynomial, or the bottom slice after an
        invertible change of coordinates.  With a squarefree base every
        lifting step has a unique solution.  When no squarefree base
        exists (the polynomial itself has a repeated factor, or the field
        is too small), the lift branches over the solution space of each
        step.
        """
        if len(active) == 3:
            if self._slice_rho(P, active, top=False) == 0:
                return self._lift_from_slices(P, d, active)
            profile = tuple(P.deg(i) for i in range(self.n))
            mirrored = P.exponent_reverse(profile)
            if self._slice_rho(mirrored, active, top=False) == 0:
                return self._mirrored_divisors(P, d, active, mirrored)
            prep = self._squarefree_transform(P, active)
            if prep is not None:
                transformed, inv_rows = prep
                t_active = [v for v in active if transformed.deg(v) > 0]
                if len(t_active) < 3:
                    primed = self.divisors(transformed, d)
                else:
                    primed = self._lift_from_slices(transformed, d, t_active)
                out = []
                for cand in primed:
                    back = self._linear_substitute(cand, active, inv_rows)
                    self.tested += 1
                    if exact_divide(P, back) is not None:
                        out.append(back)
                return out
            # the mirror is a different surface; a squarefree line may exist
            # there even when P itself has none
            if self._squarefree_transform(mirrored, active) is not None:
                return self._mirrored_divisors(P, d, active, mirrored)
        return self._lift_from_slices(P, d, active)

    def _step_solutions(self, a_base, q_base, rhs_poly, a_deg, q_deg, rows_deg, rest):
        """All (A_step, Q_step) with A_step*q_base + Q_step*a_base = rhs_poly.

        The solution set is an affine space; its dimension is zero exactly
        when gcd(a_base, q_base) = 1, which the squarefree-base selection
        arranges.  Otherwise every point is enumerated (bounded by the
        desk-scale branch limit).
        """
        ctx = self.ctx
        n = self.n
        a_monos = _monomials_of_degree(n, a_deg, rest) if a_deg >= 0 else []
        q_monos = _monomials_of_degree(n, q_deg, rest) if q_deg >= 0 else []
        row_monos = _monomials_of_degree(n, rows_deg, rest)
        row_index = {m: i for i, m in enumerate(row_monos)}
        rows = [[ctx.rzero] * (len(a_monos) + len(q_monos)) for _ in row_monos]
        for col, mono in enumerate(a_monos):
            for exps, c in q_base.terms.items():
                target = tuple(x + y for x, y in zip(mono, exps))
                idx = row_index[target]
                rows[idx][col] = ctx.radd(rows[idx][col], c)
        off = len(a_monos)
        for col, mono in enumerate(q_monos):
            for exps, c in a_base.terms.items():
                target = tuple(x + y for x, y in zip(mono, exps))
                idx = row_index[target]
                rows[idx][off + col] = ctx.radd(rows[idx][off + col], c)
        rhs = [ctx.rzero] * len(row_monos)
        for exps, c in rhs_poly.terms.items():
            idx = row_index.get(exps)
            if idx is None:
                return []
            rhs[idx] = c
        solved = self._solve_affine(rows, rhs)
        if solved is None:
            return []
        particular, basis = solved
        q_count = ctx.order
        if basis and q_count ** len(basis) > _KERNEL_BRANCH_LIMIT:
            raise SizeError("divisor-search branch space exceeds the desk-scale limit")
        sols = []
        for combo_idx in range(q_count ** len(basis) if basis else 1):
            vec = list(particular)
            rem_idx = combo_idx
            for bvec in basis:
                lam = ctx.raw_from_index(rem_idx % q_count)
                rem_idx //= q_count
                if lam != ctx.rzero:
                    vec = [ctx.radd(x, ctx.rmul(lam, y)) for x, y in zip(vec, bvec)]
            a_terms = {m: val for m, val in zip(a_monos, vec[:off]) if val != ctx.rzero}
            q_terms = {m: val for m, val in zip(q_monos, vec[off:]) if val != ctx.rzero}
            sols.append((MPoly._make(n, ctx, a_terms), MPoly._make(n, ctx, q_terms)))
        return sols

    def _lift_from_slices(self, P: MPoly, d: int, active) -> list:
        """Recover divisors slice by slice, anchored at the x_v^0 slice.

        The candidate's bottom slice runs over the degree-d divisors of
        P's bottom slice; each higher slice then satisfies a linear system
        whose solution is unique when the bottom split is coprime.  Past
        the divisor's slice range only cofactor slices remain unknown, so
        those steps never branch and every surviving path certifies the
        full product slice by slice; a final exact division guards the
        assembled candidate anyway, since divisors are rare and the check
        is cheap.
        """
        ctx = self.ctx
        n = self.n
        v = active[-1]
        rest = [w for w in active if w != v]
        T = P.total_degree()
        e_deg = T - d
        total_steps = d + e_deg
        slices, _ = self._slices(P, v)
        base_slice = MPoly._make(n, ctx, dict(slices.get(0, {})))
        if base_slice.is_zero():
            return []
        out = []
        for a_base in self.divisors(base_slice, d):
            q_base = exact_divide(base_slice, a_base)
            if q_base is None:
                continue
            stack = [({0: a_base}, {0: q_base}, 1)]
            while stack:
                a_sl, q_sl, r = stack.pop()
                if r == d + 1:
                    self.tested += 1
                if r > total_steps:
                    cand_terms = {}
                    for off, poly in a_sl.items():
                        for exps, c in poly.terms.items():
                            e = list(exps)
                            e[v] = off
                            cand_terms[tuple(e)] = c
                    cand = MPoly._make(n, ctx, cand_terms)
                    if exact_divide(P, cand) is not None:
                        out.append(cand)
                    continue
                rhs_poly = MPoly._make(n, ctx, dict(slices.get(r, {})))
                for t in range(1, r):
                    ak = a_sl.get(t)
                    ql = q_sl.get(r - t)
                    if ak is not None and ql is not None and not ak.is_zero() and not ql.is_zero():
                        rhs_poly = rhs_poly - ak * ql
                for a_step, q_step in self._step_solutions(
                    a_base, q_base, rhs_poly, d - r, e_deg - r, T - r, rest
                ):
                    na = dict(a_sl)
                    nq = dict(q_sl)
                    na[r] = a_step
                    nq[r] = q_step
                    stack.append((na, nq, r + 1))
        return out

    # ..general case...........................................................

    def divisors(self, P: MPoly, d: int) -> list:
        """All divisors of homogeneous P with total degree exactly d,
        graded-lex monic, sorted by coefficient vector; complete up to scalars."""
        if d == 0:
            return [MPoly.one(self.n, self.ctx)]
        if P.is_zero() or d > P.total_degree():
            return []
        key = (_poly_key(P), d)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        ctx = self.ctx
        n = self.n
        gamma = P.content_monomial()
        found = []
        if any(gamma):
            core = P.shift_exponents(tuple(-g for g in gamma))
            budget = min(d, sum(gamma))

            def boxes(idx, remaining, acc):
                if idx == n:
                    yield tuple(acc)
                    return
                for k in range(min(gamma[idx], remaining) + 1):
                    acc.append(k)
                    yield from boxes(idx + 1, remaining - k, acc)
                    acc.pop()

            for delta in boxes(0, budget, []):
                rem = d - sum(delta)
                if rem < 0:
                    continue
                for e_poly in self.divisors(core, rem):
                    found.append(e_poly.shift_exponents(delta))
        else:
            active = [i for i in range(n) if P.deg(i) > 0]
            if len(active) < 2:
                # a content-free homogeneous polynomial in < 2 variables is a
                # constant, already handled by the d == 0 case
                found = []
            elif len(active) == 2:
                found = self._binary_divisors(P, d, (active[0], active[1]))
            else:
                found = self._sliced_divisors(P, d, active)
        normalized = {}
        for cand in found:
            cand = _grlex_monic(cand)
            normalized[_poly_key(cand)] = cand
        result = sorted(normalized.values(), key=candidate_sort_key)
        self._memo[key] = result
        return result


def _raw_candidates(P: MPoly, d: int):
    """The literal candidate scan: all monic, non-monomial coefficient
    vectors of degree d, ascending lexicographic, most significant first."""
    ctx = P.ctx
    monos = _monomials_of_degree(P.n, d, range(P.n))
    M = len(monos)
    q = ctx.order
    rone = ctx.rone
    for counter in range(q**M):
        vec = []
        rem = counter
        for _ in range(M):
            vec.append(rem % q)
            rem //= q
        vec.reverse()  # vec[i] is the digit for monos[i], most significant first
        nz = [i for i, x in enumerate(vec) if x]
        if len(nz) < 2:
            continue  # zero or monomial
        if vec[nz[-1]] != 1:
            continue  # not monic in the graded-lex leading coefficient
        terms = {monos[i]: ctx.raw_from_index(vec[i]) for i in nz}
        if terms[monos[nz[-1]]] != rone:
            continue
        yield MPoly._make(P.n, ctx, terms)


def brute_force_verdict(P: MPoly, degree_cap: int | None = None, method: str = "lift") -> Verdict:
    """Exhaustive reducibility decision for a homogeneous polynomial.

    Scans candidate factor degrees ascending; within a degree the witness
    reported is the first in the pinned enumeration order (coefficient
    vectors ascending lexicographically over the field-element order).
    ``irreducible`` is only returned once every degree up to floor(T/2)
    has been exhausted; a degree_cap that truncates the range yields
    ``inconclusive`` instead.
    """
    if method not in ("lift", "enumerate"):
        raise BadParameter(f"unknown search method {method!r}")
    if P.is_zero():
        raise BadParameter("verdict of the zero polynomial")
    if not P.ctx.is_finite():
        raise BadParameter("the oracle requires a finite coefficient field")
    if not P.is_homogeneous():
        raise BadParameter("the oracle requires a homogeneous polynomial")
    for i in range(P.n):
        assert P.mindeg(i) == 0, "input must have no monomial factor"
    T = P.total_degree()
    full_range = T // 2
    dmax = full_range if degree_cap is None else min(degree_cap, full_range)
    search = _DivisorSearch(P.ctx, P.n)
    tested = 0
    for d in range(1, dmax + 1):
        if method == "lift":
            divisors = search.divisors(P, d)
            tested = search.tested
            if divisors:
                factor = divisors[0]
                return Verdict(REDUCIBLE, (factor, exact_divide(P, factor)), d, tested)
        else:
            for cand in _raw_candidates(P, d):
                tested += 1
                quotient = exact_divide(P, cand)
                if quotient is not None:
                    return Verdict(REDUCIBLE, (cand, quotient), d, tested)
    kind = IRREDUCIBLE if dmax == full_range else INCONCLUSIVE
    return Verdict(kind, None, dmax, tested)


# -- reducibility witnesses ---------------------------------------------------


def gcd_reducibility_witness(c, ctx) -> MPoly:
    """With g = gcd(c) > 1 and c_0 = 0, the product of C_g over all
    variable pairs divides S_c; built explicitly and verified in place."""
    c = as_sequence(c)
    if c[0] != 0:
        raise BadParameter(f"requires c_0 = 0, got {c}")
    g = reduce(gcd, c.c, 0)
    if g <= 1:
        raise BadParameter(f"gcd(c) = {g}, no gcd witness exists")
    n = len(c)
    witness = MPoly.one(n, ctx)
    for i in range(n):
        for j in range(i + 1, n):
            witness = witness * ck_biv(g, ctx, n, (j, i))
    quotient = exact_divide(schur_poly(c, ctx), witness)
    assert quotient is not None, "gcd witness failed to divide"
    return witness


def shifted_reducibility_witness(c, ctx) -> MPoly:
    """With c_0 > 0, the monomial (x_0 ... x_{n-1})^{c_0} divides S_c."""
    c = as_sequence(c)
    if c[0] == 0:
        raise BadParameter(f"requires c_0 > 0, got {c}")
    n = len(c)
    witness = MPoly.monomial(n, ctx, (c[0],) * n)
    quotient = exact_divide(schur_poly(c, ctx), witness)
    assert quotient is not None, "monomial witness failed to divide"
    return witness


# -- one-sided certificate -----------------------------------------------------


def specialization_certificate(P: MPoly, seed: int) -> SpecializationResult:
    """One-sided irreducibility certificate through a random plane section.

    Substitutes x_i -> a_i*x0 + b_i*x1 for i >= 2; when the image keeps
    the total degree and is irreducible as a bivariate form (decided by
    the exhaustive univariate machinery), the input is certified
    irreducible.  A reducible or degenerate image proves nothing, so the
    other outcome is always "unknown", never a reducibility claim.
    """
    if P.is_zero() or not P.ctx.is_finite():
        raise BadParameter("certificate requires a nonzero polynomial over a finite field")
    if not P.is_homogeneous():
        raise BadParameter("certificate requires a homogeneous polynomial")
    if P.n < 3:
        raise BadParameter("certificate applies to three or more variables")
    ctx = P.ctx
    T = P.total_degree()
    rng = random.Random(seed)
    q = ctx.order
    for attempt in range(1, _CERT_ATTEMPTS + 1):
        subs = []
        for _ in range(P.n - 2):
            subs.append(
                (ctx.raw_from_index(rng.randrange(q)), ctx.raw_from_index(rng.randrange(q)))
            )
        image = [ctx.rzero] * (T + 1)  # binary form, index = x0-exponent
        for exps, coeff in P.terms.items():
            form = [coeff]
            shift = exps[0]  # direct x0 power
            low = exps[1]  # direct x1 power
            for i in range(2, P.n):
                e = exps[i]
                if e:
                    lin = [subs[i - 2][1], subs[i - 2][0]]  # b + a*t
                    for _ in range(e):
                        form = unipoly.mul(ctx, form, lin)
            for t, c in enumerate(form):
                if c != ctx.rzero:
                    image[t + shift] = ctx.radd(image[t + shift], c)
        u = unipoly.normalize(ctx, image)
        if not u:
            continue  # degree collapsed, retry
        if u[0] == ctx.rzero or unipoly.degree(u) != T:
            continue  # monomial content in the image, no conclusion
        if T == 1 or unipoly.is_irreducible_by_trial(ctx, u):
            return SpecializationResult("certified", attempt)
    return SpecializationResult("unknown", _CERT_ATTEMPTS)


# -- survey -------------------------------------------------------------------


def _survey_one(args):
    a, b, p, degree_cap = args
    c = ExponentSequence((0, a, b))
    ctx = make_prime_field(p)
    start = perf_counter()
    check = theorem_conditions(c, p)
    S = schur_poly(c, ctx)
    verdict = brute_force_verdict(S, degree_cap)
    elapsed_ms = int((perf_counter() - start) * 1000)
    consistent = not (
        (check.applies and verdict.kind == REDUCIBLE)
        or (not check.only_if_holds and verdict.kind == IRREDUCIBLE)
    )
    return SurveyRecord(
        c=c,
        p=p,
        total_degree=S.total_degree(),
        check=check,
        verdict=verdict,
        consistent=consistent,
        elapsed_ms=elapsed_ms,
    )


def survey(a_max: int, primes, degree_cap: int | None = None, workers: int = 1) -> list:
    """Judge every (0, a, b) with 1 < a < b-1 <= a_max-1 over each prime.

    Records come back ordered by (a, b, p) regardless of worker count;
    each instance is computed independently, so the parallel split cannot
    change any verdict or witness.
    """
    if not 4 <= a_max <= SURVEY_MAX_B:
        raise SizeError(f"a_max must lie in 4..{SURVEY_MAX_B}, got {a_max}")
    primes = sorted(set(primes))
    for p in primes:
        if p > SURVEY_MAX_PRIME:
            raise SizeError(f"survey primes are capped at {SURVEY_MAX_PRIME}, got {p}")
        make_prime_field(p)  # validates primality
    jobs = [
        (a, b, p, degree_cap)
        for a in range(2, a_max - 1)
        for b in range(a + 2, a_max + 1)
        for p in primes
    ]
    if workers > 1:
        import multiprocessing as mp

        with mp.get_context("fork").Pool(workers) as pool:
            return pool.map(_survey_one, jobs, chunksize=1)
    return [_survey_one(job) for job in jobs]


SURVEY_CSV_HEADER = "a,b,p,total_degree,theorem_applies,verdict,witness,candidates_tested,elapsed_ms"


def survey_to_csv(records, timings: bool = False) -> str:
    """Render survey records as CSV.

    Timings default to 0 so that identical configurations produce
    byte-identical files across runs and worker counts; pass timings=True
    for wall-clock values when reproducibility is not needed.
    """
    lines = [SURVEY_CSV_HEADER]
    for rec in records:
        witness = rec.verdict.witness[0].to_str() if rec.verdict.witness else ""
        lines.append(
            ",".join(
                [
                    str(rec.c[1]),
                    str(rec.c[2]),
                    str(rec.p),
                    str(rec.total_degree),
                    "true" if rec.theorem_applies else "false",
                    rec.verdict.kind,
                    witness,
                    str(rec.verdict.candidates_tested),
                    str(rec.elapsed_ms if timings else 0),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def survey_to_json(records, config: dict, version: str, timings: bool = False) -> dict:
    applicable = sum(1 for r in records if r.theorem_applies)
    inconsistent = sum(1 for r in records if not r.consistent)
    return {
        "version": version,
        "command": "survey",
        "config": config,
        "records": [
            {
                "c": list(r.c),
                "a": r.c[1],
                "b": r.c[2],
                "p": r.p,
                "total_degree": r.total_degree,
                "theorem": r.check.to_json(),
                "verdict": r.verdict.to_json(),
                "consistent": r.consistent,
                "elapsed_ms": r.elapsed_ms if timings else 0,
            }
            for r in records
        ],
        "summary": {
            "instances": len(records),
            "theorem_applicable": applicable,
            "inconsistencies": inconsistent,
        },
    }


def survey_summary_line(records) -> str:
    applicable = sum(1 for r in records if r.theorem_applies)
    inconsistent = sum(1 for r in records if not r.consistent)
    return f"{len(records)} instances, {applicable} theorem-applicable, {inconsistent} inconsistencies"

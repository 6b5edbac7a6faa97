"""Machine verification of the structural identities.

Every verifier builds both sides of an identity from scratch and compares
exactly; a failed comparison produces a FactReport carrying the offending
polynomials in canonical text, so the event is reproducible from the
report alone.  The expansion verifier mirrors the two-case split of the
underlying argument: a closed-form path when a <= b-a and a reversal path
through the reflected sequence when a > b-a, with the end-coefficient
associate checks exercised on both paths.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import unipoly
from .errors import BadParameter, CaseError, SizeError, ZeroPolynomial
from .fields import make_extension_field, make_prime_field
from .mpoly import MPoly, exact_divide, monomial_associate
from .schur import ExponentSequence, as_sequence, ck_biv, schur_poly

MAX_ROOT_FIELD = 2**20


@dataclass
class ExpansionTable:
    """Coefficients of S with respect to one variable.

    coeffs[t] is the coefficient of x_var^(mindeg + t), with the expanded
    variable removed from each coefficient (its exponent set to 0); the
    first and last entries are nonzero by construction.
    """

    var: int
    mindeg: int
    coeffs: list
    c: ExponentSequence | None = None

    @property
    def width(self) -> int:
        return len(self.coeffs) - 1

    def reconstruct(self) -> MPoly:
        n = self.coeffs[0].n
        ctx = self.coeffs[0].ctx
        total = MPoly.zero(n, ctx)
        for t, coeff in enumerate(self.coeffs):
            exps = [0] * n
            exps[self.var] = self.mindeg + t
            total = total + coeff * MPoly.monomial(n, ctx, exps)
        return total


@dataclass
class ClosedFormTerm:
    """Shape data of one expansion coefficient P_d = C_l * C_gap * y^i0 * z^s."""

    d: int
    l: int
    gap: int
    i0: int
    j0: int
    D: int
    mono_shift: tuple


@dataclass
class FactReport:
    fact: str
    params: dict
    status: str = "pass"
    witness: dict | None = None
    checks: int = 0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def fail(self, **witness):
        if self.status == "pass":
            self.status = "fail"
            self.witness = witness

    def to_json(self) -> dict:
        out = {"fact": self.fact, "params": self.params, "status": self.status, "checks": self.checks}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def expand_in_var(S: MPoly, i: int) -> ExpansionTable:
    """Group the terms of S by their x_i-degree."""
    if S.is_zero():
        raise ZeroPolynomial("cannot expand the zero polynomial")
    lo = S.mindeg(i)
    hi = S.deg(i)
    buckets = {t: {} for t in range(lo, hi + 1)}
    for exps, coeff in S.terms.items():
        stripped = exps[:i] + (0,) + exps[i + 1 :]
        buckets[exps[i]][stripped] = coeff
    coeffs = [MPoly._make(S.n, S.ctx, buckets[t]) for t in range(lo, hi + 1)]
    return ExpansionTable(var=i, mindeg=lo, coeffs=coeffs)


def closed_form_terms(a: int, b: int):
    """Per-coefficient run data for the expansion of S_(0,a,b), case a <= b-a.

    For each d the two index runs share a common length l; the run starts
    are i0 = max(0, D-d-b+1) and j0 = max(a, D-d-a+1) with D = a+b-2.
    """
    if not 1 < a:
        raise BadParameter(f"need a > 1, got a={a}")
    if a > b - a:
        raise CaseError(f"closed form requires a <= b-a; use the reversal path for (a,b)=({a},{b})")
    D = a + b - 2
    out = []
    for d in range(b - 1):
        i0 = max(0, D - d - b + 1)
        i1 = min(a - 1, D - d - a)
        j0 = max(a, D - d - a + 1)
        j1 = min(b - 1, D - d)
        l = i1 - i0 + 1
        assert l == j1 - j0 + 1, "index runs of unequal length"
        out.append(
            ClosedFormTerm(
                d=d,
                l=l,
                gap=j0 - i0,
                i0=i0,
                j0=j0,
                D=D,
                mono_shift=(i0, D - d - j0 - l + 1),
            )
        )
    return out


def _closed_form_poly(term: ClosedFormTerm, ctx, yz) -> MPoly:
    y, z = yz
    body = ck_biv(term.l, ctx, 3, (y, z)) * ck_biv(term.gap, ctx, 3, (y, z))
    exps = [0, 0, 0]
    exps[y] = term.mono_shift[0]
    exps[z] = term.mono_shift[1]
    return body * MPoly.monomial(3, ctx, exps)


def verify_expansion_fact(a: int, b: int, ctx, _tamper=None) -> FactReport:
    """Check the full coefficient structure of S_(0,a,b) in every variable.

    Verified per variable choice: the expansion range, the associate form
    of the two end coefficients, the divisibility bands, and either the
    closed form of every coefficient (a <= b-a) or the exponent-reversal
    relation against the reflected sequence (a > b-a).

    The _tamper hook is for harness self-tests only: it lets the caller
    corrupt S before verification to confirm that failures are caught.
    """
    if not (1 < a < b - 1):
        raise BadParameter(f"need 1 < a < b-1, got (a,b)=({a},{b})")
    report = FactReport(fact="expansion-closed-form", params={"a": a, "b": b, "field": ctx.describe()})
    c = ExponentSequence((0, a, b))
    S = schur_poly(c, ctx)
    if _tamper is not None:
        S = _tamper(S)
    reversal = a > b - a
    cbar_table = None
    if reversal:
        Sbar = schur_poly(c.reflected(), ctx)
    for x in range(3):
        y, z = [v for v in range(3) if v != x]
        table = expand_in_var(S, x)
        table.c = c
        coeffs = table.coeffs
        report.checks += 1
        if table.mindeg != 0 or len(coeffs) != b - 1:
            report.fail(check="expansion-range", var=x, mindeg=table.mindeg, count=len(coeffs))
            continue
        if table.reconstruct() != S:
            report.fail(check="reconstruction", var=x, poly=S.to_str())
            continue
        ca = ck_biv(a, ctx, 3, (y, z))
        cba = ck_biv(b - a, ctx, 3, (y, z))
        if monomial_associate(coeffs[0], cba) is None:
            report.fail(check="P0-associate", var=x, p0=coeffs[0].to_str(), ck=cba.to_str())
        if monomial_associate(coeffs[b - 2], ca) is None:
            report.fail(check="Ptop-associate", var=x, ptop=coeffs[b - 2].to_str(), ck=ca.to_str())
        for i in range(a):
            report.checks += 1
            if exact_divide(coeffs[i], cba) is None:
                report.fail(check="low-band-divisibility", var=x, i=i, pi=coeffs[i].to_str(), ck=cba.to_str())
        for i in range(a - 1, b - 1):
            report.checks += 1
            if exact_divide(coeffs[i], ca) is None:
                report.fail(check="high-band-divisibility", var=x, i=i, pi=coeffs[i].to_str(), ck=ca.to_str())
        if not reversal:
            for term in closed_form_terms(a, b):
                report.checks += 1
                expected = _closed_form_poly(term, ctx, (y, z))
                if coeffs[term.d] != expected:
                    report.fail(
                        check="closed-form",
                        var=x,
                        d=term.d,
                        actual=coeffs[term.d].to_str(),
                        expected=expected.to_str(),
                    )
        else:
            bar_table = expand_in_var(Sbar, x)
            bounds = [0, 0, 0]
            bounds[y] = b - 2
            bounds[z] = b - 2
            if bar_table.mindeg != 0 or len(bar_table.coeffs) != b - 1:
                report.fail(check="reflected-range", var=x)
                continue
            for i in range(b - 1):
                report.checks += 1
                mirrored = bar_table.coeffs[b - 2 - i].exponent_reverse(tuple(bounds))
                if coeffs[i] != mirrored:
                    report.fail(
                        check="reversal",
                        var=x,
                        i=i,
                        actual=coeffs[i].to_str(),
                        expected=mirrored.to_str(),
                    )
    return report


def ck_squarefree(k: int, p: int) -> bool:
    """True iff gcd(x^k - 1, k*x^(k-1)) = 1 over GF(p), i.e. iff p does not divide k."""
    if k < 1:
        raise BadParameter(f"need k >= 1, got {k}")
    base = make_prime_field(p)
    f = [base.rfrom_int(-1)] + [0] * (k - 1) + [base.rone]
    deriv = unipoly.normalize(base, [0] * (k - 1) + [base.rfrom_int(k)])
    if not deriv:
        return False
    g = unipoly.gcd(base, f, deriv)
    return unipoly.degree(g) == 0


def multiplicative_order(p: int, k: int) -> int:
    """Least m >= 1 with p^m = 1 mod k (requires gcd(p, k) = 1)."""
    if k == 1:
        return 1
    acc = p % k
    m = 1
    while acc != 1:
        acc = (acc * p) % k
        m += 1
        if m > k:
            raise BadParameter(f"no multiplicative order: gcd({p},{k}) != 1")
    return m


def roots_of_ck(k: int, p: int):
    """All roots of 1 + x + ... + x^(k-1) in the smallest field GF(p^m) containing them.

    m is the multiplicative order of p mod k, so x^k - 1 splits over
    GF(p^m); the roots are found by exhaustive evaluation over the whole
    field, in element-enumeration order.
    """
    if k < 1:
        raise BadParameter(f"need k >= 1, got {k}")
    if k % p == 0:
        raise BadParameter(f"requires p not dividing k, got p={p}, k={k}")
    m = multiplicative_order(p, k)
    if p**m > MAX_ROOT_FIELD:
        raise SizeError(f"splitting field GF({p}^{m}) exceeds the 2^20 bound")
    ctx = make_extension_field(p, m)
    roots = []
    radd, rmul = ctx.radd, ctx.rmul
    one = ctx.rone
    for i in range(ctx.order):
        x = ctx.raw_from_index(i)
        acc = ctx.rzero
        for _ in range(k):
            acc = radd(rmul(acc, x), one)
        if acc == ctx.rzero:
            roots.append(ctx.element(x))
    return roots


def verify_ck_root_fact(k: int, p: int) -> FactReport:
    """Root count and root properties of C_k over the splitting field."""
    report = FactReport(fact="ck-roots", params={"k": k, "p": p})
    if k % p == 0:
        report.checks += 1
        if ck_squarefree(k, p):
            report.fail(check="squarefree-boundary", k=k, p=p)
        return report
    roots = roots_of_ck(k, p)
    report.checks += 1
    if len(roots) != k - 1:
        report.fail(check="root-count", expected=k - 1, actual=len(roots))
        return report
    if len({str(r) for r in roots}) != k - 1:
        report.fail(check="root-distinctness")
        return report
    ctx = roots[0].ctx if roots else None
    for r in roots:
        report.checks += 1
        if r**k != ctx.one or r == ctx.one:
            report.fail(check="root-of-unity", root=str(r))
            return report
    report.checks += 1
    if not ck_squarefree(k, p):
        report.fail(check="squarefree")
    return report


def verify_minmax_fact(c, ctx, _tamper=None) -> FactReport:
    """Exact min/max-part structure of S_c, plus the commutation corollaries.

    The extremal part in each variable is compared against the Schur
    polynomial of the removed-and-shifted sequence, embedded back into n
    variables and multiplied by the exact monomial factor (the complement
    variables to the power c_1 - 1 on the min side, x_i to the power
    c_{n-1} - n + 1 on the max side).
    """
    c = as_sequence(c)
    n = len(c)
    if c[0] != 0:
        raise BadParameter(f"requires c_0 = 0, got {c}")
    if n < 2:
        raise BadParameter("requires at least two variables")
    report = FactReport(fact="minmax-parts", params={"c": list(c), "field": ctx.describe()})
    S = schur_poly(c, ctx)
    if _tamper is not None:
        S = _tamper(S)
    c1 = c[1]
    min_seq = ExponentSequence(c.remove({0}).shifted(c1))
    max_seq = c.remove({n - 1})
    S_min = schur_poly(min_seq, ctx)
    S_max = schur_poly(max_seq, ctx)
    top_power = c[n - 1] - (n - 1)
    for i in range(n):
        exps = [c1 - 1] * n
        exps[i] = 0
        expected_min = S_min.insert_variable(i) * MPoly.monomial(n, ctx, exps)
        report.checks += 1
        if S.min_part(i) != expected_min:
            report.fail(check="min-part", var=i, actual=S.min_part(i).to_str(), expected=expected_min.to_str())
        exps = [0] * n
        exps[i] = top_power
        expected_max = S_max.insert_variable(i) * MPoly.monomial(n, ctx, exps)
        report.checks += 1
        if S.max_part(i) != expected_max:
            report.fail(check="max-part", var=i, actual=S.max_part(i).to_str(), expected=expected_max.to_str())
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            report.checks += 1
            both_orders = S.max_part(j).min_part(i)
            if both_orders != S.min_part(i).max_part(j):
                report.fail(check="minmax-commutation", i=i, j=j)
            report.checks += 1
            if S.max_part(j).mindeg(i) != S.mindeg(i):
                report.fail(check="mindeg-of-max", i=i, j=j)
            report.checks += 1
            if S.min_part(j).deg(i) != S.deg(i):
                report.fail(check="deg-of-min", i=i, j=j)
    return report


def expansion_annotations(a: int, b: int, ctx):
    """Per-coefficient associate/divisibility flags for the CLI expand view."""
    if not (1 < a < b - 1):
        raise BadParameter(f"need 1 < a < b-1, got (a,b)=({a},{b})")
    S = schur_poly(ExponentSequence((0, a, b)), ctx)
    table = expand_in_var(S, 0)
    ca = ck_biv(a, ctx, 3, (1, 2))
    cba = ck_biv(b - a, ctx, 3, (1, 2))
    rows = []
    for i, coeff in enumerate(table.coeffs):
        rows.append(
            {
                "i": i,
                "poly": coeff.to_str(),
                "assoc_C_a": monomial_associate(coeff, ca) is not None,
                "assoc_C_b_a": monomial_associate(coeff, cba) is not None,
                "div_C_a": exact_divide(coeff, ca) is not None,
                "div_C_b_a": exact_divide(coeff, cba) is not None,
            }
        )
    return rows

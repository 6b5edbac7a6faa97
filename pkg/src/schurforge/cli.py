"""Batch command-line front end.

Five subcommands: show, expand, verify-facts, irred, survey.  Exit codes
are part of the contract: 0 = success or consistent outcome, 1 = a
verified inconsistency or failed fact, 2 = usage or configuration error.
Output is deterministic for a fixed configuration, so runs can be diffed
byte for byte in CI.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .errors import SchurforgeError, SizeError
from .fields import make_extension_field, make_prime_field, make_rationals
from .irred import (
    brute_force_verdict,
    specialization_certificate,
    survey,
    survey_summary_line,
    survey_to_csv,
    survey_to_json,
    theorem_conditions,
)
from .schur import ExponentSequence, schur_poly, vandermonde
from .structure import (
    expansion_annotations,
    verify_ck_root_fact,
    verify_expansion_fact,
    verify_minmax_fact,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def parse_field(spec: str):
    """Field spec grammar: 'Q' for the rationals, 'p' or 'p:m' for GF(p^m)."""
    spec = spec.strip()
    if spec == "Q":
        return make_rationals()
    if ":" in spec:
        p_text, m_text = spec.split(":", 1)
        return make_extension_field(int(p_text), int(m_text))
    return make_prime_field(int(spec))


def _parse_primes(text: str):
    return [int(part) for part in text.split(",") if part.strip()]


def _emit(text: str, path):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _report_envelope(command: str, config: dict) -> dict:
    return {"version": __version__, "command": command, "config": config}


def cmd_show(args) -> int:
    ctx = parse_field(args.field)
    c = ExponentSequence.parse(args.c)
    S = schur_poly(c, ctx)
    V = vandermonde(c, ctx)
    doc = _report_envelope("show", {"c": list(c), "field": ctx.describe()})
    doc["result"] = {
        "schur": S.to_str(),
        "vandermonde": V.to_str(),
        "total_degree": S.total_degree() if not S.is_zero() else 0,
        "partition": list(c.partition()),
        "gaps": list(c.gaps()),
    }
    if args.format == "json":
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.output)
    else:
        r = doc["result"]
        lines = [
            f"c = {c}",
            f"gaps = {r['gaps']}",
            f"partition = {r['partition']}",
            f"total degree = {r['total_degree']}",
            f"S_c = {r['schur']}",
            f"V_c = {r['vandermonde']}",
        ]
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_expand(args) -> int:
    ctx = parse_field(args.field)
    c = ExponentSequence.parse(args.c)
    if len(c) != 3 or c[0] != 0:
        print("expand requires a three-term sequence starting at 0", file=sys.stderr)
        return EXIT_USAGE
    a, b = c[1], c[2]
    if not (1 < a < b - 1):
        print("expand requires 1 < a < b-1", file=sys.stderr)
        return EXIT_USAGE
    rows = expansion_annotations(a, b, ctx)
    doc = _report_envelope("expand", {"c": list(c), "field": ctx.describe()})
    doc["result"] = {"a": a, "b_minus_a": b - a, "rows": rows}
    if args.format == "json":
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.output)
    else:
        lines = [f"expansion of S_({c}) in x0; flags against C_{a} and C_{b - a}"]
        for row in rows:
            flags = " ".join(
                f"{name}={'1' if row[name] else '0'}"
                for name in ("assoc_C_a", "assoc_C_b_a", "div_C_a", "div_C_b_a")
            )
            lines.append(f"P_{row['i']}: {row['poly']}   [{flags}]")
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _tamper_flip(poly):
    # flip one coefficient: harness self-test for the fact verifiers
    exps = poly.leading_monomial()
    bumped = dict(poly.terms)
    bumped[exps] = poly.ctx.radd(bumped[exps], poly.ctx.rone)
    from .mpoly import MPoly

    return MPoly(poly.n, poly.ctx, bumped)


def cmd_verify_facts(args) -> int:
    primes = _parse_primes(args.primes)
    contexts = [make_prime_field(p) for p in primes]
    if args.rationals:
        contexts.append(make_rationals())
    reports = []
    tamper = _tamper_flip if args.inject_mutation else None
    first = True
    for b in range(4, args.bmax + 1):
        for a in range(2, b - 1):
            for ctx in contexts:
                reports.append(verify_expansion_fact(a, b, ctx, _tamper=tamper if first else None))
                first = False
    for k in range(1, args.kmax + 1):
        for p in primes:
            reports.append(verify_ck_root_fact(k, p))
    for n in range(3, args.minmax_nmax + 1):
        for c in _increasing_sequences(n, args.minmax_cmax):
            for ctx in contexts:
                reports.append(verify_minmax_fact(c, ctx))
    failed = [r for r in reports if not r.passed]
    doc = _report_envelope(
        "verify-facts",
        {
            "bmax": args.bmax,
            "primes": primes,
            "rationals": args.rationals,
            "kmax": args.kmax,
            "minmax_nmax": args.minmax_nmax,
            "minmax_cmax": args.minmax_cmax,
            "inject_mutation": args.inject_mutation,
        },
    )
    doc["result"] = {"reports": [r.to_json() for r in reports], "failed": len(failed)}
    if args.format == "json":
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.output)
    else:
        _emit(json.dumps(doc["result"]["reports"], indent=2, sort_keys=True) + "\n", args.output)
    print(f"{len(reports)} fact checks, {len(failed)} failed")
    if failed:
        w = failed[0]
        print(f"first failure: {w.fact} {w.params} {w.witness}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def _increasing_sequences(n, cmax):
    from itertools import combinations

    for tail in combinations(range(1, cmax + 1), n - 1):
        yield ExponentSequence((0,) + tail)


def cmd_irred(args) -> int:
    ctx = parse_field(args.field)
    if not ctx.is_finite():
        print("irred requires a finite field", file=sys.stderr)
        return EXIT_USAGE
    c = ExponentSequence.parse(args.c)
    check = theorem_conditions(c, ctx.p)
    S = schur_poly(c, ctx)
    verdict = brute_force_verdict(S, args.cap)
    contradiction = (check.applies and verdict.kind == "reducible") or (
        not check.only_if_holds and verdict.kind == "irreducible"
    )
    doc = _report_envelope(
        "irred", {"c": list(c), "field": ctx.describe(), "cap": args.cap, "seed": args.seed}
    )
    doc["result"] = {
        "theorem": check.to_json(),
        "verdict": verdict.to_json(),
        "consistent": not contradiction,
    }
    if args.certify:
        cert = specialization_certificate(S, args.seed)
        doc["result"]["certificate"] = {"status": cert.status, "attempts": cert.attempts}
    if args.format == "json":
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.output)
    else:
        lines = [
            f"c = {c} over {ctx!r}",
            f"hypotheses apply: {check.applies} (failures: {', '.join(check.failures) or 'none'})",
            f"necessary condition holds: {check.only_if_holds}",
            f"oracle verdict: {verdict.kind} "
            f"(searched degree <= {verdict.searched_degree}, {verdict.candidates_tested} candidates)",
        ]
        if verdict.witness is not None:
            lines.append(f"witness factor: {verdict.witness[0].to_str()}")
            lines.append(f"cofactor: {verdict.witness[1].to_str()}")
        if args.certify:
            cert = doc["result"]["certificate"]
            lines.append(f"specialization certificate: {cert['status']} ({cert['attempts']} attempts)")
        lines.append("consistent" if not contradiction else "CONTRADICTION")
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_FAIL if contradiction else EXIT_OK


def cmd_survey(args) -> int:
    primes = _parse_primes(args.primes)
    records = survey(args.amax, primes, degree_cap=args.cap, workers=args.workers)
    config = {
        "amax": args.amax,
        "primes": sorted(set(primes)),
        "cap": args.cap,
        "workers": args.workers,
    }
    try:
        if args.format == "json":
            doc = survey_to_json(records, config, __version__, timings=args.timings)
            _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.output)
        else:
            _emit(survey_to_csv(records, timings=args.timings), args.output)
    except OSError as exc:
        print(f"cannot write output: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(survey_summary_line(records))
    inconsistent = sum(1 for r in records if not r.consistent)
    return EXIT_FAIL if inconsistent else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schurforge",
        description="Exact Schur polynomials, structure checks, and the irreducibility oracle",
    )
    parser.add_argument("--version", action="version", version=f"schurforge {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    default_workers = int(os.environ.get("SCHURFORGE_WORKERS", "1"))

    def common(p, needs_c=True):
        if needs_c:
            p.add_argument("-c", required=True, help="exponent sequence, e.g. 0,2,5")
            p.add_argument("-f", "--field", required=True, help="field spec: p, p:m, or Q")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("-o", "--output", default=None, help="write the report to this path")

    p_show = sub.add_parser("show", help="print S_c, V_c and derived data")
    common(p_show)
    p_show.set_defaults(func=cmd_show)

    p_expand = sub.add_parser("expand", help="coefficient table of S_(0,a,b) with factor flags")
    common(p_expand)
    p_expand.set_defaults(func=cmd_expand)

    p_verify = sub.add_parser("verify-facts", help="run the identity verifier grid")
    p_verify.add_argument("--bmax", type=int, default=12)
    p_verify.add_argument("--primes", default="2,3,5,7,11")
    p_verify.add_argument("--no-rationals", dest="rationals", action="store_false")
    p_verify.add_argument("--kmax", type=int, default=10)
    p_verify.add_argument("--minmax-nmax", type=int, default=4)
    p_verify.add_argument("--minmax-cmax", type=int, default=8)
    p_verify.add_argument(
        "--inject-mutation",
        action="store_true",
        help="self-test: corrupt one coefficient and expect a failure",
    )
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument("-o", "--output", default=None)
    p_verify.set_defaults(func=cmd_verify_facts)

    p_irred = sub.add_parser("irred", help="judge one sequence against the oracle")
    common(p_irred)
    p_irred.add_argument("--cap", type=int, default=None, help="truncate the candidate degree range")
    p_irred.add_argument("--certify", action="store_true", help="also run the one-sided certificate")
    p_irred.add_argument("--seed", type=int, default=0)
    p_irred.set_defaults(func=cmd_irred)

    p_survey = sub.add_parser("survey", help="judge the whole (0,a,b) grid")
    p_survey.add_argument("--amax", type=int, default=9)
    p_survey.add_argument("--primes", default="2,3,5,7")
    p_survey.add_argument("--cap", type=int, default=None)
    p_survey.add_argument("--workers", type=int, default=default_workers)
    p_survey.add_argument("--timings", action="store_true", help="real elapsed_ms instead of 0")
    p_survey.add_argument("--format", choices=("csv", "json"), default="csv")
    p_survey.add_argument("-o", "--output", default=None)
    p_survey.set_defaults(func=cmd_survey)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SizeError as exc:
        print(f"bound exceeded: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SchurforgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"bad argument: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

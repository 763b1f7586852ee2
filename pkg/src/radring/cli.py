"""Command-line interface.

Subcommands: analyze, element, factor, count-irreducible, verify.  Reports go
to stdout (text by default, ``--json`` for machine-readable output with a
stable key order); diagnostics go to stderr.  Exit codes: 0 success, 1
verification failure, 2 usage or hypothesis error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import factor as factor_mod
from . import numth, ring, structure, verify
from .caps import ENUM_CAP
from .errors import CapExceeded, HypothesisViolation
from .factor import Poly
from .gfq import FieldSpec


def _parse_field(token: str, seed: int) -> FieldSpec:
    """'13' means Z_13; 'p^k' builds F_{p^k} with the run seed."""
    if "^" in token:
        p_str, k_str = token.split("^", 1)
        return FieldSpec.extension(int(p_str), int(k_str), seed)
    return FieldSpec(int(token))


def _splitting_json(spec: FieldSpec, m: int, r_el) -> dict:
    st = structure.splitting_type(spec, m, r_el)
    decomp = structure.ring_decomposition(spec, m, r_el)
    return {
        "q": st.q,
        "m": st.m,
        "ord_r": st.ord_r,
        "t": st.t,
        "factor_count": st.factor_count,
        "copies": decomp.copies,
        "unit_count_prediction": decomp.unit_count_prediction,
    }


def _spec_json(spec: FieldSpec) -> dict:
    return {
        "p": spec.p,
        "k": spec.k,
        "modulus": list(spec.modulus) if spec.modulus is not None else None,
    }


def _factors_json(report) -> list:
    return [
        {"coeffs": poly.coeff_ints(), "multiplicity": mult, "text": str(poly)}
        for poly, mult in report.factors
    ]


def _factored_text(report) -> str:
    return "".join(
        f"({poly})" + (f"^{mult}" if mult > 1 else "") for poly, mult in report.factors
    )


def _cmd_analyze(args) -> tuple[dict, list[str], int]:
    params = ring.make_params(args.n, args.m, args.r)
    n, m, r = params.n, params.m, params.r
    prime = numth.is_prime(n)
    verdict = structure.is_field(n, m, r, args.seed)
    out = {
        "n": n,
        "m": m,
        "r": r,
        "n_is_prime": prime,
        "crt_moduli": numth.crt_split(n),
        "verdict": verdict.to_json(),
        "binomial": f"x^{m}-{r}",
        "factors": None,
        "factored": None,
        "splitting": None,
        "units": None,
    }
    lines = [
        f"ring Z_{n}[x]/(x^{m}-{r})",
        f"n prime: {'yes' if prime else 'no'}   CRT moduli: {out['crt_moduli']}",
        f"field: {'yes' if verdict.is_field else 'no'}   "
        f"reasons: {', '.join(rs.code for rs in verdict.reasons)}",
    ]
    if prime:
        spec = FieldSpec(n)
        r_el = spec.element(r)
        report = factor_mod.factor_monic(Poly.binomial(spec, m, r_el), args.seed)
        out["factors"] = _factors_json(report)
        out["factored"] = _factored_text(report)
        lines.append(f"factorization: {out['factored']}")
        if (spec.q - 1) % m == 0 and not r_el.is_zero:
            sp = _splitting_json(spec, m, r_el)
            out["splitting"] = sp
            lines.append(
                f"splitting: ord(r)={sp['ord_r']}, {sp['factor_count']} factors of degree {sp['t']}"
            )
            lines.append(
                f"decomposition: {sp['copies']} copies of F_({n}^{sp['t']})"
            )
            cap = args.cap if args.cap is not None else ENUM_CAP
            units = {"predicted": sp["unit_count_prediction"], "enumerated": None}
            if params.size <= cap:
                units["enumerated"] = ring.unit_count(params, cap)
            out["units"] = units
            lines.append(
                f"units: predicted {units['predicted']}, enumerated {units['enumerated']}"
            )
    return out, lines, 0


def _cmd_element(args) -> tuple[dict, list[str], int]:
    params = ring.make_params(args.n, args.m, args.r)
    a = ring.parse_coeffs(args.coeffs, params)
    det = ring.unital_det(a)
    unit = math.gcd(det, params.n) == 1
    out = {
        "params": {"n": params.n, "m": params.m, "r": params.r},
        "element": list(a.coeffs),
        "det": det,
        "det_gcd_n": math.gcd(det, params.n),
        "is_unit": unit,
        "inverse": None,
        "witness": None,
        "witness_searched": True,
    }
    lines = [
        f"element {a} in Z_{params.n}[x]/(x^{params.m}-{params.r})",
        f"det = {det}, gcd(det, n) = {out['det_gcd_n']} -> {'unit' if unit else 'not a unit'}",
    ]
    if unit:
        inv = ring.inverse(a)
        out["inverse"] = list(inv.coeffs)
        lines.append(f"inverse: {inv}")
    elif not a.is_zero:
        witness = ring.zero_divisor_witness(a, args.cap if args.cap is not None else ENUM_CAP)
        if witness is ring.WITNESS_UNSEARCHED:
            out["witness_searched"] = False
            lines.append("zero-divisor witness: not searched (ring above cap)")
        else:
            out["witness"] = list(witness.coeffs)
            product = a * witness
            lines.append(f"zero-divisor witness: {witness}  (product = {product})")
    if args.coeffs2 is not None:
        b = ring.parse_coeffs(args.coeffs2, params)
        s = a + b
        prod = a * b
        out["second"] = list(b.coeffs)
        out["sum"] = list(s.coeffs)
        out["product"] = list(prod.coeffs)
        lines.append(f"second element {b}: sum = {s}, product = {prod}")
    return out, lines, 0


def _cmd_factor(args) -> tuple[dict, list[str], int]:
    spec = _parse_field(args.q, args.seed)
    m = args.m
    if m < 1:
        raise ValueError(f"degree must be >= 1, got {m}")
    r_el = spec.element(args.r)
    f = Poly.binomial(spec, m, r_el)
    report = factor_mod.factor_monic(f, args.seed)
    out = {
        "field": _spec_json(spec),
        "m": m,
        "r": list(r_el.coeffs) if spec.k > 1 else r_el.value,
        "binomial": str(f),
        "factors": _factors_json(report),
        "factored": _factored_text(report),
        "prediction": None,
        "squarefree_certificate": None,
    }
    lines = [f"x^{m}-({r_el if spec.k > 1 else out['r']}) over F_{spec.q}",
             f"factorization: {out['factored']}"]
    if (spec.q - 1) % m == 0 and not r_el.is_zero:
        st = structure.splitting_type(spec, m, r_el)
        match = report.factor_degrees == [st.t] * st.factor_count
        out["prediction"] = {
            "applicable": True,
            "t": st.t,
            "factor_count": st.factor_count,
            "match": match,
        }
        lines.append(
            f"prediction: {st.factor_count} factors of degree {st.t} -> "
            f"{'MATCH' if match else 'MISMATCH'}"
        )
    else:
        reason = "r is zero" if r_el.is_zero else "m does not divide q-1"
        out["prediction"] = {"applicable": False, "reason": reason}
        lines.append(f"prediction: n/a ({reason})")
        if not r_el.is_zero and numth.rad(m) == m and m > 1:
            d, b = structure.squarefree_reducible(spec, m, r_el)
            out["squarefree_certificate"] = {
                "d": d,
                "b": list(b.coeffs) if spec.k > 1 else b.value,
            }
            lines.append(
                f"squarefree certificate: ({d}, {b.value if spec.k == 1 else b}) "
                f"so x^{m // d}-{b.value if spec.k == 1 else b} divides x^{m}-{out['r']}"
            )
    mismatch = out["prediction"].get("match") is False
    return out, lines, 1 if mismatch else 0


def _cmd_count_irreducible(args) -> tuple[dict, list[str], int]:
    spec = _parse_field(args.q, args.seed)
    cap = args.cap if args.cap is not None else ENUM_CAP
    report = structure.count_irreducible(spec, args.m, cap)
    match = report.enumerated is None or report.enumerated == report.predicted
    out = {
        "field": _spec_json(spec),
        **report.to_json(),
        "match": match,
    }
    lines = [
        f"irreducible binomials x^{args.m}-r over F_{spec.q}:",
        f"M = {report.M}, predicted = {report.predicted}, "
        f"enumerated = {report.enumerated} -> {'MATCH' if match else 'MISMATCH'}",
    ]
    return out, lines, 0 if match else 1


def _cmd_verify(args) -> tuple[dict, list[str], int]:
    reports = verify.run_suite(
        args.suite, max_p=args.max_p, max_m=args.max_m, cap=args.cap,
        seed=args.seed, workers=args.workers,
    )
    total_failures = sum(len(rep.failures) for rep in reports)
    out = {
        "suites": [rep.to_json() for rep in reports],
        "checked": sum(rep.checked for rep in reports),
        "failures": total_failures,
        "ok": total_failures == 0,
    }
    lines = []
    for rep in reports:
        status = "ok" if rep.ok else f"{len(rep.failures)} FAILURES"
        lines.append(f"{rep.suite}: checked {rep.checked} grid points, {status}")
        for fl in rep.failures[:20]:
            lines.append(f"  at {fl.point}: expected {fl.expected}, got {fl.actual}")
        if len(rep.failures) > 20:
            lines.append(f"  ... and {len(rep.failures) - 20} more")
    return out, lines, 0 if total_failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="radring",
        description="Arithmetic and structure analysis for Z_n with an adjoined m-th root of r.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0, help="seed for factorization and field construction")
    common.add_argument("--cap", dest="cap", type=int, default=None,
                        help="enumeration/brute-force size cap")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="classify Z_n[x]/(x^m-r)")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("r", type=int)
    p.set_defaults(fn=_cmd_analyze)

    p = sub.add_parser("element", parents=[common], help="determinant, inverse or zero-divisor witness")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("r", type=int)
    p.add_argument("coeffs", help="comma-separated coefficients, e.g. 3,4")
    p.add_argument("coeffs2", nargs="?", default=None, help="optional second element")
    p.set_defaults(fn=_cmd_element)

    p = sub.add_parser("factor", parents=[common], help="factor x^m-r over F_q")
    p.add_argument("q", help="prime, or p^k for an extension field")
    p.add_argument("m", type=int)
    p.add_argument("r", type=int)
    p.set_defaults(fn=_cmd_factor)

    p = sub.add_parser("count-irreducible", parents=[common],
                       help="count r with x^m-r irreducible over F_q")
    p.add_argument("q", help="prime, or p^k for an extension field")
    p.add_argument("m", type=int)
    p.set_defaults(fn=_cmd_count_irreducible)

    p = sub.add_parser("verify", parents=[common], help="run a verification sweep")
    p.add_argument("suite", choices=verify.SUITE_NAMES)
    p.add_argument("--max-p", type=int, default=None, help="override the prime/modulus bound")
    p.add_argument("--max-m", type=int, default=None, help="override the degree bound")
    p.add_argument("--workers", type=int, default=1, help="concurrent grid workers")
    p.set_defaults(fn=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        payload, lines, code = args.fn(args)
    except (HypothesisViolation, CapExceeded, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())

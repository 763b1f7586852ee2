"""Fail-collecting verification sweeps behind the CLI ``verify`` command.

Each suite walks a parameter grid, re-derives every claim two independent
ways (prediction vs enumeration, determinant vs brute force, pipeline
factorizer vs trial division) and collects *all* discrepancies instead of
stopping at the first, so a failing run fully characterizes the problem.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import factor, kernels, numth, ring, structure
from .caps import AXIOM_CAP, ENUM_CAP
from .factor import Poly
from .gfq import FieldSpec


@dataclass
class Failure:
    point: dict
    expected: object
    actual: object

    def to_json(self) -> dict:
        return {"point": self.point, "expected": str(self.expected), "actual": str(self.actual)}


@dataclass
class VerifyReport:
    suite: str
    grid: dict
    checked: int
    failures: list[Failure]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "grid": self.grid,
            "checked": self.checked,
            "ok": self.ok,
            "failures": [f.to_json() for f in self.failures],
        }

    @classmethod
    def from_json(cls, payload: dict) -> "VerifyReport":
        failures = [
            Failure(f["point"], f["expected"], f["actual"]) for f in payload["failures"]
        ]
        return cls(payload["suite"], payload["grid"], payload["checked"], failures)


def _run_points(name, grid, points, check, workers):
    failures: list[Failure] = []
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for fails in pool.map(check, points):
                failures.extend(fails)
    else:
        for pt in points:
            failures.extend(check(pt))
    return VerifyReport(name, grid, len(points), failures)


def _point_seed(seed, *parts):
    out = seed & 0xFFFFFFFF
    for p in parts:
        out = (out * 1_000_003 + p + 1) & 0xFFFFFFFF
    return out


# ---------------------------------------------------------------------------
# ring-axioms


def _axiom_points(acap, max_n, max_m, m1_limit=13):
    points = []
    for m in range(2, max_m + 1):
        n = 2
        while n**m <= acap:
            if max_n is None or n <= max_n:
                for r in range(n):
                    points.append({"n": n, "m": m, "r": r})
            n += 1
    for n in range(2, min(m1_limit, max_n or m1_limit) + 1):
        points.append({"n": n, "m": 1, "r": 0})
    return points


def _suite_ring_axioms(max_p, max_m, cap, seed, workers):
    acap = cap or AXIOM_CAP
    mmax = max_m or 11
    points = _axiom_points(acap, max_p, mmax)
    grid = {"element_cap": acap, "max_n": max_p, "max_m": mmax}

    def check(pt):
        n, m, r = pt["n"], pt["m"], pt["r"]
        fails = []
        total = n**m
        pairs, bad_ia, bad_ib = kernels.mul_pair_scan(n, m, r)
        if bad_ia != -1:
            fails.append(
                Failure({**pt, "ia": int(bad_ia), "ib": int(bad_ib)},
                        "power rule product == polynomial reduction product", "mismatch")
            )
        params = ring.RingParams(n, m, r)
        table = kernels.element_table(n, m)
        one_prods = kernels.mul_with_all(n, m, r, np.array(params.one.coeffs, dtype=np.int64))
        if not np.array_equal(one_prods, table):
            fails.append(Failure(pt, "1 * a == a for every a", "identity violated"))
        if total <= 100:
            w = kernels.weights(n, m)
            mul_tab = np.empty((total, total), dtype=np.int64)
            for ia in range(total):
                mul_tab[ia] = kernels.mul_with_all(n, m, r, table[ia]) @ w
            add_tab = ((table[:, None, :] + table[None, :, :]) % n) @ w
            if not np.array_equal(mul_tab, mul_tab.T):
                fails.append(Failure(pt, "a*b == b*a everywhere", "commutativity violated"))
            ia, ib, ic = np.meshgrid(*([np.arange(total)] * 3), indexing="ij", sparse=True)
            if not np.array_equal(mul_tab[mul_tab[ia, ib], ic], mul_tab[ia, mul_tab[ib, ic]]):
                fails.append(Failure(pt, "(a*b)*c == a*(b*c) everywhere", "associativity violated"))
            if not np.array_equal(mul_tab[ia, add_tab[ib, ic]], add_tab[mul_tab[ia, ib], mul_tab[ia, ic]]):
                fails.append(Failure(pt, "a*(b+c) == a*b + a*c everywhere", "distributivity violated"))
        else:
            rng = np.random.default_rng(_point_seed(seed, n, m, r))
            triples = rng.integers(0, total, size=(256, 3))
            for t0, t1, t2 in triples:
                a = params.element_by_index(int(t0))
                b = params.element_by_index(int(t1))
                c = params.element_by_index(int(t2))
                if a * b != b * a:
                    fails.append(Failure({**pt, "a": str(a), "b": str(b)}, "a*b == b*a", "commutativity violated"))
                if (a * b) * c != a * (b * c):
                    fails.append(Failure({**pt, "a": str(a), "b": str(b), "c": str(c)},
                                         "(a*b)*c == a*(b*c)", "associativity violated"))
                if a * (b + c) != a * b + a * c:
                    fails.append(Failure({**pt, "a": str(a), "b": str(b), "c": str(c)},
                                         "a*(b+c) == a*b + a*c", "distributivity violated"))
        return fails

    return _run_points("ring-axioms", grid, points, check, workers)


# ---------------------------------------------------------------------------
# determinant


def _closed_form_dets(n, m, r, table):
    a0 = table[:, 0]
    if m == 2:
        a1 = table[:, 1]
        return (a0 * a0 - r * a1 * a1) % n
    a1 = table[:, 1]
    a2 = table[:, 2]
    return (a0**3 + r * a1**3 + r * r % n * a2**3 - 3 * r * a0 * a1 * a2) % n


def _suite_determinant(max_p, max_m, cap, seed, workers):
    nmax = max_p or 13
    mmax = max_m or 3
    dm_cap = cap or 1296
    points = []
    for m in (2, 3):
        if m > max(mmax, 2):
            continue
        for n in range(2, nmax + 1):
            for r in range(n):
                points.append({"kind": "closed", "n": n, "m": m, "r": r})
    rng = np.random.default_rng(_point_seed(seed, 0xD27))
    for _ in range(1000):
        m = int(rng.integers(2, 4))
        n = int(rng.integers(2, 10_000))
        r = int(rng.integers(0, n))
        coeffs = [int(c) for c in rng.integers(0, n, size=m)]
        points.append({"kind": "closed-random", "n": n, "m": m, "r": r, "coeffs": coeffs})
    for m in range(2, (max_m or 4) + 1):
        n = 2
        while n**m <= dm_cap:
            if max_p is None or n <= max_p:
                for r in range(n):
                    points.append({"kind": "detmult", "n": n, "m": m, "r": r})
            n += 1
    for n in range(2, nmax + 1):
        for m in range(1, min(mmax, 4) + 1):
            points.append({"kind": "special", "n": n, "m": m, "r": 0})
    grid = {"closed_form_max_n": nmax, "random_cases": 1000, "det_mult_cap": dm_cap}

    def check(pt):
        fails = []
        n, m, r = pt["n"], pt["m"], pt["r"]
        kind = pt["kind"]
        if kind == "closed":
            table = kernels.element_table(n, m)
            dets = kernels.unital_dets(n, m, r)
            formula = _closed_form_dets(n, m, r, table)
            bad = np.nonzero(dets != formula)[0]
            for idx in bad:
                fails.append(Failure({**pt, "element": int(idx)},
                                     int(formula[idx]), int(dets[idx])))
        elif kind == "closed-random":
            params = ring.RingParams(n, m, r)
            el = params.element(pt["coeffs"])
            got = ring.unital_det(el)
            a = list(el.coeffs)
            if m == 2:
                want = (a[0] ** 2 - r * a[1] ** 2) % n
            else:
                want = (a[0] ** 3 + r * a[1] ** 3 + r * r * a[2] ** 3 - 3 * r * a[0] * a[1] * a[2]) % n
            if got != want:
                fails.append(Failure(pt, want, got))
        elif kind == "detmult":
            dets = kernels.unital_dets(n, m, r)
            pairs, bad_ia, bad_ib = kernels.det_mult_scan(n, m, r, dets)
            if bad_ia != -1:
                fails.append(Failure({**pt, "ia": int(bad_ia), "ib": int(bad_ib)},
                                     "det(a*b) == det(a)*det(b) mod n", "mismatch"))
        else:
            # r = 0 lower-triangular case: det must be a0^m; m = 1 is Z_n itself
            table = kernels.element_table(n, m)
            dets = kernels.unital_dets(n, m, 0)
            formula = table[:, 0] ** m % n if m > 1 else table[:, 0] % n
            bad = np.nonzero(dets != formula)[0]
            for idx in bad:
                fails.append(Failure({**pt, "element": int(idx)},
                                     int(formula[idx]), int(dets[idx])))
        return fails

    return _run_points("determinant", grid, points, check, workers)


# ---------------------------------------------------------------------------
# field-criterion


def _suite_field_criterion(max_p, max_m, cap, seed, workers):
    unit_nmax = max_p or 7
    mmax = max_m or 3
    units_cap = cap or AXIOM_CAP
    points = []
    for n in range(2, unit_nmax + 1):
        for m in range(1, mmax + 1):
            for r in range(n):
                points.append({"kind": "unit-criterion", "n": n, "m": m, "r": r})
    for p in numth.primes_upto(max_p or 13):
        for m in range(1, mmax + 1):
            for r in range(p):
                points.append({"kind": "field-vs-domain", "n": p, "m": m, "r": r})
    for m in range(2, mmax + 1):
        n = 2
        while n**m <= units_cap:
            if max_p is None or n <= max_p:
                for r in range(n):
                    points.append({"kind": "domain-vs-units", "n": n, "m": m, "r": r})
            n += 1
    for n in (4, 6, 8, 9, 10, 12, 15, 45):
        if max_p is not None and n > max_p:
            continue
        for m in range(1, mmax + 1):
            if n**m <= units_cap:
                for r in range(n):
                    points.append({"kind": "crt", "n": n, "m": m, "r": r})
    grid = {"unit_criterion_max_n": unit_nmax, "differential_max_p": max_p or 13,
            "max_m": mmax, "domain_units_cap": units_cap}

    def check(pt):
        fails = []
        n, m, r = pt["n"], pt["m"], pt["r"]
        kind = pt["kind"]
        params = ring.RingParams(n, m, r)
        if kind == "unit-criterion":
            det_units = ring.unit_flags(params)
            brute, _ = kernels.inverse_exists_flags(n, m, r)
            bad = np.nonzero(det_units[1:] != brute[1:])[0]
            for idx in bad:
                fails.append(Failure({**pt, "element": int(idx) + 1},
                                     f"determinant says unit={bool(det_units[idx + 1])}",
                                     f"inverse search says unit={bool(brute[idx + 1])}"))
        elif kind == "field-vs-domain":
            verdict = structure.is_field(n, m, r, seed)
            ia, ib = kernels.find_zero_divisor_pair(n, m, r)
            domain_by_search = ia == -1
            if verdict.is_domain != domain_by_search:
                fails.append(Failure(pt, f"domain={verdict.is_domain} (verdict)",
                                     f"domain={domain_by_search} (pair scan)"))
            if verdict.is_field != verdict.is_domain:
                fails.append(Failure(pt, "is_field == is_domain", "verdict inconsistent"))
            for reason in verdict.reasons:
                if reason.code == structure.BINOMIAL_REDUCIBLE:
                    spec = FieldSpec(n)
                    g = Poly.from_ints(spec, [c for c in reason.detail["factor_coeffs"]])
                    f = Poly.binomial(spec, m, spec.element(r))
                    if not (f % g).is_zero:
                        fails.append(Failure(pt, f"{g} divides {f}", "evidence factor does not divide"))
        elif kind == "domain-vs-units":
            ia, _ib = kernels.find_zero_divisor_pair(n, m, r)
            no_zero_divisors = ia == -1
            brute, _ = kernels.inverse_exists_flags(n, m, r)
            all_units = bool(brute[1:].all())
            if no_zero_divisors != all_units:
                fails.append(Failure(pt, f"no zero divisors={no_zero_divisors}",
                                     f"all nonzero units={all_units}"))
        else:
            flags = ring.unit_flags(params)
            combined = np.ones(params.size, dtype=bool)
            table = kernels.element_table(n, m)
            for q in numth.crt_split(n):
                sub = ring.RingParams(q, m, r % q)
                subflags = ring.unit_flags(sub)
                idx = (table % q) @ kernels.weights(q, m)
                combined &= subflags[idx]
            bad = np.nonzero(flags != combined)[0]
            for idx in bad:
                fails.append(Failure({**pt, "element": int(idx)},
                                     f"unit mod {n}={bool(flags[idx])}",
                                     "product of prime-power verdicts disagrees"))
        return fails

    return _run_points("field-criterion", grid, points, check, workers)


# ---------------------------------------------------------------------------
# power-map


def _suite_power_map(max_p, max_m, cap, seed, workers):
    onto_pmax = max_p or 101
    onto_mmax = max_m or 10
    prop_pmax = max_p or 31
    prop_mmax = max_m or 3
    points = []
    for p in numth.primes_upto(onto_pmax):
        for m in range(1, onto_mmax + 1):
            points.append({"kind": "onto", "p": p, "m": m})
    for p in numth.primes_upto(prop_pmax):
        for m in range(1, prop_mmax + 1):
            points.append({"kind": "linear-factor", "p": p, "m": m})
    for p in numth.primes_upto(max_p or 101):
        if p > 2:
            points.append({"kind": "quadratic-irreducible", "p": p})
    for p in (5, 7, 11, 13):
        if max_p is None or p <= max_p:
            points.append({"kind": "cubic", "p": p})
    grid = {"onto_max_p": onto_pmax, "onto_max_m": onto_mmax,
            "prop_max_p": prop_pmax, "prop_max_m": prop_mmax}

    def check(pt):
        fails = []
        p = pt["p"]
        kind = pt["kind"]
        spec = FieldSpec(p)
        if kind == "onto":
            m = pt["m"]
            onto = structure.power_map_onto(p, m)
            size = int(kernels.power_image_mask(p, m).sum())
            if onto != (size == p):
                fails.append(Failure(pt, f"onto={onto} (gcd criterion)",
                                     f"image size {size} of {p}"))
        elif kind == "linear-factor":
            m = pt["m"]
            mask = kernels.power_image_mask(p, m)
            for r in range(1, p):
                r_el = spec.element(r)
                f = Poly.binomial(spec, m, r_el)
                report = factor.factor_monic(f, seed)
                linear = structure.has_linear_factor(spec, m, r_el)
                oracle_linear = any(g.degree == 1 for g, _ in report.factors)
                if (linear is not None) != oracle_linear:
                    fails.append(Failure({**pt, "r": r},
                                         f"m-th power root exists={linear is not None}",
                                         f"oracle linear factor={oracle_linear}"))
                if linear is not None and linear**m != r_el:
                    fails.append(Failure({**pt, "r": r}, "root**m == r", str(linear)))
                if 2 <= m <= 3:
                    # degree 1 is excluded: x - r is irreducible despite its root
                    reducible = not report.is_irreducible_input()
                    if reducible != bool(mask[r]):
                        fails.append(Failure({**pt, "r": r},
                                             f"reducible={reducible} (oracle)",
                                             f"r in power image={bool(mask[r])}"))
        elif kind == "quadratic-irreducible":
            count = sum(1 for a in range(p) if structure.is_field(p, 2, a).is_field)
            if count != (p - 1) // 2 or count < 1:
                fails.append(Failure(pt, f"{(p - 1) // 2} irreducible x^2-a", count))
        else:
            mask3 = kernels.power_image_mask(p, 3)
            for r in range(p):
                witness = structure.cubic_form_has_nontrivial_zero(p, r)
                if (witness is not None) != bool(mask3[r]):
                    fails.append(Failure({**pt, "r": r},
                                         f"r is a cube={bool(mask3[r])}",
                                         f"witness found={witness is not None}"))
                if witness is not None:
                    a0, a1, a2 = witness
                    form = (a0**3 + r * a1**3 + r * r * a2**3 - 3 * r * a0 * a1 * a2) % p
                    if form != 0 or witness == (0, 0, 0):
                        fails.append(Failure({**pt, "r": r}, "valid nonzero witness", witness))
        return fails

    return _run_points("power-map", grid, points, check, workers)


# ---------------------------------------------------------------------------
# pythagorean


def _suite_pythagorean(max_p, max_m, cap, seed, workers):
    pmax = max_p or 100
    points = [{"p": p} for p in numth.primes_upto(pmax)]
    grid = {"max_p": pmax, "exhaustive_confirm_max_p": 13}

    def check(pt):
        fails = []
        p = pt["p"]
        cls = structure.pythagorean_class(p)
        if cls.is_pythagorean != (p == 2 or p % 4 == 1):
            fails.append(Failure(pt, "sum-of-two-squares classification", cls))
        if cls.zp_i_is_field != (p % 4 == 3):
            fails.append(Failure(pt, f"field iff p = 3 mod 4 (p % 4 = {p % 4})",
                                 f"field={cls.zp_i_is_field}"))
        if p <= 13:
            ia, _ = kernels.find_zero_divisor_pair(p, 2, p - 1)
            if (ia == -1) != cls.zp_i_is_field:
                fails.append(Failure(pt, f"field={cls.zp_i_is_field}",
                                     f"zero divisor search found={ia != -1}"))
        return fails

    return _run_points("pythagorean", grid, points, check, workers)


# ---------------------------------------------------------------------------
# splitting (+ squarefree certificates)


def _splitting_grid(pmax, mmax):
    for p in numth.primes_upto(pmax):
        for m in range(2, mmax + 1):
            if (p - 1) % m == 0:
                yield p, m


def _suite_splitting(max_p, max_m, cap, seed, workers):
    pmax = max_p or 31
    mmax = max_m or 6
    ecap = cap or ENUM_CAP
    points = [{"kind": "splitting", "p": p, "m": m} for p, m in _splitting_grid(pmax, mmax)]
    if pmax >= 7 and mmax >= 3:
        points.append({"kind": "fixture", "p": 7, "m": 3, "r": 2, "degrees": [3]})
    if pmax >= 13 and mmax >= 3:
        points.append({"kind": "fixture", "p": 13, "m": 3, "r": 5, "roots": [7, 8, 11]})
    sf_mmax = 10 if max_m is None else max_m
    for p in numth.primes_upto(pmax):
        for m in range(2, sf_mmax + 1):
            if numth.rad(m) == m and (p - 1) % m != 0:
                points.append({"kind": "squarefree", "p": p, "m": m})
    grid = {"max_p": pmax, "max_m": mmax, "unit_count_cap": ecap, "squarefree_max_m": 10}

    def check(pt):
        fails = []
        p, m = pt["p"], pt["m"]
        spec = FieldSpec(p)
        if pt["kind"] == "fixture":
            r_el = spec.element(pt["r"])
            report = factor.factor_monic(Poly.binomial(spec, m, r_el), seed)
            if "degrees" in pt:
                if report.factor_degrees != pt["degrees"]:
                    fails.append(Failure(pt, pt["degrees"], report.factor_degrees))
            else:
                got_roots = sorted((-g.coeffs[0]).value for g, _ in report.factors if g.degree == 1)
                if got_roots != pt["roots"]:
                    fails.append(Failure(pt, pt["roots"], got_roots))
            return fails
        if pt["kind"] == "squarefree":
            for r in range(1, p):
                r_el = spec.element(r)
                d, b = structure.squarefree_reducible(spec, m, r_el)
                ok = (
                    numth.is_prime(d) and m % d == 0 and (p - 1) % d != 0
                    and b**d == r_el
                )
                if not ok:
                    fails.append(Failure({**pt, "r": r}, "valid certificate (d, b)", (d, str(b))))
                    continue
                f = Poly.binomial(spec, m, r_el)
                g = Poly.binomial(spec, m // d, b)
                if not (f % g).is_zero:
                    fails.append(Failure({**pt, "r": r},
                                         f"x^{m // d}-{b} divides x^{m}-{r}", "does not divide"))
            return fails
        for r in range(1, p):
            r_el = spec.element(r)
            st = structure.splitting_type(spec, m, r_el)
            report = factor.factor_monic(Poly.binomial(spec, m, r_el), seed)
            want = [st.t] * st.factor_count
            if report.factor_degrees != want:
                fails.append(Failure({**pt, "r": r}, f"degrees {want}", report.factor_degrees))
            irr_pred = structure.irreducible_binomial(spec, m, r_el)
            if irr_pred != (st.t == m) or irr_pred != report.is_irreducible_input():
                fails.append(Failure({**pt, "r": r},
                                     f"irreducible prediction {irr_pred}",
                                     f"t={st.t}, oracle={report.is_irreducible_input()}"))
            if p**m <= ecap:
                pred_units = (p**st.t - 1) ** st.factor_count
                got_units = ring.unit_count(ring.RingParams(p, m, r), ecap)
                if got_units != pred_units:
                    fails.append(Failure({**pt, "r": r}, f"{pred_units} units", got_units))
        return fails

    return _run_points("splitting", grid, points, check, workers)


# ---------------------------------------------------------------------------
# counting


def _suite_counting(max_p, max_m, cap, seed, workers):
    pmax = max_p or 31
    mmax = max_m or 6
    points = [{"kind": "prime", "p": p, "m": m} for p, m in _splitting_grid(pmax, mmax)]
    if pmax >= 3:
        for m in (2, 4, 8):
            if m <= max(mmax, 2):
                points.append({"kind": "extension", "p": 3, "k": 2, "m": m})
    if pmax >= 13:
        if mmax >= 3:
            points.append({"kind": "fixture", "p": 13, "m": 3, "expect": 8})
        points.append({"kind": "fixture", "p": 13, "m": 2, "expect": 6})
    grid = {"max_p": pmax, "max_m": mmax, "extension_field": "F_9"}

    def check(pt):
        fails = []
        m = pt["m"]
        if pt["kind"] == "extension":
            spec = FieldSpec.extension(pt["p"], pt["k"], seed)
        else:
            spec = FieldSpec(pt["p"])
        report = structure.count_irreducible(spec, m)
        if report.enumerated != report.predicted:
            fails.append(Failure(pt, f"{report.predicted} irreducible binomials",
                                 f"enumerated {report.enumerated}"))
        if pt["kind"] == "fixture" and report.predicted != pt["expect"]:
            fails.append(Failure(pt, pt["expect"], report.predicted))
        q = spec.q
        if report.M % m != 0 or numth.rad(report.M) != numth.rad(m) or \
                math.gcd(report.M, (q - 1) // report.M) != 1:
            fails.append(Failure(pt, "M satisfies its two defining conditions", report.M))
        return fails

    return _run_points("counting", grid, points, check, workers)


# ---------------------------------------------------------------------------
# oracle-agreement


def _prime_powers_upto(limit):
    out = []
    for p in numth.primes_upto(limit):
        q = p
        k = 1
        while q <= limit:
            out.append((p, k, q))
            q *= p
            k += 1
    return sorted(out, key=lambda t: t[2])


def _suite_oracle_agreement(max_p, max_m, cap, seed, workers):
    qmax = max_p or 13
    mmax = max_m or 6
    points = [
        {"p": p, "k": k, "q": q, "m": m}
        for p, k, q in _prime_powers_upto(qmax)
        for m in range(1, mmax + 1)
    ]
    grid = {"max_q": qmax, "max_m": mmax}

    def check(pt):
        fails = []
        spec = FieldSpec.extension(pt["p"], pt["k"], seed)
        m = pt["m"]
        for idx in range(spec.q):
            r_el = spec.element_by_index(idx)
            f = Poly.binomial(spec, m, r_el)
            rep1 = factor.factor_monic(f, seed)
            rep2 = factor.brute_force_factor(f)
            key1 = [(g.sort_key(), mult) for g, mult in rep1.factors]
            key2 = [(g.sort_key(), mult) for g, mult in rep2.factors]
            if key1 != key2:
                fails.append(Failure({**pt, "r": idx}, str(rep2), str(rep1)))
            rep_again = factor.factor_monic(f, seed)
            if rep_again != rep1:
                fails.append(Failure({**pt, "r": idx}, "seeded run is bit-stable", "reports differ"))
            rep_other = factor.factor_monic(f, seed + 1)
            if [(g.sort_key(), mult) for g, mult in rep_other.factors] != key1:
                fails.append(Failure({**pt, "r": idx}, "factor multiset is seed-independent",
                                     "multisets differ"))
            if factor.is_irreducible(f) != rep1.is_irreducible_input():
                fails.append(Failure({**pt, "r": idx}, "is_irreducible matches report shape",
                                     str(rep1)))
            if not r_el.is_zero and m % spec.p != 0:
                sep = f.gcd(f.derivative())
                if sep.degree != 0:
                    fails.append(Failure({**pt, "r": idx}, "gcd(f, f') == 1 (separable)", str(sep)))
        return fails

    return _run_points("oracle-agreement", grid, points, check, workers)


# ---------------------------------------------------------------------------

SUITES = {
    "ring-axioms": _suite_ring_axioms,
    "determinant": _suite_determinant,
    "field-criterion": _suite_field_criterion,
    "power-map": _suite_power_map,
    "pythagorean": _suite_pythagorean,
    "splitting": _suite_splitting,
    "counting": _suite_counting,
    "oracle-agreement": _suite_oracle_agreement,
}

SUITE_NAMES = tuple(SUITES) + ("all",)


def run_suite(name, max_p=None, max_m=None, cap=None, seed=0, workers=1) -> list[VerifyReport]:
    """Run one named suite (or every suite for 'all'); returns the reports."""
    if name == "all":
        return [
            fn(max_p, max_m, cap, seed, workers) for fn in SUITES.values()
        ]
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    return [SUITES[name](max_p, max_m, cap, seed, workers)]

"""Polynomial arithmetic and factorization over F_q.

This is the ground-truth oracle the classification predictions are checked
against.  ``factor_monic`` runs the full pipeline (squarefree split,
distinct-degree split, seeded equal-degree split), while
``brute_force_factor`` factors by plain trial division over all monic
candidates; the two must always agree, which the test suites exercise
exhaustively at small sizes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import numth
from .caps import BRUTE_CAP, ENUM_CAP
from .errors import CapExceeded
from .gfq import FieldSpec, FqElement


@dataclass(frozen=True)
class Poly:
    """Dense polynomial over F_q, ascending coefficients, no trailing zeros.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    spec: FieldSpec
    coeffs: tuple[FqElement, ...]

    @staticmethod
    def make(spec: FieldSpec, coeffs) -> "Poly":
        cs = list(coeffs)
        while cs and cs[-1].is_zero:
            cs.pop()
        return Poly(spec, tuple(cs))

    @classmethod
    def from_ints(cls, spec: FieldSpec, ints) -> "Poly":
        return cls.make(spec, [spec.element(c) for c in ints])

    @classmethod
    def zero(cls, spec: FieldSpec) -> "Poly":
        return cls(spec, ())

    @classmethod
    def one(cls, spec: FieldSpec) -> "Poly":
        return cls(spec, (spec.one,))

    @classmethod
    def x(cls, spec: FieldSpec) -> "Poly":
        return cls(spec, (spec.zero, spec.one))

    @classmethod
    def constant(cls, c: FqElement) -> "Poly":
        return cls.make(c.spec, [c])

    @classmethod
    def binomial(cls, spec: FieldSpec, m: int, r: FqElement) -> "Poly":
        """x^m - r."""
        if m < 1:
            raise ValueError(f"binomial degree must be >= 1, got {m}")
        coeffs = [-r] + [spec.zero] * (m - 1) + [spec.one]
        return cls.make(spec, coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> FqElement:
        if self.is_zero:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return not self.is_zero and self.leading == self.spec.one

    def _check(self, other: "Poly"):
        if self.spec != other.spec:
            raise ValueError("polynomials over different fields")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        big, small = (self.coeffs, other.coeffs)
        if len(big) < len(small):
            big, small = small, big
        out = list(big)
        for i, c in enumerate(small):
            out[i] = out[i] + c
        return Poly.make(self.spec, out)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        out = list(self.coeffs) + [self.spec.zero] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] = out[i] - c
        return Poly.make(self.spec, out)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        if self.is_zero or other.is_zero:
            return Poly.zero(self.spec)
        out = [self.spec.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly.make(self.spec, out)

    def scale(self, c: FqElement) -> "Poly":
        return Poly.make(self.spec, [a * c for a in self.coeffs])

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        inv_lead = other.leading.inverse()
        rem = list(self.coeffs)
        dg = other.degree
        if self.degree < dg:
            return Poly.zero(self.spec), self
        quot = [self.spec.zero] * (self.degree - dg + 1)
        for shift in range(self.degree - dg, -1, -1):
            lead = rem[shift + dg]
            if lead.is_zero:
                continue
            factor = lead * inv_lead
            quot[shift] = factor
            for i, gi in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - factor * gi
        return Poly.make(self.spec, quot), Poly.make(self.spec, rem[:dg])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero:
            raise ValueError("cannot normalize the zero polynomial")
        if self.is_monic:
            return self
        return self.scale(self.leading.inverse())

    def gcd(self, other: "Poly") -> "Poly":
        """Monic greatest common divisor."""
        if self.is_zero and other.is_zero:
            raise ValueError("gcd(0, 0) is undefined")
        f, g = self, other
        while not g.is_zero:
            f, g = g, f % g
        return f.monic()

    def powmod(self, e: int, modulus: "Poly") -> "Poly":
        """self**e mod modulus by repeated squaring."""
        if modulus.degree < 1:
            raise ValueError("powmod modulus must have degree >= 1")
        if e < 0:
            raise ValueError("negative exponent")
        result = Poly.one(self.spec) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = result * base % modulus
            base = base * base % modulus
            e >>= 1
        return result

    def evaluate(self, a: FqElement) -> FqElement:
        out = self.spec.zero
        for c in reversed(self.coeffs):
            out = out * a + c
        return out

    def derivative(self) -> "Poly":
        out = []
        for i in range(1, len(self.coeffs)):
            scalar = self.spec.element(i)
            out.append(self.coeffs[i] * scalar)
        return Poly.make(self.spec, out)

    def sort_key(self):
        return (self.degree, tuple(c.coeffs for c in self.coeffs))

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for d in range(self.degree, -1, -1):
            c = self.coeffs[d]
            if c.is_zero:
                continue
            if self.spec.k == 1:
                cs = str(c.value)
                unit_coeff = c.value == 1
            else:
                cs = "[" + ",".join(str(v) for v in c.coeffs) + "]"
                unit_coeff = c == self.spec.one
            if d == 0:
                parts.append(cs)
            elif d == 1:
                parts.append(("x" if unit_coeff else f"{cs}x"))
            else:
                parts.append((f"x^{d}" if unit_coeff else f"{cs}x^{d}"))
        return "+".join(parts)

    def coeff_ints(self):
        """JSON-friendly coefficients: ints for prime fields, lists otherwise."""
        if self.spec.k == 1:
            return [c.value for c in self.coeffs]
        return [list(c.coeffs) for c in self.coeffs]


def parse_poly(text: str, spec: FieldSpec) -> Poly:
    """Parse the polynomial text format.

    Binomial shorthand 'x^m-r' (or 'x^m+c'), or a comma list of ascending
    coefficients such as '4,0,0,1'.
    """
    s = text.strip().replace(" ", "")
    if s.startswith("x^"):
        body = s[2:]
        for op in ("-", "+"):
            if op in body:
                m_str, c_str = body.split(op, 1)
                r_val = int(c_str) if op == "-" else -int(c_str)
                return Poly.binomial(spec, int(m_str), spec.element(r_val))
        return Poly.binomial(spec, int(body), spec.zero)
    try:
        ints = [int(tok) for tok in s.split(",")]
    except ValueError as exc:
        raise ValueError(f"bad polynomial text {text!r}") from exc
    return Poly.from_ints(spec, ints)


def roots(f: Poly, cap: int = ENUM_CAP) -> list[FqElement]:
    """All field elements where f vanishes, by direct evaluation."""
    if f.is_zero:
        raise ValueError("every element is a root of the zero polynomial")
    return [a for a in f.spec.elements(cap) if f.evaluate(a).is_zero]


def is_irreducible(f: Poly, cap: int = ENUM_CAP) -> bool:
    """Irreducibility over F_q.

    Degree 1 is always irreducible; degrees 2 and 3 are irreducible exactly
    when they have no root; higher degrees use the distinct-degree sieve:
    f of degree d is irreducible iff x^(q^d) == x (mod f) and
    gcd(x^(q^(d/l)) - x, f) = 1 for every prime l dividing d.
    """
    if f.degree < 1:
        raise ValueError("irreducibility is undefined for constants")
    d = f.degree
    if d == 1:
        return True
    if d <= 3:
        return not roots(f, cap)
    q = f.spec.q
    x = Poly.x(f.spec)
    if x.powmod(q**d, f) != x % f:
        return False
    for ell in numth.prime_factors(d):
        w = x.powmod(q ** (d // ell), f) - x
        if w.is_zero or f.gcd(w).degree != 0:
            return False
    return True


@dataclass(frozen=True)
class FactorizationReport:
    """Monic irreducible factors with multiplicities, plus the scalar unit.

    unit * product(factor^multiplicity) reconstructs the input; factors are
    sorted by (degree, coefficient tuple).
    """

    input: Poly
    unit: FqElement
    factors: tuple[tuple[Poly, int], ...]

    def reconstruct(self) -> Poly:
        out = Poly.constant(self.unit)
        for poly, mult in self.factors:
            for _ in range(mult):
                out = out * poly
        return out

    def verify(self):
        if self.reconstruct() != self.input:
            raise AssertionError(f"factorization of {self.input} does not re-multiply")
        for poly, mult in self.factors:
            if mult < 1 or not poly.is_monic or not is_irreducible(poly):
                raise AssertionError(f"bad factor {poly} (multiplicity {mult})")

    @property
    def factor_degrees(self) -> list[int]:
        out = []
        for poly, mult in self.factors:
            out.extend([poly.degree] * mult)
        return sorted(out)

    def is_irreducible_input(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1

    def __str__(self):
        if not self.factors:
            return str(Poly.constant(self.unit))
        parts = []
        if not (self.unit == self.input.spec.one):
            parts.append(str(Poly.constant(self.unit)))
        for poly, mult in self.factors:
            parts.append(f"({poly})" + (f"^{mult}" if mult > 1 else ""))
        return "".join(parts)


def _build_report(f: Poly, unit: FqElement, raw: list[tuple[Poly, int]]) -> FactorizationReport:
    merged: dict = {}
    for poly, mult in raw:
        key = poly.sort_key()
        if key in merged:
            merged[key] = (poly, merged[key][1] + mult)
        else:
            merged[key] = (poly, mult)
    factors = tuple(sorted(merged.values(), key=lambda fm: fm[0].sort_key()))
    report = FactorizationReport(f, unit, factors)
    report.verify()
    return report


def _pth_root(f: Poly) -> Poly:
    # f has zero derivative, so it is g(x^p) for some g; recover g by taking
    # the p-th root of each coefficient at the multiples of p
    spec = f.spec
    p = spec.p
    root_pow = p ** (spec.k - 1)
    out = []
    for d in range(0, f.degree + 1, p):
        out.append(f.coeffs[d] ** root_pow)
    return Poly.make(spec, out)


def _squarefree_parts(f: Poly) -> list[tuple[Poly, int]]:
    # monic f -> [(monic squarefree, multiplicity)], standard char-p version
    out: list[tuple[Poly, int]] = []
    scale = 1
    p = f.spec.p
    while f.degree > 0:
        df = f.derivative()
        if df.is_zero:
            f = _pth_root(f)
            scale *= p
            continue
        g = f.gcd(df)
        h = f // g
        i = 1
        while h.degree > 0:
            gh = g.gcd(h)
            part = h // gh
            if part.degree > 0:
                out.append((part, i * scale))
            g = g // gh
            h = gh
            i += 1
        f = g
    return out


def _distinct_degree(g: Poly) -> list[tuple[Poly, int]]:
    # monic squarefree g -> [(product of its degree-d factors, d)]
    spec = g.spec
    q = spec.q
    x = Poly.x(spec)
    out = []
    w = x % g
    d = 0
    while g.degree >= 2 * (d + 1):
        d += 1
        w = w.powmod(q, g)
        # gcd with the zero polynomial returns g itself, which is exactly
        # right: w == x mod g means every remaining factor has degree d
        part = g.gcd(w - x)
        if part.degree > 0:
            out.append((part, d))
            g = g // part
            if g.degree < 1:
                break
            w = w % g
    if g.degree > 0:
        out.append((g, g.degree))
    return out


def _random_poly(spec: FieldSpec, degree: int, rng: random.Random) -> Poly:
    coeffs = [spec.element_by_index(rng.randrange(spec.q)) for _ in range(degree + 1)]
    return Poly.make(spec, coeffs)


def _split_equal_degree(f: Poly, d: int, rng: random.Random) -> list[Poly]:
    # f = product of distinct irreducibles, all of degree d
    spec = f.spec
    q = spec.q
    found = []
    stack = [f]
    while stack:
        g = stack.pop()
        if g.degree == d:
            found.append(g.monic())
            continue
        while True:
            u = _random_poly(spec, g.degree - 1, rng)
            if u.degree < 1:
                continue
            if q % 2 == 1:
                w = u.powmod((q**d - 1) // 2, g) - Poly.one(spec)
            else:
                # char 2: additive trace map sum u^(2^i) over the splitting field
                t = u % g
                acc = t
                for _ in range(spec.k * d - 1):
                    t = t * t % g
                    acc = (acc + t) % g
                w = acc
            if w.is_zero:
                continue
            h = g.gcd(w)
            if 0 < h.degree < g.degree:
                stack.append(h)
                stack.append(g // h)
                break
    return found


def factor_monic(f: Poly, seed: int = 0) -> FactorizationReport:
    """Complete irreducible factorization over F_q.

    Pipeline: squarefree split via gcd(f, f') (with p-th root extraction when
    the derivative vanishes), distinct-degree split via gcd with x^(q^d) - x,
    then seeded equal-degree split.  The factor multiset is independent of
    the seed; the run is bit-reproducible for a fixed seed.
    """
    if f.degree < 1:
        raise ValueError("factorization needs degree >= 1")
    rng = random.Random(seed)
    unit = f.leading
    work = f.monic()
    raw: list[tuple[Poly, int]] = []
    for part, mult in _squarefree_parts(work):
        for prod, d in _distinct_degree(part):
            for irr in _split_equal_degree(prod, d, rng):
                raw.append((irr, mult))
    return _build_report(f, unit, raw)


def brute_force_factor(f: Poly, cap: int = BRUTE_CAP) -> FactorizationReport:
    """Factor by trial division over all monic polynomials of degree up to
    deg(f)/2, in lexicographic order.  Independent of factor_monic."""
    if f.degree < 1:
        raise ValueError("factorization needs degree >= 1")
    spec = f.spec
    q = spec.q
    if q ** ((f.degree + 1) // 2) > cap:
        raise CapExceeded(
            f"brute-force factoring degree {f.degree} over F_{q} exceeds cap {cap}"
        )
    unit = f.leading
    work = f.monic()
    raw: list[tuple[Poly, int]] = []
    d = 1
    while work.degree >= 2 * d:
        for idx in range(q**d):
            digits = []
            v = idx
            for _ in range(d):
                digits.append(v % q)
                v //= q
            # lexicographic on (c_0, ..., c_{d-1}): c_0 is the most significant
            digits.reverse()
            cand = Poly.make(
                spec, [spec.element_by_index(c) for c in digits] + [spec.one]
            )
            mult = 0
            while True:
                quot, rem = divmod(work, cand)
                if not rem.is_zero:
                    break
                work = quot
                mult += 1
            if mult:
                raw.append((cand, mult))
            if work.degree < 2 * d:
                break
        d += 1
    if work.degree > 0:
        raw.append((work, 1))
    return _build_report(f, unit, raw)

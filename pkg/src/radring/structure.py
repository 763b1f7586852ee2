"""Structure verdicts: field/domain classification, power maps, splitting types.

Each operation here computes a prediction from the classification theory and
is differentially tested elsewhere against enumeration or against the
factorization oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from . import factor, kernels, numth
from .caps import ENUM_CAP
from .errors import CapExceeded, HypothesisViolation
from .factor import Poly
from .gfq import FieldSpec, FqElement

COMPOSITE_N = "COMPOSITE_N"
BINOMIAL_REDUCIBLE = "BINOMIAL_REDUCIBLE"
IRREDUCIBLE_OVER_PRIME = "IRREDUCIBLE_OVER_PRIME"


@dataclass(frozen=True)
class Reason:
    """A verdict step with its evidence (a factor of n, a polynomial factor, ...)."""

    code: str
    detail: dict

    def to_json(self) -> dict:
        return {"code": self.code, **self.detail}


@dataclass(frozen=True)
class FieldVerdict:
    """Field/domain status of Z_n[x]/(x^m - r) with the reasons that decided it.

    For finite commutative rings the two notions coincide, so is_field and
    is_domain are always equal.
    """

    n: int
    m: int
    r: int
    is_field: bool
    is_domain: bool
    reasons: tuple[Reason, ...]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "r": self.r,
            "is_field": self.is_field,
            "is_domain": self.is_domain,
            "reasons": [reason.to_json() for reason in self.reasons],
        }


class SplittingType(NamedTuple):
    """Predicted shape of the factorization of x^m - r over F_q (m | q-1).

    x^m - r splits into factor_count = m/t irreducibles, all of degree
    t = smallest positive integer with ord(r)*m dividing q^t - 1.
    """

    q: int
    m: int
    r: FqElement
    ord_r: int
    t: int
    factor_count: int


class RingDecomposition(NamedTuple):
    t: int
    copies: int
    unit_count_prediction: int


@dataclass(frozen=True)
class CountReport:
    """Predicted vs enumerated number of r making x^m - r irreducible."""

    q: int
    m: int
    M: int
    predicted: int
    enumerated: int | None

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "m": self.m,
            "M": self.M,
            "predicted": self.predicted,
            "enumerated": self.enumerated,
        }


def power_map_image(spec: FieldSpec, k: int, cap: int = ENUM_CAP) -> set[FqElement]:
    """The image of a -> a**k over all of F_q."""
    if spec.q > cap:
        raise CapExceeded(f"power map image over {spec.q} elements exceeds cap {cap}")
    if spec.k == 1:
        mask = kernels.power_image_mask(spec.p, k)
        return {spec.element(int(v)) for v in mask.nonzero()[0]}
    return {a**k for a in spec.elements(cap)}


def power_map_onto(p: int, m: int) -> bool:
    """Whether a -> a**m is onto Z_p; true exactly when gcd(p-1, m) = 1."""
    if not numth.is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    return math.gcd(p - 1, m) == 1


def has_linear_factor(spec: FieldSpec, m: int, r: FqElement, cap: int = ENUM_CAP) -> FqElement | None:
    """An a with a**m = r (so x - a divides x^m - r), or None if none exists."""
    for a in spec.elements(cap):
        if a**m == r:
            return a
    return None


def is_field(n: int, m: int, r: int, seed: int = 0) -> FieldVerdict:
    """Classify Z_n[x]/(x^m - r): a field iff n is prime and x^m - r is
    irreducible over Z_n.

    For m <= 3 the irreducibility branch is additionally cross-checked
    against the root criterion (reducible iff r is an m-th power).
    """
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    if m < 1:
        raise ValueError(f"degree must be >= 1, got {m}")
    if not numth.is_prime(n):
        smallest = numth.prime_factors(n)[0]
        reason = Reason(COMPOSITE_N, {"factor": smallest})
        return FieldVerdict(n, m, r % n, False, False, (reason,))
    spec = FieldSpec(n)
    r_el = spec.element(r)
    binomial = Poly.binomial(spec, m, r_el)
    irreducible = factor.is_irreducible(binomial)
    if m <= 3:
        has_root = has_linear_factor(spec, m, r_el) is not None
        if has_root == irreducible and m > 1:
            raise AssertionError(
                f"root criterion disagrees with the factor oracle for n={n}, m={m}, r={r}"
            )
    if irreducible:
        reason = Reason(IRREDUCIBLE_OVER_PRIME, {"binomial": str(binomial)})
        return FieldVerdict(n, m, r % n, True, True, (reason,))
    first = factor.factor_monic(binomial, seed).factors[0][0]
    reason = Reason(
        BINOMIAL_REDUCIBLE, {"factor": str(first), "factor_coeffs": first.coeff_ints()}
    )
    return FieldVerdict(n, m, r % n, False, False, (reason,))


def cubic_form_has_nontrivial_zero(p: int, r: int, cap: int = ENUM_CAP) -> tuple[int, int, int] | None:
    """First nonzero triple (lexicographic) where a0^3 + r*a1^3 + r^2*a2^3
    - 3*r*a0*a1*a2 vanishes mod p; exists exactly when r is a cube mod p."""
    if not numth.is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if p**3 > cap:
        raise CapExceeded(f"cubic form search over {p**3} triples exceeds cap {cap}")
    r %= p
    r2 = r * r % p
    for a0 in range(p):
        for a1 in range(p):
            for a2 in range(p):
                if a0 == 0 and a1 == 0 and a2 == 0:
                    continue
                v = (
                    a0 * a0 * a0 + r * a1 * a1 * a1 + r2 * a2 * a2 * a2
                    - 3 * r * a0 * a1 * a2
                ) % p
                if v == 0:
                    return (a0, a1, a2)
    return None


class PythagoreanClass(NamedTuple):
    is_pythagorean: bool
    zp_i_is_field: bool


def pythagorean_class(p: int) -> PythagoreanClass:
    """Whether p is a sum of two squares (p = 2 or p = 1 mod 4), and whether
    adjoining a square root of -1 to Z_p yields a field; the two are
    complementary, and the field side is recomputed independently."""
    if not numth.is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    is_pyth = p == 2 or p % 4 == 1
    field_side = is_field(p, 2, -1).is_field
    if field_side == is_pyth:
        raise AssertionError(f"sum-of-two-squares classification broke at p={p}")
    return PythagoreanClass(is_pyth, field_side)


def _require_m_divides(q: int, m: int):
    if m < 1:
        raise ValueError(f"degree must be >= 1, got {m}")
    if (q - 1) % m != 0:
        raise HypothesisViolation(
            f"m = {m} does not divide q - 1 = {q - 1}; no primitive m-th root of unity"
        )


def splitting_type(spec: FieldSpec, m: int, r: FqElement) -> SplittingType:
    """Equal-degree splitting data for x^m - r over F_q, requiring m | q - 1."""
    _require_m_divides(spec.q, m)
    if r.is_zero:
        raise ValueError("r must be nonzero")
    ord_r = r.order()
    t = numth.mult_order(spec.q, ord_r * m) if ord_r * m > 1 else 1
    if m % t != 0:
        raise AssertionError(f"degree {t} does not divide {m}; splitting theory broke")
    return SplittingType(spec.q, m, r, ord_r, t, m // t)


def ring_decomposition(spec: FieldSpec, m: int, r: FqElement) -> RingDecomposition:
    """F_q[x]/(x^m - r) is a product of m/t copies of F_{q^t}; the unit count
    prediction is (q^t - 1)^(m/t)."""
    st = splitting_type(spec, m, r)
    copies = st.factor_count
    return RingDecomposition(st.t, copies, (spec.q**st.t - 1) ** copies)


def is_kth_power(spec: FieldSpec, r: FqElement, k: int) -> bool:
    """Membership of nonzero r in the image of a -> a**k, by the subgroup
    criterion: r is a k-th power iff r^((q-1)/gcd(k, q-1)) = 1."""
    if r.is_zero:
        raise ValueError("use the power map image directly for zero")
    g = math.gcd(k, spec.q - 1)
    return r ** ((spec.q - 1) // g) == spec.one


def irreducible_binomial(spec: FieldSpec, m: int, r: FqElement) -> bool:
    """Whether x^m - r is irreducible (m | q - 1): true exactly when r avoids
    the image of every k-th power map with k | m, k > 1."""
    _require_m_divides(spec.q, m)
    if r.is_zero:
        raise ValueError("r must be nonzero")
    for k in numth.divisors(m):
        if k > 1 and is_kth_power(spec, r, k):
            return False
    return True


def count_irreducible(spec: FieldSpec, m: int, cap: int = ENUM_CAP) -> CountReport:
    """Number of r making x^m - r irreducible: phi(M) * (q-1)/M, where M is
    the unique multiple of m with rad(M) = rad(m) and gcd(M, (q-1)/M) = 1.

    When q is under the cap, also counts by enumeration over nonzero r.
    """
    q = spec.q
    _require_m_divides(q, m)
    M = 1
    for ell in numth.prime_factors(m) if m > 1 else []:
        M *= ell ** numth.valuation(q - 1, ell)
    if M % m != 0 or (m > 1 and numth.rad(M) != numth.rad(m)) or math.gcd(M, (q - 1) // M) != 1:
        raise AssertionError(f"counting modulus construction broke for q={q}, m={m}")
    predicted = numth.euler_phi(M) * (q - 1) // M
    enumerated = None
    if q <= cap:
        enumerated = 0
        for idx in range(1, q):
            if irreducible_binomial(spec, m, spec.element_by_index(idx)):
                enumerated += 1
    return CountReport(q, m, M, predicted, enumerated)


def squarefree_reducible(spec: FieldSpec, m: int, r: FqElement) -> tuple[int, FqElement]:
    """Certificate that x^m - r is reducible when m is squarefree and
    m does not divide q - 1: a prime d | m with d coprime to q - 1 and the
    d-th root b of r, so x^(m/d) - b divides x^m - r."""
    if r.is_zero:
        raise ValueError("r must be nonzero")
    if numth.rad(m) != m:
        raise ValueError(f"m = {m} is not squarefree")
    if (spec.q - 1) % m == 0:
        raise HypothesisViolation(
            f"m = {m} divides q - 1 = {spec.q - 1}; use the splitting type instead"
        )
    q = spec.q
    d = next((ell for ell in numth.prime_factors(m) if (q - 1) % ell != 0), None)
    if d is None:
        raise AssertionError(f"squarefree m = {m} with all prime factors dividing q - 1")
    # d coprime to q-1 makes the d-th power map a bijection
    b = r ** numth.inverse_mod(d, q - 1)
    if b**d != r:
        raise AssertionError(f"d-th root extraction broke for q={q}, m={m}")
    return d, b

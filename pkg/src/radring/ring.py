"""The ring of m-term sums over Z_n with an adjoined m-th root of r.

Elements are coefficient vectors (a_0, ..., a_{m-1}) standing for
a_0 + a_1*s + ... + a_{m-1}*s^(m-1) with s^m = r; the ring is the same thing
as Z_n[x]/(x^m - r).  Unit testing goes through the determinant of the
multiplication-by-a matrix: a is invertible exactly when that determinant is
coprime to n.  The determinant is computed in exact integer arithmetic
(fraction-free elimination) and only then reduced mod n, so the verdict stays
valid for composite n where division-based elimination would break down.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import kernels, numth
from .caps import ENUM_CAP, M_CAP
from .errors import CapExceeded, NotInvertible


@dataclass(frozen=True)
class RingParams:
    """The triple (n, m, r): coefficients mod n, root degree m, radicand r.

    r is normalized into [0, n) on construction, so negative input such as
    r = -1 for the Gaussian-style ring is accepted.
    """

    n: int
    m: int
    r: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"modulus must be >= 2, got {self.n}")
        if self.m < 1:
            raise ValueError(f"root degree must be >= 1, got {self.m}")
        object.__setattr__(self, "r", self.r % self.n)

    @property
    def size(self) -> int:
        """Number of ring elements, n**m."""
        return self.n**self.m

    def element(self, coeffs) -> "RingElement":
        cs = [c % self.n for c in coeffs]
        if len(cs) != self.m:
            raise ValueError(f"expected {self.m} coefficients, got {len(cs)}")
        return RingElement(self, tuple(cs))

    def element_by_index(self, idx: int) -> "RingElement":
        """Element at position idx in lexicographic coefficient order."""
        cs = [0] * self.m
        for j in range(self.m - 1, -1, -1):
            cs[j] = idx % self.n
            idx //= self.n
        return RingElement(self, tuple(cs))

    @property
    def zero(self) -> "RingElement":
        return RingElement(self, (0,) * self.m)

    @property
    def one(self) -> "RingElement":
        return RingElement(self, (1,) + (0,) * (self.m - 1))

    def elements(self, cap: int = ENUM_CAP) -> Iterator["RingElement"]:
        """All n**m elements in lexicographic coefficient order (zero first)."""
        if self.size > cap:
            raise CapExceeded(f"enumerating {self.size} elements exceeds cap {cap}")
        for idx in range(self.size):
            yield self.element_by_index(idx)

    def __repr__(self):
        return f"Z_{self.n}[x]/(x^{self.m}-{self.r})"


def make_params(n: int, m: int, r: int, m_cap: int = M_CAP) -> RingParams:
    """Validated ring parameters; r may be negative and is reduced mod n."""
    if m > m_cap:
        raise CapExceeded(f"root degree {m} exceeds the supported cap {m_cap}")
    return RingParams(n, m, r)


@dataclass(frozen=True)
class RingElement:
    """A coefficient vector over Z_n; index i is the coefficient of s^i."""

    params: RingParams
    coeffs: tuple[int, ...]

    def _check(self, other: "RingElement"):
        if self.params != other.params:
            raise ValueError(f"ring mismatch: {self.params!r} vs {other.params!r}")

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def index(self) -> int:
        out = 0
        for c in self.coeffs:
            out = out * self.params.n + c
        return out

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        n = self.params.n
        return RingElement(self.params, tuple((a + b) % n for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        n = self.params.n
        return RingElement(self.params, tuple((a - b) % n for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "RingElement":
        n = self.params.n
        return RingElement(self.params, tuple(-a % n for a in self.coeffs))

    def __mul__(self, other: "RingElement") -> "RingElement":
        """Product by the power rule: s^i * s^j wraps to r * s^((i+j) mod m)."""
        self._check(other)
        n, m, r = self.params.n, self.params.m, self.params.r
        out = [0] * m
        for i, ai in enumerate(self.coeffs):
            if ai == 0:
                continue
            for j, bj in enumerate(other.coeffs):
                k = i + j
                v = ai * bj
                if k >= m:
                    k -= m
                    v *= r
                out[k] = (out[k] + v) % n
        return RingElement(self.params, tuple(out))

    def __str__(self):
        return ",".join(str(c) for c in self.coeffs)


def mul_poly_oracle(a: RingElement, b: RingElement) -> RingElement:
    """Product via the quotient-ring route: multiply as polynomials of degree
    < m, then substitute x^m -> r.  Kept independent of RingElement.__mul__ so
    the two can be checked against each other."""
    a._check(b)
    n, m, r = a.params.n, a.params.m, a.params.r
    full = [0] * (2 * m - 1)
    for i, ai in enumerate(a.coeffs):
        if ai:
            for j, bj in enumerate(b.coeffs):
                full[i + j] += ai * bj
    for d in range(2 * m - 2, m - 1, -1):
        if full[d]:
            full[d - m] += full[d] * r
            full[d] = 0
    return RingElement(a.params, tuple(c % n for c in full[:m]))


def unital_matrix(a: RingElement) -> tuple[tuple[int, ...], ...]:
    """The m x m multiplication-by-a matrix over Z_n.

    Entry (i, j) is a_((i-j) mod m) times r when i < j; column j is the
    coefficient vector of a * s^j.
    """
    n, m, r = a.params.n, a.params.m, a.params.r
    return tuple(
        tuple(a.coeffs[(i - j) % m] * (r if i < j else 1) % n for j in range(m))
        for i in range(m)
    )


def _int_det(rows: list[list[int]]) -> int:
    # exact integer determinant, fraction-free (Bareiss) elimination with
    # row pivoting; arbitrary-precision ints, so no size limits
    m = len(rows)
    mat = [list(row) for row in rows]
    sign, prev = 1, 1
    for k in range(m - 1):
        if mat[k][k] == 0:
            for i in range(k + 1, m):
                if mat[i][k]:
                    mat[k], mat[i] = mat[i], mat[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = mat[k][k]
        for i in range(k + 1, m):
            lik = mat[i][k]
            for j in range(k + 1, m):
                mat[i][j] = (pk * mat[i][j] - lik * mat[k][j]) // prev
            mat[i][k] = 0
        prev = pk
    return sign * mat[m - 1][m - 1]


def unital_det(a: RingElement) -> int:
    """det of the multiplication matrix, reduced into [0, n)."""
    return _int_det([list(row) for row in unital_matrix(a)]) % a.params.n


def is_unit(a: RingElement) -> bool:
    """a is invertible iff gcd(det, n) = 1; valid for composite n as well."""
    return math.gcd(unital_det(a), a.params.n) == 1


def _first_row_cofactors(mat, m) -> list[int]:
    # cofactors C_{0i}: signed minors deleting row 0 and column i
    out = []
    for i in range(m):
        minor = [row[:i] + row[i + 1 :] for row in mat[1:]]
        d = _int_det(minor) if m > 1 else 1
        out.append(-d if i % 2 else d)
    return out


def inverse(a: RingElement) -> RingElement:
    """Multiplicative inverse, via the adjugate of the multiplication matrix.

    b = adj(A) e_0 / det only needs ring operations mod n, so it works for
    composite n too.  Raises NotInvertible (with det and gcd(det, n)) when a
    is not a unit.
    """
    n, m = a.params.n, a.params.m
    mat = [list(row) for row in unital_matrix(a)]
    det = _int_det(mat) % n
    g = math.gcd(det, n)
    if g != 1:
        raise NotInvertible(
            f"element {a} is not a unit: det = {det}, gcd(det, {n}) = {g}",
            det=det,
            gcd=g,
        )
    det_inv = numth.inverse_mod(det, n)
    cof = _first_row_cofactors(mat, m)
    b = RingElement(a.params, tuple(c * det_inv % n for c in cof))
    if (a * b).coeffs != a.params.one.coeffs:
        raise AssertionError(f"inverse check failed for {a} in {a.params!r}")
    return b


class _Unsearched:
    """Marker: non-unit whose annihilator search was skipped (ring above cap)."""

    __slots__ = ()

    def __repr__(self):
        return "WITNESS_UNSEARCHED"


WITNESS_UNSEARCHED = _Unsearched()


def zero_divisor_witness(a: RingElement, cap: int = ENUM_CAP):
    """A nonzero b with a*b = 0, searched in lexicographic order.

    Returns None when a is a unit (no witness exists), WITNESS_UNSEARCHED when
    a is not a unit but the ring is above the enumeration cap.
    """
    if a.is_zero:
        raise ValueError("the zero element is not a meaningful witness target")
    if is_unit(a):
        return None
    p = a.params
    if p.size > cap or not kernels.det_fits_int64(p.n, p.m):
        return WITNESS_UNSEARCHED
    idx = kernels.first_zero_divisor(p.n, p.m, p.r, np.array(a.coeffs, dtype=np.int64))
    if idx < 0:
        raise AssertionError(f"non-unit {a} has no annihilator; determinant logic is wrong")
    return p.element_by_index(int(idx))


def unit_flags(params: RingParams, cap: int = ENUM_CAP) -> np.ndarray:
    """Boolean unit indicator for every element, in index order."""
    kernels.check_kernel_size(params.n, params.m, cap)
    dets = kernels.unital_dets(params.n, params.m, params.r)
    return np.gcd(dets, params.n) == 1


def unit_count(params: RingParams, cap: int = ENUM_CAP) -> int:
    """Number of invertible elements, by exhaustive determinant census."""
    return int(unit_flags(params, cap).sum())


def project(a: RingElement, modulus: int) -> RingElement:
    """Reduction onto Z_modulus[x]/(x^m - r), for CRT factor comparisons."""
    target = RingParams(modulus, a.params.m, a.params.r % modulus)
    return target.element(a.coeffs)


def parse_coeffs(text: str, params: RingParams) -> RingElement:
    """Parse the comma-separated element format, e.g. '3,4'."""
    parts = [s.strip() for s in text.split(",")]
    try:
        values = [int(s) for s in parts]
    except ValueError as exc:
        raise ValueError(f"bad coefficient list {text!r}") from exc
    return params.element(values)


def element_to_json(a: RingElement) -> dict:
    return {
        "n": a.params.n,
        "m": a.params.m,
        "r": a.params.r,
        "coeffs": list(a.coeffs),
    }


def element_from_json(payload: dict) -> RingElement:
    params = RingParams(payload["n"], payload["m"], payload["r"])
    return params.element(payload["coeffs"])

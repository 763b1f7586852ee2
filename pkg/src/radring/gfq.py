"""Finite fields F_{p^k}, represented as polynomials modulo a stored irreducible.

Prime fields (k = 1) take a fast path with no modulus polynomial.  Extension
fields are built through :func:`find_irreducible`, which scans monic
candidates deterministically from a seed offset so that a given (p, k, seed)
always denotes the same field.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from . import numth
from .caps import ENUM_CAP
from .errors import CapExceeded


def _trim(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _poly_divmod(f: list[int], g: list[int], p: int) -> tuple[list[int], list[int]]:
    # dense int-list polynomials over Z_p, ascending coefficients
    rem = [c % p for c in f]
    _trim(rem)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = numth.inverse_mod(g[-1], p)
    dg = len(g) - 1
    quot = [0] * max(len(rem) - dg, 0)
    while len(rem) - 1 >= dg and rem:
        shift = len(rem) - 1 - dg
        factor = rem[-1] * inv_lead % p
        quot[shift] = factor
        for i, gi in enumerate(g):
            rem[shift + i] = (rem[shift + i] - factor * gi) % p
        _trim(rem)
    return quot, rem


def _poly_mul(f: list[int], g: list[int], p: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                out[i + j] = (out[i + j] + fi * gj) % p
    return _trim(out)


def _poly_sub(f: list[int], g: list[int], p: int) -> list[int]:
    out = [0] * max(len(f), len(g))
    for i, c in enumerate(f):
        out[i] = c % p
    for i, c in enumerate(g):
        out[i] = (out[i] - c) % p
    return _trim(out)


def _poly_inverse(a: list[int], modulus: list[int], p: int) -> list[int]:
    # extended Euclid over Z_p[x]: s with s*a == 1 (mod modulus)
    r0, r1 = list(modulus), _trim([c % p for c in a])
    s0, s1 = [], [1]
    while r1:
        q, rem = _poly_divmod(r0, r1, p)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1, p), p)
    if len(r0) != 1:
        raise ZeroDivisionError("element shares a factor with the field modulus")
    c = numth.inverse_mod(r0[0], p)
    return [x * c % p for x in s0]


@dataclass(frozen=True)
class FieldSpec:
    """A finite field F_{p^k}; for k > 1, arithmetic is mod ``modulus``.

    ``modulus`` holds ascending coefficients of a monic irreducible of degree
    exactly k over Z_p, and is None exactly when k = 1.
    """

    p: int
    k: int = 1
    modulus: tuple[int, ...] | None = None

    def __post_init__(self):
        if not numth.is_prime(self.p):
            raise ValueError(f"field characteristic must be prime, got {self.p}")
        if self.k < 1:
            raise ValueError(f"extension degree must be >= 1, got {self.k}")
        if self.k == 1:
            if self.modulus is not None:
                raise ValueError("prime fields carry no modulus polynomial")
            return
        if self.modulus is None:
            raise ValueError("k > 1 requires a modulus polynomial")
        mod = tuple(c % self.p for c in self.modulus)
        if len(mod) != self.k + 1 or mod[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {self.k}")
        object.__setattr__(self, "modulus", mod)
        from . import factor

        if not factor.is_irreducible(factor.Poly.from_ints(FieldSpec(self.p), mod)):
            raise ValueError(f"modulus {mod} is reducible over Z_{self.p}")

    @property
    def q(self) -> int:
        return self.p**self.k

    @classmethod
    def extension(cls, p: int, k: int, seed: int = 0) -> "FieldSpec":
        """F_{p^k} with a deterministically chosen modulus (see find_irreducible)."""
        if k == 1:
            return cls(p)
        return cls(p, k, find_irreducible(p, k, seed))

    def element(self, value: int | Iterable[int]) -> "FqElement":
        if isinstance(value, int):
            coeffs = (value % self.p,) + (0,) * (self.k - 1)
            return FqElement(self, coeffs)
        cs = [c % self.p for c in value]
        if len(cs) > self.k:
            raise ValueError(f"expected at most {self.k} coefficients, got {len(cs)}")
        cs += [0] * (self.k - len(cs))
        return FqElement(self, tuple(cs))

    def element_by_index(self, idx: int) -> "FqElement":
        """Element number idx in enumeration order (base-p digits, low first)."""
        cs = []
        for _ in range(self.k):
            cs.append(idx % self.p)
            idx //= self.p
        return FqElement(self, tuple(cs))

    @property
    def zero(self) -> "FqElement":
        return FqElement(self, (0,) * self.k)

    @property
    def one(self) -> "FqElement":
        return self.element(1)

    def elements(self, cap: int = ENUM_CAP) -> Iterator["FqElement"]:
        """All q elements exactly once, zero first."""
        if self.q > cap:
            raise CapExceeded(f"enumerating {self.q} field elements exceeds cap {cap}")
        for idx in range(self.q):
            yield self.element_by_index(idx)

    def __repr__(self):
        if self.k == 1:
            return f"F_{self.p}"
        return f"F_{self.q}<Z_{self.p}[x]/{list(self.modulus)}>"


@dataclass(frozen=True)
class FqElement:
    """An element of F_{p^k}, as k residue coefficients (ascending degree)."""

    spec: FieldSpec
    coeffs: tuple[int, ...]

    def _check(self, other: "FqElement"):
        if self.spec != other.spec:
            raise ValueError(f"field mismatch: {self.spec!r} vs {other.spec!r}")

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def value(self) -> int:
        """The residue value; only meaningful on prime fields."""
        if self.spec.k != 1:
            raise ValueError("value is defined for prime-field elements only")
        return self.coeffs[0]

    def index(self) -> int:
        """Position in enumeration order (inverse of element_by_index)."""
        out = 0
        for c in reversed(self.coeffs):
            out = out * self.spec.p + c
        return out

    def __add__(self, other: "FqElement") -> "FqElement":
        self._check(other)
        p = self.spec.p
        return FqElement(self.spec, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "FqElement") -> "FqElement":
        self._check(other)
        p = self.spec.p
        return FqElement(self.spec, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "FqElement":
        p = self.spec.p
        return FqElement(self.spec, tuple(-a % p for a in self.coeffs))

    def __mul__(self, other: "FqElement") -> "FqElement":
        self._check(other)
        spec = self.spec
        p = spec.p
        if spec.k == 1:
            return FqElement(spec, (self.coeffs[0] * other.coeffs[0] % p,))
        prod = _poly_mul(list(self.coeffs), list(other.coeffs), p)
        _, rem = _poly_divmod(prod, list(spec.modulus), p)
        rem += [0] * (spec.k - len(rem))
        return FqElement(spec, tuple(rem))

    def __pow__(self, e: int) -> "FqElement":
        if e < 0:
            return self.inverse() ** (-e)
        result = self.spec.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "FqElement":
        if self.is_zero:
            raise ZeroDivisionError("zero is not invertible")
        spec = self.spec
        if spec.k == 1:
            return FqElement(spec, (numth.inverse_mod(self.coeffs[0], spec.p),))
        inv = _poly_inverse(list(self.coeffs), list(spec.modulus), spec.p)
        inv += [0] * (spec.k - len(inv))
        return FqElement(spec, tuple(inv))

    def order(self) -> int:
        """Multiplicative order; divides q - 1."""
        if self.is_zero:
            raise ValueError("zero has no multiplicative order")
        h = self.spec.q - 1
        one = self.spec.one
        if h > 1:
            for prime, _ in numth.factorize(h):
                while h % prime == 0 and self ** (h // prime) == one:
                    h //= prime
        return h

    def __repr__(self):
        if self.spec.k == 1:
            return f"{self.coeffs[0]}@F_{self.spec.p}"
        return f"{list(self.coeffs)}@F_{self.spec.q}"


def find_irreducible(p: int, k: int, seed: int = 0) -> tuple[int, ...]:
    """A monic irreducible of degree k over Z_p, ascending coefficients.

    Candidates x^k + (lower part) are scanned in enumeration order of the
    lower part starting from ``seed`` (mod p^k) and wrapping, so the result
    is deterministic for a given seed.  Degree 1 always returns x.
    """
    if not numth.is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if k < 1:
        raise ValueError(f"degree must be >= 1, got {k}")
    if k == 1:
        return (0, 1)
    from . import factor

    base = FieldSpec(p)
    total = p**k
    start = seed % total
    for step in range(total):
        idx = (start + step) % total
        lower = []
        v = idx
        for _ in range(k):
            lower.append(v % p)
            v //= p
        cand = tuple(lower) + (1,)
        if factor.is_irreducible(factor.Poly.from_ints(base, cand)):
            return cand
    raise RuntimeError(f"no irreducible of degree {k} over Z_{p} found")

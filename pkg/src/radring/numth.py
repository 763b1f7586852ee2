"""Exact integer number theory: primality, factorization, totients, orders.

Everything here is deterministic and exact for inputs up to at least 64 bits.
"""

from __future__ import annotations

import math

from .caps import TRIAL_FACTOR_LIMIT
from .errors import CapExceeded

# Witness set proven sufficient for deterministic Miller-Rabin below 3.3e24,
# comfortably covering 64-bit inputs.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: return (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g."""
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def inverse_mod(a: int, n: int) -> int:
    """Inverse of a modulo n (n >= 2, gcd(a, n) = 1)."""
    g, x, _ = egcd(a % n, n)
    if g != 1:
        raise ValueError(f"{a} is not invertible mod {n}")
    return x % n


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin over a proven witness set)."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization as (prime, exponent) pairs with primes increasing.

    Trial division; inputs above 2**48 are rejected rather than silently
    taking forever.
    """
    if n < 2:
        raise ValueError(f"factorize needs n >= 2, got {n}")
    if n > TRIAL_FACTOR_LIMIT:
        raise CapExceeded(f"factorize supports n <= 2**48, got {n}")
    out: list[tuple[int, int]] = []
    rem = n
    for p in (2, 3):
        if rem % p == 0:
            e = 0
            while rem % p == 0:
                rem //= p
                e += 1
            out.append((p, e))
    f = 5
    while f * f <= rem:
        for p in (f, f + 2):
            if rem % p == 0:
                e = 0
                while rem % p == 0:
                    rem //= p
                    e += 1
                out.append((p, e))
        f += 6
    if rem > 1:
        out.append((rem, 1))
    return out


def prime_factors(n: int) -> list[int]:
    """Distinct primes dividing n, increasing."""
    return [p for p, _ in factorize(n)]


def divisors(n: int) -> list[int]:
    """All positive divisors of n, sorted."""
    if n < 1:
        raise ValueError(f"divisors needs n >= 1, got {n}")
    if n == 1:
        return [1]
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def valuation(n: int, p: int) -> int:
    """Largest e with p**e dividing n (n >= 1)."""
    if n < 1:
        raise ValueError(f"valuation needs n >= 1, got {n}")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def euler_phi(n: int) -> int:
    """Euler's totient: count of 1 <= a <= n coprime to n."""
    if n < 1:
        raise ValueError(f"euler_phi needs n >= 1, got {n}")
    if n == 1:
        return 1
    out = 1
    for p, e in factorize(n):
        out *= (p - 1) * p ** (e - 1)
    return out


def rad(n: int) -> int:
    """Product of the distinct primes dividing n; rad(1) = 1."""
    if n < 1:
        raise ValueError(f"rad needs n >= 1, got {n}")
    if n == 1:
        return 1
    out = 1
    for p in prime_factors(n):
        out *= p
    return out


def mult_order(a: int, b: int) -> int:
    """Least h >= 1 with a**h == 1 (mod b).

    Computed by factoring euler_phi(b) and stripping prime factors, not by
    naive powering, so repeated calls inside sweeps stay cheap.
    """
    if b < 2:
        raise ValueError(f"modulus must be >= 2, got {b}")
    a %= b
    if math.gcd(a, b) != 1:
        raise ValueError(f"{a} is not invertible mod {b}")
    h = euler_phi(b)
    if h > 1:
        for p, _ in factorize(h):
            while h % p == 0 and pow(a, h // p, b) == 1:
                h //= p
    return h


def crt_split(n: int) -> list[int]:
    """Pairwise-coprime prime-power moduli whose product is n."""
    if n < 2:
        raise ValueError(f"crt_split needs n >= 2, got {n}")
    return [p**e for p, e in factorize(n)]


def primes_upto(limit: int) -> list[int]:
    """All primes <= limit (simple sieve, for building sweep grids)."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(limit + 1) if sieve[i]]

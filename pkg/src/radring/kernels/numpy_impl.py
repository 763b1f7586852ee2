"""Pure-numpy implementations of the sweep kernels.

This is the fallback backend (``RADRING_BACKEND=numpy``) and the reference
the numba backend is checked against.  Everything stays in int64; callers
keep sizes inside the documented caps, which also bounds every intermediate
well below 2**63 (see ``det_fits_int64``).

Element indexing convention: the coefficient vector (a_0, ..., a_{m-1}) maps
to index sum(a_j * n**(m-1-j)), so index order equals lexicographic order on
coefficient vectors and index 0 is the zero element.
"""

from __future__ import annotations

import numpy as np

_CHUNK = 1 << 14


def weights(n: int, m: int) -> np.ndarray:
    """Encoding weights; coefficient 0 is the most significant digit."""
    return np.array([n ** (m - 1 - j) for j in range(m)], dtype=np.int64)


def element_table(n: int, m: int, lo: int = 0, hi: int | None = None) -> np.ndarray:
    """Coefficient vectors of the elements with index lo..hi-1, one per row."""
    if hi is None:
        hi = n**m
    idx = np.arange(lo, hi, dtype=np.int64)
    out = np.empty((idx.size, m), dtype=np.int64)
    for j in range(m):
        out[:, j] = (idx // n ** (m - 1 - j)) % n
    return out


def encode_rows(rows: np.ndarray, n: int) -> np.ndarray:
    """Indices of the given coefficient rows."""
    return rows @ weights(n, rows.shape[-1])


def _mul_rows(n, m, r, a, rows):
    # a times every row, by the root power rule: the i+j >= m overflow wraps
    # back with an extra factor r
    out = np.zeros(rows.shape, dtype=np.int64)
    for i in range(m):
        ai = int(a[i])
        if ai == 0:
            continue
        for j in range(m):
            k = i + j
            s = ai if k < m else ai * r % n
            out[:, k % m] += s * rows[:, j]
    out %= n
    return out


def _mul_rows_poly(n, m, r, a, rows):
    # independent route: full degree-(2m-2) product, then substitute x^m -> r
    full = np.zeros((rows.shape[0], 2 * m - 1), dtype=np.int64)
    for i in range(m):
        ai = int(a[i])
        if ai:
            full[:, i : i + m] += ai * rows
    for d in range(2 * m - 2, m - 1, -1):
        full[:, d - m] += full[:, d] * r
    out = full[:, :m]
    out %= n
    return out


def mul_with_all(n: int, m: int, r: int, a) -> np.ndarray:
    """Products of the fixed element a with every ring element (power rule)."""
    return _mul_rows(n, m, r, np.asarray(a, dtype=np.int64), element_table(n, m))


def _batch_det(mats):
    # Exact integer determinants by fraction-free (Bareiss) elimination with
    # per-matrix row pivoting.  Matrices that go singular are zeroed out and
    # report 0; their lanes stay bounded.
    nmat, m, _ = mats.shape
    if m == 1:
        return mats[:, 0, 0].copy()
    mat = np.array(mats, dtype=np.int64, order="C", copy=True)
    sign = np.ones(nmat, dtype=np.int64)
    alive = np.ones(nmat, dtype=bool)
    prev = np.ones(nmat, dtype=np.int64)
    for k in range(m - 1):
        nz = mat[:, k:, k] != 0
        has = nz.any(axis=1)
        died = alive & ~has
        if died.any():
            mat[died] = 0
            alive &= has
        piv = nz.argmax(axis=1) + k
        swap = alive & (piv != k)
        if swap.any():
            idx = np.nonzero(swap)[0]
            pr = piv[idx]
            tmp = mat[idx, k, :].copy()
            mat[idx, k, :] = mat[idx, pr, :]
            mat[idx, pr, :] = tmp
            sign[idx] = -sign[idx]
        pk = np.where(alive, mat[:, k, k], 1)
        sub = mat[:, k + 1 :, k + 1 :]
        lft = mat[:, k + 1 :, k]
        top = mat[:, k, k + 1 :]
        mat[:, k + 1 :, k + 1 :] = (
            pk[:, None, None] * sub - lft[:, :, None] * top[:, None, :]
        ) // prev[:, None, None]
        mat[:, k + 1 :, k] = 0
        prev = pk
    return np.where(alive, sign * mat[:, -1, -1], 0)


def unital_dets(n: int, m: int, r: int) -> np.ndarray:
    """Multiplication-matrix determinant mod n of every ring element."""
    total = n**m
    out = np.empty(total, dtype=np.int64)
    ii, jj = np.meshgrid(np.arange(m), np.arange(m), indexing="ij")
    pos = (ii - jj) % m
    fac = np.where(ii < jj, r % n, 1).astype(np.int64)
    for lo in range(0, total, _CHUNK):
        rows = element_table(n, m, lo, min(lo + _CHUNK, total))
        mats = rows[:, pos] * fac % n
        out[lo : lo + rows.shape[0]] = _batch_det(mats) % n
    return out


def inverse_exists_flags(n: int, m: int, r: int) -> tuple[np.ndarray, int]:
    """Brute-force invertibility flag per element, plus total products examined.

    For each nonzero a, candidate inverses are scanned in index order and the
    scan stops at the first product equal to 1.
    """
    total = n**m
    flags = np.zeros(total, dtype=bool)
    table = element_table(n, m)
    one = np.zeros(m, dtype=np.int64)
    one[0] = 1
    scanned = 0
    for ia in range(1, total):
        prods = _mul_rows(n, m, r, table[ia], table[1:])
        hits = np.nonzero((prods == one).all(axis=1))[0]
        if hits.size:
            flags[ia] = True
            scanned += int(hits[0]) + 1
        else:
            scanned += total - 1
    return flags, scanned


def first_zero_divisor(n: int, m: int, r: int, a) -> int:
    """Index of the lexicographically first nonzero b with a*b = 0, or -1."""
    total = n**m
    a = np.asarray(a, dtype=np.int64)
    for lo in range(1, total, _CHUNK):
        rows = element_table(n, m, lo, min(lo + _CHUNK, total))
        prods = _mul_rows(n, m, r, a, rows)
        hits = np.nonzero(~prods.any(axis=1))[0]
        if hits.size:
            return lo + int(hits[0])
    return -1


def find_zero_divisor_pair(n: int, m: int, r: int) -> tuple[int, int]:
    """First pair (ia, ib), both nonzero, ia <= ib, with product 0; (-1, -1) if none."""
    total = n**m
    table = element_table(n, m)
    for ia in range(1, total):
        prods = _mul_rows(n, m, r, table[ia], table[ia:])
        hits = np.nonzero(~prods.any(axis=1))[0]
        if hits.size:
            return ia, ia + int(hits[0])
    return -1, -1


def mul_pair_scan(n: int, m: int, r: int) -> tuple[int, int, int]:
    """Power-rule vs polynomial-reduction products over all pairs ia <= ib.

    Returns (pairs_checked, bad_ia, bad_ib); bad indices are -1 when the two
    routes agree everywhere.
    """
    total = n**m
    table = element_table(n, m)
    pairs = 0
    for ia in range(total):
        rows = table[ia:]
        f = _mul_rows(n, m, r, table[ia], rows)
        g = _mul_rows_poly(n, m, r, table[ia], rows)
        bad = np.nonzero((f != g).any(axis=1))[0]
        if bad.size:
            return pairs + int(bad[0]) + 1, ia, ia + int(bad[0])
        pairs += rows.shape[0]
    return pairs, -1, -1


def det_mult_scan(n: int, m: int, r: int, dets: np.ndarray) -> tuple[int, int, int]:
    """Check det(a*b) = det(a)*det(b) mod n over all pairs ia <= ib."""
    total = n**m
    table = element_table(n, m)
    w = weights(n, m)
    pairs = 0
    for ia in range(total):
        rows = table[ia:]
        prod_idx = _mul_rows(n, m, r, table[ia], rows) @ w
        lhs = dets[prod_idx]
        rhs = dets[ia] * dets[ia:] % n
        bad = np.nonzero(lhs != rhs)[0]
        if bad.size:
            return pairs + int(bad[0]) + 1, ia, ia + int(bad[0])
        pairs += rows.shape[0]
    return pairs, -1, -1


def power_image_mask(p: int, k: int) -> np.ndarray:
    """Boolean mask over Z_p marking the image of x -> x**k."""
    x = np.arange(p, dtype=np.int64)
    acc = np.ones(p, dtype=np.int64)
    base = x % p
    e = k
    while e:
        if e & 1:
            acc = acc * base % p
        base = base * base % p
        e >>= 1
    mask = np.zeros(p, dtype=bool)
    mask[acc] = True
    return mask

"""Numba implementations of the sweep kernels (the default backend).

Same contracts, same indexing convention and same scan orders as
``numpy_impl``; the two backends must be interchangeable bit for bit.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def _decode(idx, n, m, out):
    for j in range(m - 1, -1, -1):
        out[j] = idx % n
        idx //= n


@njit(cache=True, nogil=True)
def _table(n, m):
    # all coefficient vectors in index order, built as a base-n counter so the
    # hot pair scans below never divide
    total = n**m
    out = np.empty((total, m), dtype=np.int64)
    row = np.zeros(m, dtype=np.int64)
    for e in range(total):
        for k in range(m):
            out[e, k] = row[k]
        j = m - 1
        while j >= 0:
            row[j] += 1
            if row[j] == n:
                row[j] = 0
                j -= 1
            else:
                break
    return out


@njit(cache=True, nogil=True)
def _mul(n, m, r, a, b, out):
    for k in range(m):
        out[k] = 0
    for i in range(m):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(m):
            k = i + j
            v = ai * b[j]
            if k >= m:
                k -= m
                v = v * r
            out[k] = (out[k] + v) % n


@njit(cache=True, nogil=True)
def _mul_poly(n, m, r, a, b, full, out):
    for d in range(2 * m - 1):
        full[d] = 0
    for i in range(m):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(m):
            full[i + j] += ai * b[j]
    for d in range(2 * m - 2, m - 1, -1):
        full[d - m] += full[d] * r
    for k in range(m):
        out[k] = full[k] % n


@njit(cache=True, nogil=True)
def _det_bareiss(mat, m):
    sign = 1
    prev = 1
    for k in range(m - 1):
        if mat[k, k] == 0:
            found = -1
            for i in range(k + 1, m):
                if mat[i, k] != 0:
                    found = i
                    break
            if found < 0:
                return 0
            for j in range(m):
                t = mat[k, j]
                mat[k, j] = mat[found, j]
                mat[found, j] = t
            sign = -sign
        pk = mat[k, k]
        for i in range(k + 1, m):
            lik = mat[i, k]
            for j in range(k + 1, m):
                mat[i, j] = (pk * mat[i, j] - lik * mat[k, j]) // prev
            mat[i, k] = 0
        prev = pk
    return sign * mat[m - 1, m - 1]


@njit(cache=True, nogil=True)
def unital_dets(n, m, r):
    total = n**m
    out = np.empty(total, dtype=np.int64)
    a = np.empty(m, dtype=np.int64)
    mat = np.empty((m, m), dtype=np.int64)
    for e in range(total):
        _decode(e, n, m, a)
        for i in range(m):
            for j in range(m):
                v = a[(i - j) % m]
                if i < j:
                    v = v * r % n
                mat[i, j] = v
        out[e] = _det_bareiss(mat, m) % n
    return out


@njit(cache=True, nogil=True)
def mul_with_all(n, m, r, a):
    total = n**m
    out = np.empty((total, m), dtype=np.int64)
    av = np.empty(m, dtype=np.int64)
    b = np.empty(m, dtype=np.int64)
    c = np.empty(m, dtype=np.int64)
    for i in range(m):
        av[i] = a[i]
    for e in range(total):
        _decode(e, n, m, b)
        _mul(n, m, r, av, b, c)
        for k in range(m):
            out[e, k] = c[k]
    return out


@njit(cache=True, nogil=True)
def _mul_raw(m, r, a, b, c):
    # unreduced wrap-rule product; every |entry| stays below m * n**3, so the
    # caller may reduce lazily
    for k in range(m):
        c[k] = 0
    for i in range(m):
        ai = a[i]
        if ai == 0:
            continue
        air = ai * r
        for j in range(m):
            k = i + j
            if k >= m:
                c[k - m] += air * b[j]
            else:
                c[k] += ai * b[j]


@njit(cache=True, nogil=True)
def inverse_exists_flags(n, m, r):
    total = n**m
    tab = _table(n, m)
    flags = np.zeros(total, dtype=np.bool_)
    c = np.empty(m, dtype=np.int64)
    scanned = 0
    for ia in range(1, total):
        a = tab[ia]
        for ib in range(1, total):
            _mul_raw(m, r, a, tab[ib], c)
            scanned += 1
            good = c[0] % n == 1
            if good:
                for k in range(1, m):
                    if c[k] % n != 0:
                        good = False
                        break
            if good:
                flags[ia] = True
                break
    return flags, scanned


@njit(cache=True, nogil=True)
def first_zero_divisor(n, m, r, a):
    total = n**m
    av = np.empty(m, dtype=np.int64)
    b = np.empty(m, dtype=np.int64)
    c = np.empty(m, dtype=np.int64)
    for i in range(m):
        av[i] = a[i]
    for ib in range(1, total):
        _decode(ib, n, m, b)
        _mul_raw(m, r, av, b, c)
        zero = True
        for k in range(m):
            if c[k] % n != 0:
                zero = False
                break
        if zero:
            return ib
    return -1


@njit(cache=True, nogil=True)
def find_zero_divisor_pair(n, m, r):
    total = n**m
    tab = _table(n, m)
    c = np.empty(m, dtype=np.int64)
    for ia in range(1, total):
        a = tab[ia]
        for ib in range(ia, total):
            _mul_raw(m, r, a, tab[ib], c)
            zero = True
            for k in range(m):
                if c[k] % n != 0:
                    zero = False
                    break
            if zero:
                return ia, ib
    return -1, -1


@njit(cache=True, nogil=True)
def mul_pair_scan(n, m, r):
    total = n**m
    tab = _table(n, m)
    c1 = np.empty(m, dtype=np.int64)
    c2 = np.empty(m, dtype=np.int64)
    full = np.empty(2 * m - 1, dtype=np.int64)
    pairs = 0
    for ia in range(total):
        a = tab[ia]
        for ib in range(ia, total):
            b = tab[ib]
            _mul(n, m, r, a, b, c1)
            _mul_poly(n, m, r, a, b, full, c2)
            pairs += 1
            for k in range(m):
                if c1[k] != c2[k]:
                    return pairs, ia, ib
    return pairs, -1, -1


@njit(cache=True, nogil=True)
def det_mult_scan(n, m, r, dets):
    total = n**m
    tab = _table(n, m)
    c = np.empty(m, dtype=np.int64)
    pairs = 0
    for ia in range(total):
        a = tab[ia]
        da = dets[ia]
        for ib in range(ia, total):
            _mul_raw(m, r, a, tab[ib], c)
            idx = 0
            for k in range(m):
                idx = idx * n + c[k] % n
            pairs += 1
            if dets[idx] != da * dets[ib] % n:
                return pairs, ia, ib
    return pairs, -1, -1


@njit(cache=True, nogil=True)
def power_image_mask(p, k):
    mask = np.zeros(p, dtype=np.bool_)
    for x in range(p):
        acc = 1
        base = x % p
        e = k
        while e:
            if e & 1:
                acc = acc * base % p
            base = base * base % p
            e >>= 1
        mask[acc] = True
    return mask

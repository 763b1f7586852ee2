"""Hot sweep kernels with a numba backend and a pure-numpy fallback.

Backend selection happens once at import time from the environment variable
``RADRING_BACKEND``:

* unset or ``auto`` -- numba when importable, numpy otherwise
* ``numba``         -- force numba (ImportError if unavailable)
* ``numpy``         -- force the vectorized numpy fallback

Both backends implement identical contracts, identical element indexing and
identical scan orders, so swapping them never changes any result.  See
``benchmarks/bench_kernels.py`` for a speed comparison.
"""

from __future__ import annotations

import os

from ..errors import CapExceeded
from . import numpy_impl
from .numpy_impl import element_table, encode_rows, weights

_requested = os.environ.get("RADRING_BACKEND", "auto").strip().lower() or "auto"

if _requested == "auto":
    try:
        from . import numba_impl as _impl
    except ImportError:
        _impl = numpy_impl
elif _requested == "numba":
    from . import numba_impl as _impl
elif _requested == "numpy":
    _impl = numpy_impl
else:
    raise RuntimeError(
        f"RADRING_BACKEND must be 'numba', 'numpy' or 'auto', got {_requested!r}"
    )

BACKEND = "numpy" if _impl is numpy_impl else "numba"

unital_dets = _impl.unital_dets
mul_with_all = _impl.mul_with_all
inverse_exists_flags = _impl.inverse_exists_flags
first_zero_divisor = _impl.first_zero_divisor
find_zero_divisor_pair = _impl.find_zero_divisor_pair
mul_pair_scan = _impl.mul_pair_scan
det_mult_scan = _impl.det_mult_scan
power_image_mask = _impl.power_image_mask


def det_fits_int64(n: int, m: int) -> bool:
    """Whether Bareiss intermediates (bounded by Hadamard) stay inside int64."""
    bound = 1
    for _ in range(m):
        bound *= n - 1
    # m**(m/2) pivot growth factor, rounded up via m**((m+1)//2)
    for _ in range((m + 1) // 2):
        bound *= m
    return bound < 2**62


def check_kernel_size(n: int, m: int, cap: int) -> int:
    """Validate an enumeration request; returns the element count n**m."""
    total = n**m
    if total > cap:
        raise CapExceeded(f"{n}**{m} = {total} elements exceeds the cap of {cap}")
    if not det_fits_int64(n, m):
        raise CapExceeded(
            f"determinant sweep for n={n}, m={m} would overflow 64-bit intermediates"
        )
    return total


__all__ = [
    "BACKEND",
    "check_kernel_size",
    "det_fits_int64",
    "det_mult_scan",
    "element_table",
    "encode_rows",
    "find_zero_divisor_pair",
    "first_zero_divisor",
    "inverse_exists_flags",
    "mul_pair_scan",
    "mul_with_all",
    "power_image_mask",
    "unital_dets",
    "weights",
]

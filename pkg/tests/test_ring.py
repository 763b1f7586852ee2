import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from radring import numth, ring
from radring.errors import CapExceeded, NotInvertible
from radring.ring import WITNESS_UNSEARCHED, make_params, mul_poly_oracle


def test_make_params_normalizes_r():
    assert make_params(5, 2, -1).r == 4
    assert make_params(7, 3, 2).r == 2
    assert make_params(13, 4, 19).r == 6
    with pytest.raises(ValueError):
        make_params(1, 2, 0)
    with pytest.raises(ValueError):
        make_params(5, 0, 1)
    with pytest.raises(CapExceeded):
        make_params(5, 13, 1)


def test_add_examples():
    gauss = make_params(5, 2, -1)
    assert (gauss.element([3, 4]) + gauss.element([2, 1])).is_zero
    z7 = make_params(7, 3, 2)
    assert (z7.element([1, 1, 1]) + z7.element([6, 6, 6])).is_zero
    a = z7.element([2, 5, 0])
    assert a + z7.zero == a


def test_mul_examples():
    gauss = make_params(5, 2, -1)
    a = gauss.element([3, 4])
    conj = gauss.element([3, -4])
    assert (a * conj).is_zero
    z7 = make_params(7, 2, 3)
    assert (z7.element([2, 3]) * z7.element([6, 5])).coeffs == (1, 0)
    assert a * gauss.one == a


def test_mul_poly_oracle_examples():
    p54 = make_params(5, 4, 2)
    s2 = p54.element([0, 0, 1, 0])
    s3 = p54.element([0, 0, 0, 1])
    assert mul_poly_oracle(s2, s3).coeffs == (0, 2, 0, 0)
    assert (s2 * s3).coeffs == (0, 2, 0, 0)
    assert mul_poly_oracle(p54.zero, s3).is_zero


@pytest.mark.parametrize("n,m", [(5, 2), (7, 2), (3, 3), (2, 5), (6, 2), (4, 3)])
def test_mul_equals_oracle_exhaustive(n, m):
    for r in range(n):
        params = ring.RingParams(n, m, r)
        els = list(params.elements())
        for a in els:
            for b in els:
                assert a * b == mul_poly_oracle(a, b)


def test_mul_equals_oracle_random_large():
    rng = random.Random(7)
    for _ in range(100_000):
        n = rng.randrange(2, 1000)
        m = rng.randrange(1, 7)
        params = ring.RingParams(n, m, rng.randrange(n))
        a = params.element([rng.randrange(n) for _ in range(m)])
        b = params.element([rng.randrange(n) for _ in range(m)])
        assert a * b == mul_poly_oracle(a, b)


def test_params_mismatch_rejected():
    with pytest.raises(ValueError):
        make_params(5, 2, 1).element([1, 2]) * make_params(7, 2, 1).element([1, 2])


def test_unital_matrix_shapes():
    # m = 2: [[a0, r a1], [a1, a0]]
    p = make_params(7, 2, 3)
    a = p.element([2, 5])
    assert ring.unital_matrix(a) == ((2, 3 * 5 % 7), (5, 2))
    # m = 3 display
    p3 = make_params(11, 3, 4)
    a3 = p3.element([2, 3, 5])
    r = 4
    assert ring.unital_matrix(a3) == (
        (2, r * 5 % 11, r * 3 % 11),
        (3, 2, r * 5 % 11),
        (5, 3, 2),
    )
    assert ring.unital_matrix(p3.one) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


@pytest.mark.parametrize("n,m,r", [(5, 2, 4), (7, 3, 2), (13, 4, 6), (6, 3, 2), (9, 2, 5)])
def test_unital_matrix_columns_are_shift_products(n, m, r):
    params = ring.RingParams(n, m, r)
    rng = random.Random(n * 100 + m)
    for _ in range(25):
        a = params.element([rng.randrange(n) for _ in range(m)])
        mat = ring.unital_matrix(a)
        for j in range(m):
            power = params.element([0] * j + [1] + [0] * (m - 1 - j))
            col = tuple(mat[i][j] for i in range(m))
            assert col == (a * power).coeffs


@pytest.mark.parametrize("n,m,r", [(5, 2, 4), (7, 2, 3), (7, 3, 2), (6, 2, 3), (12, 3, 5)])
def test_unital_matrix_multiplicative(n, m, r):
    params = ring.RingParams(n, m, r)
    rng = random.Random(m * 1000 + n)
    for _ in range(50):
        a = params.element([rng.randrange(n) for _ in range(m)])
        b = params.element([rng.randrange(n) for _ in range(m)])
        ma = np.array(ring.unital_matrix(a), dtype=object)
        mb = np.array(ring.unital_matrix(b), dtype=object)
        mab = np.array(ring.unital_matrix(a * b), dtype=object)
        assert np.array_equal((ma @ mb) % n, mab)


def test_unital_det_examples():
    gauss = make_params(5, 2, -1)
    assert ring.unital_det(gauss.element([3, 4])) == 0
    z7 = make_params(7, 2, 3)
    assert ring.unital_det(z7.element([2, 3])) == 5
    z7c = make_params(7, 3, 2)
    assert ring.unital_det(z7c.element([1, 1, 1])) == 1
    # r = 0 collapses to a lower-triangular matrix
    p = make_params(9, 4, 0)
    for a0 in range(9):
        assert ring.unital_det(p.element([a0, 3, 5, 7])) == pow(a0, 4, 9)
    # m = 1 is Z_n itself
    p1 = make_params(10, 1, 0)
    assert ring.unital_det(p1.element([7])) == 7


@given(st.integers(2, 2000), st.sampled_from([2, 3]), st.data())
@settings(max_examples=300)
def test_closed_form_determinants(n, m, data):
    r = data.draw(st.integers(0, n - 1))
    coeffs = [data.draw(st.integers(0, n - 1)) for _ in range(m)]
    params = ring.RingParams(n, m, r)
    det = ring.unital_det(params.element(coeffs))
    if m == 2:
        a0, a1 = coeffs
        assert det == (a0 * a0 - r * a1 * a1) % n
    else:
        a0, a1, a2 = coeffs
        assert det == (a0**3 + r * a1**3 + r * r * a2**3 - 3 * r * a0 * a1 * a2) % n


def test_is_unit_examples():
    assert not ring.is_unit(make_params(5, 2, -1).element([3, 4]))
    assert ring.is_unit(make_params(7, 2, 3).element([2, 3]))
    assert ring.is_unit(make_params(11, 3, 2).one)


def test_inverse_examples():
    z7 = make_params(7, 2, 3)
    assert ring.inverse(z7.element([2, 3])).coeffs == (6, 5)
    assert ring.inverse(z7.one) == z7.one
    z13 = make_params(13, 3, 5)
    assert ring.inverse(z13.element([0, 1, 0])).coeffs == (0, 0, 8)
    with pytest.raises(NotInvertible) as err:
        ring.inverse(make_params(5, 2, -1).element([3, 4]))
    assert err.value.det == 0 and err.value.gcd == 5


@pytest.mark.parametrize("n,m,r", [(5, 2, 4), (6, 2, 3), (7, 3, 2), (4, 3, 2), (12, 2, 5)])
def test_inverse_round_trip_all_units(n, m, r):
    params = ring.RingParams(n, m, r)
    for a in params.elements():
        if a.is_zero:
            continue
        if ring.is_unit(a):
            assert a * ring.inverse(a) == params.one
        else:
            with pytest.raises(NotInvertible):
                ring.inverse(a)


def test_zero_divisor_witness():
    gauss = make_params(5, 2, -1)
    a = gauss.element([3, 4])
    w = ring.zero_divisor_witness(a)
    assert w is not None and w is not WITNESS_UNSEARCHED
    assert not w.is_zero and (a * w).is_zero
    # units have no witness
    assert ring.zero_divisor_witness(make_params(7, 2, 3).element([2, 3])) is None
    # 2 + i is also annihilated by something
    b = gauss.element([2, 1])
    wb = ring.zero_divisor_witness(b)
    assert not wb.is_zero and (b * wb).is_zero
    with pytest.raises(ValueError):
        ring.zero_divisor_witness(gauss.zero)


def test_zero_divisor_witness_above_cap_marker():
    big = make_params(101, 3, 5)  # 101^3 > the tiny cap below, and 5 is a cube mod 101?
    # pick a non-unit: the root generator s has det r^... use an element with det 0 mod 101
    # s is always a unit when r != 0, so use a known zero divisor via a linear factor
    # x^3 - 27 has root 3: (s - 3) is a zero divisor
    params = ring.RingParams(101, 3, 27)
    a = params.element([-3, 1, 0])
    res = ring.zero_divisor_witness(a, cap=1000)
    assert res is WITNESS_UNSEARCHED
    assert repr(res) == "WITNESS_UNSEARCHED"


def test_witness_is_lexicographically_first():
    gauss = make_params(5, 2, -1)
    a = gauss.element([3, 4])
    w = ring.zero_divisor_witness(a)
    first = next(b for b in gauss.elements() if not b.is_zero and (a * b).is_zero)
    assert w == first


def test_unit_count_examples():
    assert ring.unit_count(make_params(3, 2, 2)) == 8
    assert ring.unit_count(make_params(7, 2, 3)) == 48
    assert ring.unit_count(make_params(13, 3, 5)) == 1728
    with pytest.raises(CapExceeded):
        ring.unit_count(make_params(101, 3, 5), cap=1000)


@pytest.mark.parametrize("n,m,r", [(5, 2, 4), (7, 2, 3), (4, 2, 1), (6, 2, 5), (8, 3, 2)])
def test_unit_count_matches_element_loop(n, m, r):
    params = ring.RingParams(n, m, r)
    by_loop = sum(1 for a in params.elements() if ring.is_unit(a))
    assert ring.unit_count(params) == by_loop


@pytest.mark.parametrize("n", [6, 12, 15, 45])
def test_crt_unit_compatibility(n, m=2):
    for r in range(n):
        params = ring.RingParams(n, m, r)
        for a in params.elements():
            projected_units = all(
                ring.is_unit(ring.project(a, q)) for q in numth.crt_split(n)
            )
            assert ring.is_unit(a) == projected_units


def test_is_unit_iff_brute_force_inverse_small():
    for n in range(2, 6):
        for m in (1, 2, 3):
            for r in range(n):
                params = ring.RingParams(n, m, r)
                els = list(params.elements())
                for a in els:
                    if a.is_zero:
                        continue
                    brute = any((a * b) == params.one for b in els)
                    assert ring.is_unit(a) == brute


def test_element_text_roundtrip():
    params = make_params(5, 2, -1)
    a = ring.parse_coeffs("3,4", params)
    assert a.coeffs == (3, 4)
    assert str(a) == "3,4"
    assert ring.element_to_json(a) == {"n": 5, "m": 2, "r": 4, "coeffs": [3, 4]}
    with pytest.raises(ValueError):
        ring.parse_coeffs("1,2,3", params)
    with pytest.raises(ValueError):
        ring.parse_coeffs("1,x", params)

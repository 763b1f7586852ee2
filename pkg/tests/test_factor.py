import pytest

from radring import factor
from radring.errors import CapExceeded
from radring.factor import FactorizationReport, Poly, brute_force_factor, factor_monic
from radring.gfq import FieldSpec

Z5 = FieldSpec(5)
Z7 = FieldSpec(7)
Z13 = FieldSpec(13)


def b(spec, m, r):
    return Poly.binomial(spec, m, spec.element(r))


class TestArithmetic:
    def test_divmod_examples(self):
        q, rem = divmod(b(Z5, 2, -1), Poly.from_ints(Z5, [2, 1]))
        assert str(q) == "x+3" and rem.is_zero
        f = Poly.from_ints(Z7, [3, 1, 2])
        q, rem = divmod(f, f)
        assert str(q) == "1" and rem.is_zero
        q, rem = divmod(b(Z13, 3, 5), Poly.from_ints(Z13, [-7, 1]))
        assert q.coeff_ints() == [10, 7, 1] and rem.is_zero

    def test_divmod_identity_random(self):
        import random

        rng = random.Random(3)
        for _ in range(300):
            f = Poly.from_ints(Z13, [rng.randrange(13) for _ in range(rng.randrange(1, 8))])
            g = Poly.from_ints(Z13, [rng.randrange(13) for _ in range(rng.randrange(1, 5))])
            if g.is_zero:
                continue
            q, rem = divmod(f, g)
            assert q * g + rem == f
            assert rem.is_zero or rem.degree < g.degree

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            divmod(b(Z5, 2, 1), Poly.zero(Z5))

    def test_gcd_examples(self):
        f = Poly.from_ints(Z7, [3, 0, 2])
        assert f.gcd(Poly.zero(Z7)) == f.monic()
        assert Poly.from_ints(Z7, [-1, 0, 1]).gcd(Poly.from_ints(Z7, [-1, 1])) == Poly.from_ints(Z7, [6, 1])
        # all roots of x^3 - 5 lie in F_13, so gcd with x^13 - x is everything
        big = Poly.x(Z13).powmod(13, b(Z13, 3, 5)) - Poly.x(Z13)
        assert b(Z13, 3, 5).gcd(big) == b(Z13, 3, 5)
        with pytest.raises(ValueError):
            Poly.zero(Z5).gcd(Poly.zero(Z5))

    def test_powmod_examples(self):
        f = Poly.from_ints(Z5, [1, 2, 0, 1])
        assert Poly.x(Z5).powmod(1, f) == Poly.x(Z5) % f
        # x^2 == -1 mod (x^2+1), so x^5 == x
        assert Poly.x(Z5).powmod(5, Poly.from_ints(Z5, [1, 0, 1])) == Poly.x(Z5)
        with pytest.raises(ValueError):
            Poly.x(Z5).powmod(3, Poly.one(Z5))

    def test_roots_examples(self):
        assert [a.value for a in factor.roots(b(Z5, 2, -1))] == [2, 3]
        assert [a.value for a in factor.roots(b(Z13, 3, 5))] == [7, 8, 11]
        assert factor.roots(b(Z7, 3, 2)) == []


class TestIrreducibility:
    def test_examples(self):
        assert not factor.is_irreducible(b(Z5, 2, -1))
        assert factor.is_irreducible(b(FieldSpec(3), 2, 2))
        assert factor.is_irreducible(b(Z7, 3, 2))

    def test_degree_one_always(self):
        assert factor.is_irreducible(Poly.from_ints(Z5, [3, 2]))

    def test_constant_rejected(self):
        with pytest.raises(ValueError):
            factor.is_irreducible(Poly.one(Z5))

    def test_higher_degree_sieve(self):
        # x^4 - 2 over F_5 is irreducible (order of 2 is 4, t = ord_16(5) = 4)
        assert factor.is_irreducible(b(Z5, 4, 2))
        assert not factor.is_irreducible(b(Z5, 4, 4))
        # x^4 - 6 over F_13: 6 has order 12, t = ord_48(13) = 4
        assert factor.is_irreducible(b(Z13, 4, 6))


class TestFactorMonic:
    def test_gaussian_example(self):
        rep = factor_monic(b(Z5, 2, -1), 0)
        assert [g.coeff_ints() for g, _ in rep.factors] == [[2, 1], [3, 1]]
        assert str(rep) == "(x+2)(x+3)"

    def test_three_roots(self):
        rep = factor_monic(b(Z13, 3, 5), 0)
        assert [g.coeff_ints() for g, _ in rep.factors] == [[2, 1], [5, 1], [6, 1]]

    def test_irreducible_quartic(self):
        rep = factor_monic(b(Z5, 4, 2), 0)
        assert len(rep.factors) == 1 and rep.factors[0][1] == 1
        assert rep.factors[0][0].degree == 4

    def test_multiplicities_x_power(self):
        rep = factor_monic(b(Z5, 4, 0), 0)
        assert rep.factors == ((Poly.x(Z5), 4),)
        rep2 = factor_monic(b(FieldSpec(2), 6, 1), 0)
        # x^6 - 1 = (x+1)^2 (x^2+x+1)^2 over F_2
        assert [(g.coeff_ints(), mult) for g, mult in rep2.factors] == [
            ([1, 1], 2),
            ([1, 1, 1], 2),
        ]

    def test_char_p_divides_m(self):
        # x^5 - 2 over F_5 is (x - 2^(5^0) ... ) = (x+3)^5 since a^5 = a
        rep = factor_monic(b(Z5, 5, 2), 0)
        assert [(g.coeff_ints(), mult) for g, mult in rep.factors] == [([3, 1], 5)]

    def test_non_monic_unit(self):
        f = b(Z5, 2, -1).scale(Z5.element(3))
        rep = factor_monic(f, 0)
        assert rep.unit == Z5.element(3)
        assert rep.reconstruct() == f

    def test_seed_determinism(self):
        f = b(Z13, 6, 5)
        assert factor_monic(f, 9) == factor_monic(f, 9)
        assert factor_monic(f, 1).factors == factor_monic(f, 2).factors

    def test_extension_field(self):
        f9 = FieldSpec.extension(3, 2, 0)
        for idx in range(9):
            r = f9.element_by_index(idx)
            if r.is_zero:
                continue
            rep = factor_monic(Poly.binomial(f9, 4, r), 0)
            assert rep.reconstruct() == Poly.binomial(f9, 4, r)


class TestBruteForce:
    def test_matches_examples(self):
        assert brute_force_factor(b(Z5, 2, -1)).factors == factor_monic(b(Z5, 2, -1), 0).factors
        assert brute_force_factor(b(Z5, 2, 4)).factors == factor_monic(b(Z5, 2, 4), 0).factors
        rep = brute_force_factor(b(Z5, 3, 2))
        assert [(g.coeff_ints(), mult) for g, mult in rep.factors] == [
            ([2, 1], 1),
            ([4, 3, 1], 1),
        ]

    def test_cap(self):
        with pytest.raises(CapExceeded):
            brute_force_factor(b(FieldSpec(101), 6, 3), cap=10_000)

    @pytest.mark.parametrize("p,k", [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (3, 2)])
    def test_oracle_agreement_all_binomials(self, p, k):
        spec = FieldSpec.extension(p, k, 0)
        for m in range(1, 7):
            for idx in range(spec.q):
                f = Poly.binomial(spec, m, spec.element_by_index(idx))
                assert factor_monic(f, 0).factors == brute_force_factor(f).factors


def test_report_invariants_enforced():
    f = b(Z5, 2, -1)
    good = factor_monic(f, 0)
    bad = FactorizationReport(f, Z5.one, ((Poly.from_ints(Z5, [1, 1]), 2),))
    with pytest.raises(AssertionError):
        bad.verify()
    assert good.factor_degrees == [1, 1]
    assert not good.is_irreducible_input()


def test_parse_poly_formats():
    assert factor.parse_poly("x^3-2", Z5) == b(Z5, 3, 2)
    assert factor.parse_poly("x^2+1", Z5) == b(Z5, 2, -1)
    assert factor.parse_poly("x^4", Z5) == b(Z5, 4, 0)
    assert factor.parse_poly("4,0,0,1", Z5) == Poly.from_ints(Z5, [4, 0, 0, 1])
    assert factor.parse_poly("3, 1", Z7) == Poly.from_ints(Z7, [3, 1])
    with pytest.raises(ValueError):
        factor.parse_poly("x+junk", Z5)


def test_separability_of_binomials():
    import math

    for spec in (Z5, Z7, Z13):
        for m in range(1, 7):
            if math.gcd(m, spec.p) != 1:
                continue
            for r in range(1, spec.q):
                f = b(spec, m, r)
                assert f.gcd(f.derivative()).degree == 0

"""Exact Laurent-polynomial and rational-function arithmetic."""

from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

from tlskein.laurent import (
    LaurentPoly,
    NotDivisible,
    RationalFn,
    laurent_from_json,
    laurent_gcd,
    rational_from_json,
)
from tlskein.laurent import _prs_gcd, _primitive, unpack_laurent, pack_laurent


def P(**kw):
    """Shorthand: P(a2=1, am2=-1) = A^2 - A^-2 (m marks a negative exponent)."""
    terms = {}
    for key, c in kw.items():
        e = key[1:]
        exp = -int(e[1:]) if e.startswith("m") else int(e or 0)
        terms[exp] = c
    return LaurentPoly(terms)


A = LaurentPoly.monomial(1)
ONE = LaurentPoly.one()


small_polys = st.dictionaries(
    st.integers(min_value=-6, max_value=6),
    st.integers(min_value=-9, max_value=9),
    max_size=5,
).map(LaurentPoly)

nonzero_polys = small_polys.filter(lambda p: not p.is_zero())


class TestLaurentBasics:
    def test_zero_is_empty_map(self):
        assert LaurentPoly({2: 0, -1: 0}).terms == ()
        assert LaurentPoly.zero().is_zero()

    def test_merging_terms(self):
        p = LaurentPoly([(2, 1), (2, -1), (0, 3)])
        assert p.terms == ((0, 3),)

    def test_add_merges_exponents(self):
        # A^2 + (-1)*A^-2
        p = LaurentPoly.monomial(2) + LaurentPoly.monomial(-2, -1)
        assert p == P(a2=1, am2=-1)

    def test_difference_of_squares(self):
        p = P(a1=1, am1=1) * P(a1=1, am1=-1)
        assert p == P(a2=1, am2=-1)

    def test_square_of_loop_value(self):
        d = P(a2=-1, am2=-1)
        assert d**2 == P(a4=1, a0=2, am4=1)

    def test_pow_rejects_negative(self):
        with pytest.raises(ValueError):
            A**-1

    def test_str(self):
        assert str(P(a4=1, a0=2, am4=1)) == "A^4+2+A^-4"
        assert str(P(a2=-1, am2=-1)) == "-A^2-A^-2"
        assert str(LaurentPoly.zero()) == "0"

    def test_json_round_trip(self):
        p = P(a3=-12345678901234567890, am1=7)
        data = p.to_json()
        assert data == [[-1, "7"], [3, "-12345678901234567890"]]
        assert laurent_from_json(data) == p


class TestExactDivision:
    def test_factorization(self):
        num = P(a4=1, am4=-1)
        den = P(a2=1, am2=-1)
        assert num.exact_div(den) == P(a2=1, am2=1)

    def test_geometric_factor(self):
        num = P(a8=1, a0=-1)
        den = P(a4=1, a0=-1)
        assert num.exact_div(den) == P(a4=1, a0=1)

    def test_unit_division(self):
        assert ONE.exact_div(P(a2=1)) == P(am2=1)

    def test_not_divisible(self):
        with pytest.raises(NotDivisible):
            P(a1=1, a0=1).exact_div(P(a1=1, a0=-1))

    def test_divide_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            ONE.exact_div(LaurentPoly.zero())

    @given(nonzero_polys, nonzero_polys)
    def test_product_then_divide(self, f, g):
        assert (f * g).exact_div(g) == f


class TestRingAxioms:
    @given(small_polys, small_polys, small_polys)
    def test_associativity_and_distributivity(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(small_polys, small_polys)
    def test_commutativity(self, a, b):
        assert a * b == b * a
        assert a + b == b + a

    @given(small_polys)
    def test_units_and_negation(self, a):
        assert a * ONE == a
        assert a + (-a) == LaurentPoly.zero()


class TestKroneckerPacking:
    @given(small_polys, small_polys)
    def test_matches_schoolbook(self, a, b):
        if a.is_zero() or b.is_zero():
            return
        slot = 64
        packed = pack_laurent(a, a.min_exp, slot) * pack_laurent(b, b.min_exp, slot)
        assert unpack_laurent(packed, a.min_exp + b.min_exp, slot) == a * b

    def test_large_product_uses_packing(self):
        big = LaurentPoly({i: i + 1 for i in range(40)})
        other = LaurentPoly({i: 41 - i for i in range(40)})
        expected = LaurentPoly.zero()
        for e, c in big.terms:
            expected = expected + LaurentPoly(tuple((e + e2, c * c2) for e2, c2 in other.terms))
        assert big * other == expected


class TestGcd:
    def test_common_factor(self):
        f = P(a4=1, a0=-1)  # (A^2-1)(A^2+1)
        g = P(a2=1, a0=-1)
        assert laurent_gcd(f, g) == P(a2=1, a0=-1)

    def test_monomials_share_only_content(self):
        assert laurent_gcd(P(a5=6), P(am3=4)) == LaurentPoly.constant(2)

    def test_sign_normalization(self):
        g = laurent_gcd(P(a2=-1, a0=1), P(a4=-1, a0=1))
        assert g.leading_coeff > 0
        assert g.min_exp == 0

    @given(nonzero_polys, nonzero_polys)
    @settings(max_examples=60)
    def test_heuristic_agrees_with_prs(self, f, g):
        expected = _prs_gcd(_primitive(f), _primitive(g))
        got = laurent_gcd(f, g)
        import math

        cont = math.gcd(f.content(), g.content())
        assert got == expected * cont

    @given(nonzero_polys, nonzero_polys)
    @settings(max_examples=60)
    def test_gcd_divides_both(self, f, g):
        got = laurent_gcd(f, g)
        assert got.divides(f) and got.divides(g)


class TestRationalFn:
    def test_inverse_of_loop_value(self):
        d = RationalFn(P(a2=-1, am2=-1))
        inv = d.inv()
        assert inv.num == P(a2=-1)
        assert inv.den == P(a4=1, a0=1)
        assert d * inv == RationalFn.one()

    def test_additive_inverse(self):
        x = RationalFn(P(a3=2, a0=1), P(a2=1, a0=5))
        assert (x + (-x)).is_zero()

    def test_reduction_to_polynomial(self):
        x = RationalFn(P(a4=1, a0=-1), P(a2=1, a0=-1))
        assert x == RationalFn(P(a2=1, a0=1))
        assert x.is_laurent()

    def test_denominator_normalization(self):
        # denominator gets min exponent 0 and positive leading coefficient
        x = RationalFn(ONE, P(a3=-2, a1=-4))
        assert x.den.min_exp == 0
        assert x.den.leading_coeff > 0

    def test_inv_zero_raises(self):
        with pytest.raises(ZeroDivisionError):
            RationalFn.zero().inv()

    def test_json_round_trip(self):
        x = RationalFn(P(a1=3, am1=-3), P(a2=7, a0=1))
        assert rational_from_json(x.to_json()) == x

    @given(small_polys, nonzero_polys, small_polys, nonzero_polys)
    @settings(max_examples=60)
    def test_equality_is_cross_multiplication(self, n1, d1, n2, d2):
        x = RationalFn(n1, d1)
        y = RationalFn(n2, d2)
        assert (x == y) == (n1 * d2 == n2 * d1)

    @given(small_polys, nonzero_polys, small_polys, nonzero_polys)
    @settings(max_examples=40)
    def test_field_ops(self, n1, d1, n2, d2):
        x = RationalFn(n1, d1)
        y = RationalFn(n2, d2)
        assert x + y == y + x
        assert x * y == y * x
        assert (x + y) - y == x
        if not y.is_zero():
            assert (x * y) / y == x

    @given(small_polys, nonzero_polys)
    @settings(max_examples=40)
    def test_canonical_form_is_idempotent(self, n, d):
        x = RationalFn(n, d)
        y = RationalFn(x.num, x.den)
        assert x.num == y.num and x.den == y.den

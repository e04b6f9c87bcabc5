"""Diagrammatic Temperley-Lieb algebra: matchings, gluing, relations."""

import math
import random

import pytest

from tlskein.laurent import LaurentPoly, RationalFn
from tlskein.quantum import loop_value
from tlskein.tl import (
    Matching,
    TLElement,
    catalan,
    element_from_json,
    enumerate_matchings,
    glue_involutions,
    matching_from_json,
)

D = loop_value()


class TestMatching:
    def test_identity_pairs(self):
        assert Matching.identity(2).pairs() == [(1, 4), (2, 3)]

    def test_e1_pairs(self):
        assert Matching.e(2, 1).pairs() == [(1, 2), (3, 4)]

    def test_e2_on_three_strands(self):
        assert Matching.e(3, 2).pairs() == [(1, 6), (2, 3), (4, 5)]

    def test_e_index_bounds(self):
        with pytest.raises(ValueError):
            Matching.e(2, 2)
        with pytest.raises(ValueError):
            Matching.e(3, 0)

    def test_crossing_rejected(self):
        with pytest.raises(ValueError):
            Matching.from_pairs(2, [(1, 3), (2, 4)])

    def test_fixed_point_rejected(self):
        with pytest.raises(ValueError):
            Matching(1, (0, 1))

    def test_add_strands_below(self):
        m = Matching.e(2, 1).add_strands_below()
        # e_1 in TL_3: pairs (1,2), (5,6), new bottom strand 3-4
        assert m == Matching.e(3, 1)

    def test_json_round_trip(self):
        m = Matching.e(4, 2)
        assert matching_from_json(4, m.to_json()) == m


class TestEnumeration:
    @pytest.mark.parametrize("n", range(11))
    def test_catalan_counts(self, n):
        ms = enumerate_matchings(n)
        assert len(ms) == catalan(n)
        assert len(set(ms)) == len(ms)
        assert catalan(n) == math.comb(2 * n, n) // (n + 1)

    def test_zero_strands(self):
        assert enumerate_matchings(0) == (Matching(0, ()),)

    def test_deterministic_order(self):
        assert enumerate_matchings(3) == enumerate_matchings.__wrapped__(3)


class TestDiagramProducts:
    def test_unit_law(self):
        one = Matching.identity(3)
        for m in enumerate_matchings(3):
            res, loops = glue_involutions(one.inv, m.inv, 3)
            assert (res, loops) == (m.inv, 0)
            res, loops = glue_involutions(m.inv, one.inv, 3)
            assert (res, loops) == (m.inv, 0)

    def test_e3_squared_at_four_strands(self):
        e3 = Matching.e(4, 3)
        res, loops = glue_involutions(e3.inv, e3.inv, 4)
        assert res == e3.inv
        assert loops == 1

    def test_product_of_basis_diagrams_is_single_diagram(self):
        rng = random.Random(7)
        for n in (2, 3, 4, 5):
            ms = enumerate_matchings(n)
            for _ in range(30):
                a, b = rng.choice(ms), rng.choice(ms)
                x = TLElement.from_matching(a) * TLElement.from_matching(b)
                assert len(x) == 1
                ((m, c),) = x.terms.items()
                res, loops = glue_involutions(a.inv, b.inv, n)
                assert m.inv == res
                assert c == RationalFn(D**loops)


class TestRelations:
    @pytest.mark.parametrize("n", range(2, 9))
    def test_defining_relations(self, n):
        es = [TLElement.e(n, i) for i in range(1, n)]
        d = RationalFn(D)
        for i in range(1, n):
            ei = es[i - 1]
            assert ei * ei == ei.scaled(d)
            for j in range(1, n):
                ej = es[j - 1]
                if abs(i - j) == 1:
                    assert ei * ej * ei == ei
                elif abs(i - j) > 1:
                    assert ei * ej == ej * ei

    def test_associativity_random_triples(self):
        rng = random.Random(2024)
        for n in (2, 3, 4, 5, 6):
            ms = enumerate_matchings(n)
            for _ in range(12):
                a, b, c = (TLElement.from_matching(rng.choice(ms)) for _ in range(3))
                assert (a * b) * c == a * (b * c)


class TestElementArithmetic:
    def test_scale_by_zero(self):
        x = TLElement.e(3, 1) + TLElement.identity(3)
        assert x.scaled(0).is_zero()

    def test_additive_inverse(self):
        x = TLElement.e(3, 2).scaled(RationalFn(D)) + TLElement.identity(3)
        assert (x - x).is_zero()

    def test_distinct_diagrams_do_not_merge(self):
        x = TLElement.e(2, 1) + TLElement.identity(2)
        assert len(x) == 2

    def test_strand_count_mismatch(self):
        with pytest.raises(ValueError):
            TLElement.identity(2) + TLElement.identity(3)
        with pytest.raises(ValueError):
            TLElement.identity(2) * TLElement.identity(3)

    def test_scalar_coercion(self):
        x = TLElement.identity(2)
        assert x * 2 == x + x
        assert (D * x) * RationalFn(D).inv() == x

    def test_mixed_coefficient_product(self):
        # exercises the denominator-clearing path
        d = RationalFn(D)
        f2 = TLElement.identity(2) - TLElement.e(2, 1).scaled(d.inv())
        assert f2 * f2 == f2

    def test_json_round_trip(self):
        d = RationalFn(D)
        x = TLElement.identity(2).scaled(d.inv()) + TLElement.e(2, 1).scaled(d)
        assert element_from_json(2, x.to_json()) == x

"""
Tests for rings, ideals and multiplicatively closed sets.

Ideal and m.c.s. enumeration are compared against brute force
filters over every subset of small rings.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from s_comult.algebra.errors import AxiomViolation, ContainsZero, MissingOne, NotClosed, SizeCap
from s_comult.algebra.ring import (TablePresentation, ZnProduct, enumerate_ideals, enumerate_mcs, generated_mcs,
                                   has_maximal_multiple, ideal_closure, ideal_ops, is_ideal, jacobson_radical,
                                   make_ring, maximal_ideals, parse_ideal, prime_ideals, saturation, units,
                                   validate_mcs, zero_divisors_on, zn)
from s_comult.algebra.module import self_of
from s_comult.algebra.struct import Caps
from s_comult.algebra.utils import subsets
from tests.strategies import mcs, rings_with_mcs, small_rings


def brute_force_mcs(ring):
    found = []
    for subset in subsets(list(ring.elements)):
        if ring.one not in subset or ring.zero in subset:
            continue
        if all(ring.mul(s, t) in subset for s in subset for t in subset):
            found.append(subset)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


class TestRing:
    """
    Construction and labels.
    """

    def test_names_and_labels(self):
        assert zn(6).name == "Z6"
        ring = zn(2, 3)
        assert ring.name == "Z2xZ3"
        assert ring.order == 6
        assert ring.index_of((1, 2)) == 5
        assert ring.labels[5] == (1, 2)
        assert ring.format(ring.one) == "(1,1)"

    def test_modulus_below_two(self):
        with pytest.raises(AxiomViolation):
            make_ring(ZnProduct((1,)))

    def test_size_cap(self):
        with pytest.raises(SizeCap):
            zn(8, caps=Caps(ring_order=4))

    def test_table_missing_identity(self):
        presentation = TablePresentation(add=((0, 1), (1, 0)), mul=((1, 1), (1, 1)))
        with pytest.raises(AxiomViolation) as info:
            make_ring(presentation)
        assert info.value.axiom == "1 is a multiplicative identity"

    def test_table_zero_is_one(self):
        presentation = TablePresentation(add=((0, 1), (1, 0)), mul=((0, 0), (0, 1)), zero=0, one=0)
        with pytest.raises(AxiomViolation):
            make_ring(presentation)

    @pytest.mark.parametrize("add, mul", [
        (((0, 1), (1,)), ((0, 0), (0, 1))),
        (((0, 1), (1, 0)), ((0, 0, 0), (0, 1, 0))),
        (((0, 1), (1, 0)), ((0, 0),)),
        ((), ()),
    ])
    def test_table_shape(self, add, mul):
        with pytest.raises(AxiomViolation) as info:
            make_ring(TablePresentation(add=add, mul=mul))
        assert info.value.axiom in ("tables must both be square of the same size", "1 != 0")

    def test_local_ring_tables(self, local_ring):
        assert local_ring.order == 8
        assert len(enumerate_ideals(local_ring)) == 6
        assert maximal_ideals(local_ring)[0].elements == frozenset({0, 1, 2, 3})

    @pytest.mark.parametrize("n", range(2, 13))
    def test_mul_row_matches_mul(self, n):
        ring = zn(n)
        for a in ring.elements:
            assert [ring.mul(a, b) for b in ring.elements] == ring.mul_row(a).tolist()
            assert [ring.add(a, b) for b in ring.elements] == ring.add_row(a).tolist()


class TestIdeals:
    """
    Ideal enumeration and ideal arithmetic.
    """

    def test_z6(self, z6):
        assert [i.format() for i in enumerate_ideals(z6)] == ["{0}", "{0,3}", "{0,2,4}", "{0,1,2,3,4,5}"]

    @pytest.mark.parametrize("moduli", [(2,), (3,), (4,), (5,), (6,), (7,), (8,), (2, 2), (2, 3), (2, 4)])
    def test_against_brute_force(self, moduli):
        ring = zn(*moduli)
        expected = [s for s in subsets(list(ring.elements)) if is_ideal(ring, s)]
        assert sorted(i.elements for i in enumerate_ideals(ring)) == sorted(expected)

    def test_brute_force_on_tables(self, local_ring):
        expected = {s for s in subsets(list(local_ring.elements)) if is_ideal(local_ring, s)}
        assert {i.elements for i in enumerate_ideals(local_ring)} == expected

    def test_maximal_and_radical(self):
        z12 = zn(12)
        assert len(maximal_ideals(z12)) == 2
        assert jacobson_radical(z12).elements == frozenset({0, 6})
        assert jacobson_radical(zn(4)).elements == frozenset({0, 2})
        assert jacobson_radical(zn(6)).is_zero

    @pytest.mark.parametrize("n", range(2, 13))
    def test_primes_are_maximal(self, n):
        ring = zn(n)
        assert set(prime_ideals(ring)) == set(maximal_ideals(ring))

    def test_ideal_ops(self):
        z12 = zn(12)
        i, j = parse_ideal(z12, [4]), parse_ideal(z12, [6])
        ops = ideal_ops(z12, i, j)
        assert ops.sum.elements == frozenset({0, 2, 4, 6, 8, 10})
        assert ops.product.is_zero
        assert ops.intersection.is_zero
        assert ops.colon.elements == frozenset({0, 2, 4, 6, 8, 10})
        assert ops.annihilator.elements == frozenset({0, 3, 6, 9})

    def test_ideal_ops_other_ring(self, z6):
        with pytest.raises(ValueError):
            ideal_ops(zn(6), parse_ideal(z6, [2]), parse_ideal(z6, [3]))

    @given(small_rings(), st.lists(st.integers(min_value=0, max_value=11), max_size=3))
    @settings(max_examples=50)
    def test_closure_is_ideal(self, ring, generators):
        ideal = ideal_closure(ring, [g % ring.order for g in generators])
        assert is_ideal(ring, ideal.elements)
        assert all(g % ring.order in ideal for g in generators)


class TestMcs:
    """
    Validation, enumeration and saturation of m.c.s.
    """

    def test_z6_has_seven(self, z6):
        assert [s.format() for s in enumerate_mcs(z6)] == [
            "{1}", "{1,3}", "{1,4}", "{1,5}", "{1,2,4}", "{1,3,5}", "{1,2,4,5}",
        ]

    @pytest.mark.parametrize("moduli", [(2,), (4,), (6,), (8,), (2, 2), (2, 3), (2, 4)])
    def test_against_brute_force(self, moduli):
        ring = zn(*moduli)
        assert [s.elements for s in enumerate_mcs(ring)] == brute_force_mcs(ring)

    def test_validation_errors(self, z6):
        with pytest.raises(NotClosed) as info:
            validate_mcs(z6, [1, 2])
        assert (info.value.s, info.value.t) == ("2", "2")
        with pytest.raises(ContainsZero):
            validate_mcs(z6, [0, 1])
        with pytest.raises(MissingOne):
            validate_mcs(z6, [3])

    def test_generated(self, z6):
        assert generated_mcs(z6, 2).elements == frozenset({1, 2, 4})
        assert generated_mcs(zn(4), 2) is None

    def test_saturation(self, z6):
        assert saturation(mcs(z6, 1, 3)).elements == frozenset({1, 3, 5})
        assert saturation(mcs(z6, 1)).elements == units(z6)

    def test_maximal_multiple(self, z6):
        assert has_maximal_multiple(mcs(z6, 1, 3)) == 3
        assert has_maximal_multiple(mcs(z6, 1, 2, 4, 5)) is not None

    def test_units_and_zero_divisors(self, z6, z6_self):
        assert units(z6) == frozenset({1, 5})
        assert zero_divisors_on(z6, z6_self) == frozenset({0, 2, 3, 4})
        with pytest.raises(ValueError):
            zero_divisors_on(zn(6), z6_self)

    @given(rings_with_mcs())
    @settings(max_examples=60)
    def test_saturation_is_idempotent(self, drawn):
        ring, s = drawn
        star = saturation(s)
        assert s.issubset(star)
        assert saturation(star).elements == star.elements

    @given(rings_with_mcs(max_order=8))
    @settings(max_examples=40)
    def test_finite_sets_have_maximal_multiple(self, drawn):
        _, s = drawn
        multiple = has_maximal_multiple(s)
        assert multiple is not None
        assert multiple in s

    def test_self_module_units_agree(self, z6):
        assert zero_divisors_on(z6, self_of(z6)).isdisjoint(units(z6))

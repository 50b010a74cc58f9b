"""
Tests for the S-predicates and the witnesses they return.

Hand-checked pins on Z_6, the vector space Z2 x Z2 over Z2 and the
local ring F2[x,y]/(x,y)^2, then the reductions to the classical
notions at S = {1}, swept over a small catalog.
"""

import pytest
from hypothesis import given, settings

from s_comult.algebra.errors import DisjointnessFailure, PreconditionUnmet
from s_comult.algebra.module import (ann_closure, cyclic_submodule, parse_submodule, self_of, submodule_lattice, whole,
                                     zero_submodule, zn_over_zk)
from s_comult.algebra.ring import enumerate_mcs, parse_ideal, units, validate_mcs, zn
from s_comult.algebra.struct import WitnessKind
from s_comult.theory import certify, predicates
from tests.strategies import mcs, rings_with_mcs


class TestComultiplication:
    """
    Classical and S-comultiplication on pinned modules.
    """

    @pytest.mark.parametrize("n", range(2, 31))
    def test_zn_is_comultiplication(self, n):
        module = self_of(zn(n))
        assert predicates.is_comultiplication(module)
        assert predicates.is_multiplication(module)

    def test_vector_space(self, v2, z2):
        assert not predicates.is_comultiplication(v2)
        assert not predicates.is_multiplication(v2)
        ok, failing = predicates.comultiplication_failure(v2, mcs(z2, 1))
        assert not ok
        assert len(failing) == 2

    def test_multiplication_without_comultiplication(self, local_ring):
        module = self_of(local_ring)
        assert predicates.is_multiplication(module)
        assert not predicates.is_comultiplication(module)
        x = parse_submodule(module, [2])
        assert ann_closure(x).elements == frozenset({0, 1, 2, 3})
        assert predicates.comultiplication_failure(module, mcs(local_ring, 4))[1] is not None

    def test_local_ring_mcs_are_units(self, local_ring):
        module = self_of(local_ring)
        for s in enumerate_mcs(local_ring):
            assert s.elements <= units(local_ring)
            assert predicates.is_s_comultiplication(module, s) is None

    def test_witnesses_certify(self, z6, z6_self):
        s = mcs(z6, 1, 3)
        witnesses = predicates.is_s_comultiplication(z6_self, s)
        assert set(witnesses) == set(submodule_lattice(z6_self))
        assert all(w.kind is WitnessKind.S_AND_IDEAL for w in witnesses.values())
        certify.certify_comultiplication(z6_self, s, witnesses)

    def test_lemma_bundle(self, small_catalog):
        for _, module, s in small_catalog.instances():
            assert predicates.lemma_equivalence_bundle(module, s).agree

    def test_s_multiplication(self, v2, z2, z6, z6_self):
        assert not predicates.is_s_multiplication(v2, mcs(z2, 1))
        assert predicates.is_s_multiplication(z6_self, mcs(z6, 1))
        assert predicates.is_s_multiplication_general(z6_self, mcs(z6, 1, 3))

    @given(rings_with_mcs())
    @settings(max_examples=40, deadline=None)
    def test_comultiplication_implies_s_comultiplication(self, drawn):
        ring, s = drawn
        module = self_of(ring)
        witnesses = predicates.is_s_comultiplication(module, s)
        assert witnesses is not None
        certify.certify_comultiplication(module, s, witnesses)


class TestReductions:
    """
    With S = {1} every S-notion is the classical one;
    with S inside the units S-comultiplication is comultiplication.
    """

    def test_prime(self, small_catalog):
        for entry in small_catalog.entries:
            one = validate_mcs(entry.ring, [entry.ring.one])
            for module in entry.modules:
                for sub in submodule_lattice(module):
                    assert predicates.s_prime_verdict(module, sub, one) == predicates.is_prime_submodule(module, sub)

    def test_second(self, small_catalog):
        for entry in small_catalog.entries:
            one = validate_mcs(entry.ring, [entry.ring.one])
            for module in entry.modules:
                for sub in submodule_lattice(module):
                    if sub.is_zero:
                        continue
                    assert predicates.s_second_verdict(module, sub, one) == predicates.is_second_submodule(module, sub)

    def test_comultiplication_and_cyclic(self, small_catalog):
        for entry in small_catalog.entries:
            one = validate_mcs(entry.ring, [entry.ring.one])
            for module in entry.modules:
                s_comult = predicates.is_s_comultiplication(module, one) is not None
                assert s_comult == predicates.is_comultiplication(module)
                cyclic = any(cyclic_submodule(module, m).is_whole for m in module.elements)
                assert (predicates.is_s_cyclic(module, one) is not None) == cyclic

    def test_units(self, small_catalog):
        for entry, module, s in small_catalog.instances():
            if not s.elements <= units(entry.ring):
                continue
            assert (predicates.is_s_comultiplication(module, s) is not None) == predicates.is_comultiplication(module)
            for sub in submodule_lattice(module):
                assert predicates.s_prime_verdict(module, sub, s) == predicates.is_prime_submodule(module, sub)
                if not sub.is_zero:
                    assert predicates.s_second_verdict(module, sub, s) == predicates.is_second_submodule(module, sub)


class TestPrime:
    """
    S-prime submodules of Z_6.
    """

    def test_zero_is_s_prime(self, z6, z6_self):
        s = mcs(z6, 1, 3)
        zero = zero_submodule(z6_self)
        witness = predicates.is_s_prime_submodule(z6_self, zero, s)
        assert witness.s == 3
        certify.certify_s_prime(z6_self, zero, s, witness)
        assert not predicates.is_prime_submodule(z6_self, zero)
        assert predicates.s_prime_characterizations(z6_self, zero, s).as_dict() == {
            "direct": True, "quotient_prime": True, "homothety": True,
        }

    def test_prime_submodules(self, z6_self):
        assert predicates.is_prime_submodule(z6_self, parse_submodule(z6_self, [2]))
        assert not predicates.is_prime_submodule(z6_self, whole(z6_self))

    def test_disjointness(self, z6, z6_self):
        s = mcs(z6, 1, 3)
        sub = parse_submodule(z6_self, [3])
        with pytest.raises(DisjointnessFailure):
            predicates.is_s_prime_submodule(z6_self, sub, s)
        assert not predicates.s_prime_verdict(z6_self, sub, s)

    def test_prime_ideal_form(self, z6):
        assert predicates.is_s_prime_ideal(z6, parse_ideal(z6, [0]), mcs(z6, 1, 3)) is not None


class TestSecond:
    """
    S-second submodules of Z_6 and the annihilator side.
    """

    def test_s_second(self, z6, z6_self):
        sub = parse_submodule(z6_self, [2])
        s = mcs(z6, 1, 5)
        witness = predicates.is_s_second(z6_self, sub, s)
        assert witness.s == 1
        certify.certify_s_second(z6_self, sub, s, witness)
        assert predicates.is_second_submodule(z6_self, sub)
        assert predicates.s_second_characterizations(z6_self, sub, s).agree
        assert predicates.uniform_multiple_clause(sub, s) == 1
        assert predicates.second_via_annihilator(z6_self, sub, s)

    def test_disjointness(self, z6, z6_self):
        sub = parse_submodule(z6_self, [2])
        s = mcs(z6, 1, 3)
        with pytest.raises(DisjointnessFailure):
            predicates.is_s_second(z6_self, sub, s)
        assert not predicates.s_second_verdict(z6_self, sub, s)

    def test_zero_submodule(self, z6, z6_self):
        with pytest.raises(PreconditionUnmet):
            predicates.is_s_second(z6_self, zero_submodule(z6_self), mcs(z6, 1))
        assert not predicates.is_second_submodule(z6_self, zero_submodule(z6_self))


class TestCyclicFiniteMinimal:
    """
    S-cyclic, S-finite, S-torsion free, S-minimal and prime modules.
    """

    def test_s_cyclic(self, z6, z6_self, v2, z2):
        witness = predicates.is_s_cyclic(z6_self, mcs(z6, 1))
        assert (witness.s, witness.element) == (1, 1)
        certify.certify_s_cyclic(z6_self, mcs(z6, 1), witness)
        assert predicates.is_s_cyclic(v2, mcs(z2, 1)) is None

    def test_s_finite(self, v2, z2):
        everything = whole(v2)
        witness = predicates.is_s_finite(v2, everything, mcs(z2, 1))
        assert len(witness.extra) == 2
        certify.certify_finite(v2, everything, witness)

    def test_s_torsion_free(self, z6, z6_self):
        assert predicates.is_s_torsion_free(z6_self, mcs(z6, 1)) is None
        assert predicates.is_s_torsion_free(z6_self, mcs(z6, 1, 5)) is None
        witness = predicates.is_s_torsion_free(z6_self, mcs(z6, 1, 3))
        assert witness.s == 3
        certify.certify_s_torsion_free(z6_self, mcs(z6, 1, 3), witness)

    def test_s_minimal(self, z6, z6_self):
        simple = zn_over_zk(z6, 2)
        witness = predicates.is_s_minimal(simple, whole(simple), mcs(z6, 1))
        certify.certify_s_minimal(simple, whole(simple), mcs(z6, 1), witness)
        assert predicates.is_s_minimal(simple, whole(simple), mcs(z6, 1), nonzero_only=False) is None
        assert predicates.is_s_minimal(z6_self, whole(z6_self), mcs(z6, 1, 2, 4, 5)) is None
        with pytest.raises(PreconditionUnmet):
            predicates.is_s_minimal(z6_self, zero_submodule(z6_self), mcs(z6, 1))

    def test_prime_modules(self, v2, z6, z6_self):
        assert predicates.is_prime_module(v2)
        assert predicates.is_prime_module(zn_over_zk(z6, 2))
        assert not predicates.is_prime_module(z6_self)

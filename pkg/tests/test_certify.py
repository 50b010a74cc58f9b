"""
Forged witnesses must be rejected by the independent re-checks.
"""

import pytest

from s_comult.algebra import morphism
from s_comult.algebra.errors import InvariantBroken
from s_comult.algebra.localization import localize_module
from s_comult.algebra.module import parse_submodule, submodule_lattice, whole, zero_submodule
from s_comult.algebra.ring import enumerate_ideals, zero_ideal
from s_comult.algebra.struct import Witness, WitnessKind
from s_comult.theory import certify, predicates
from tests.strategies import mcs


class TestForgedWitnesses:

    def test_s_prime(self, z6, z6_self):
        forged = Witness(WitnessKind.SINGLE_S, s=1)
        with pytest.raises(InvariantBroken):
            certify.certify_s_prime(z6_self, zero_submodule(z6_self), mcs(z6, 1, 3), forged)

    def test_wrong_kind(self, z6, z6_self):
        forged = Witness(WitnessKind.S_AND_ELEMENT, s=1, element=1)
        with pytest.raises(InvariantBroken):
            certify.certify_s_second(z6_self, parse_submodule(z6_self, [2]), mcs(z6, 1), forged)

    def test_s_second_on_zero(self, z6, z6_self):
        forged = Witness(WitnessKind.SINGLE_S, s=1)
        with pytest.raises(InvariantBroken):
            certify.certify_s_second(z6_self, zero_submodule(z6_self), mcs(z6, 1), forged)

    def test_comultiplication(self, z6, z6_self):
        forged = {zero_submodule(z6_self): Witness(WitnessKind.S_AND_IDEAL, s=1, ideal=zero_ideal(z6))}
        with pytest.raises(InvariantBroken):
            certify.certify_comultiplication(z6_self, mcs(z6, 1), forged)

    def test_s_outside_set(self, z6, z6_self):
        forged = {whole(z6_self): Witness(WitnessKind.S_AND_IDEAL, s=5, ideal=zero_ideal(z6))}
        with pytest.raises(InvariantBroken):
            certify.certify_comultiplication(z6_self, mcs(z6, 1, 3), forged)

    def test_lemma_pair(self, z6_self):
        with pytest.raises(InvariantBroken):
            certify.certify_lemma_pair(zero_submodule(z6_self), whole(z6_self), 1)
        certify.certify_lemma_pair(parse_submodule(z6_self, [3]), whole(z6_self), 3)

    def test_s_cyclic(self, z6, z6_self):
        forged = Witness(WitnessKind.S_AND_ELEMENT, s=1, element=0)
        with pytest.raises(InvariantBroken):
            certify.certify_s_cyclic(z6_self, mcs(z6, 1), forged)

    def test_s_torsion_free(self, z6, z6_self):
        with pytest.raises(InvariantBroken):
            certify.certify_s_torsion_free(z6_self, mcs(z6, 1), Witness(WitnessKind.SINGLE_S, s=1))

    def test_finite(self, z6_self):
        with pytest.raises(InvariantBroken):
            certify.certify_finite(z6_self, whole(z6_self), Witness(WitnessKind.SINGLE_S, s=1, extra=(2,)))

    def test_hom_witnesses(self, z6_self):
        f = morphism.inclusion(parse_submodule(z6_self, [2]))
        certify.certify_hom_witness(f, "epic", None)
        with pytest.raises(InvariantBroken):
            certify.certify_hom_witness(f, "epic", Witness(WitnessKind.SINGLE_S, s=1))
        with pytest.raises(ValueError):
            certify.certify_hom_witness(f, "split", Witness(WitnessKind.SINGLE_S, s=1))


class TestDefinitions:
    """
    The plain-loop evaluators against the table-driven predicates.
    """

    def test_pins(self, z6, z6_self, v2):
        assert certify.s_comultiplication_holds(z6_self, [1])
        assert not certify.comultiplication_holds(v2)
        assert certify.fraction_module(z6_self, [1, 3]).order == 2
        assert certify.lemma_forms(z6_self, [1, 3]) == {"definition": True, "annihilator": True, "pairs": True}
        assert not certify.kills(z6_self, 3)
        assert certify.kills(z6_self, 0)

    def test_lattices(self, small_catalog):
        for entry in small_catalog.entries:
            assert sorted(certify.ideal_sets(entry.ring), key=sorted) == sorted(
                (i.elements for i in enumerate_ideals(entry.ring)), key=sorted)
            for module in entry.modules:
                assert sorted(certify.submodule_sets(module), key=sorted) == sorted(
                    (n.elements for n in submodule_lattice(module)), key=sorted)

    def test_comultiplication(self, small_catalog):
        for _, module, s in small_catalog.instances():
            expected = predicates.is_s_comultiplication(module, s) is not None
            assert certify.s_comultiplication_holds(module, s.elements) == expected

    def test_s_prime_and_cyclic(self, small_catalog):
        for _, module, s in small_catalog.instances():
            assert certify.s_cyclic_holds(module, s.elements) == (predicates.is_s_cyclic(module, s) is not None)
            for sub in submodule_lattice(module):
                assert certify.s_prime_holds(module, sub.elements, s.elements) == predicates.s_prime_verdict(
                    module, sub, s)

    def test_fraction_order(self, small_catalog):
        for _, module, s in small_catalog.instances():
            assert certify.fraction_module(module, s.elements).order == localize_module(module, s).order

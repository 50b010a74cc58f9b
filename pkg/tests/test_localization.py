"""
Tests for S^-1 R and S^-1 M built from classes of pairs.
"""

import pytest

from s_comult.algebra import localization
from s_comult.algebra.errors import SizeCap
from s_comult.algebra.module import parse_submodule, self_of, whole, zn_over_zk
from s_comult.algebra.ring import enumerate_ideals, enumerate_mcs, parse_ideal, zn
from s_comult.algebra.struct import Caps
from s_comult.theory import predicates
from tests.strategies import mcs


class TestLocalizedRing:
    """
    Class counts and the canonical map on Z_n.
    """

    def test_z6_at_three(self, z6):
        localized = localization.localize_ring(z6, mcs(z6, 1, 3))
        assert localized.order == 2
        assert localized.ring.order == 2

    def test_units_change_nothing(self, z6):
        assert localization.localize_ring(z6, mcs(z6, 1, 5)).order == 6

    def test_nilpotent_free_power(self):
        z4 = zn(4)
        assert localization.localize_ring(z4, mcs(z4, 1, 3)).order == 4

    def test_localized_ideal(self, z6):
        localized = localization.localize_ring(z6, mcs(z6, 1, 3))
        assert localized.localize_ideal(parse_ideal(z6, [3])).is_whole
        assert localized.localize_ideal(parse_ideal(z6, [2])).is_zero

    def test_pair_cap(self, z6):
        with pytest.raises(SizeCap):
            localization.localize_ring(z6, mcs(z6, 1, 3), Caps(localization_pairs=4))

    def test_cached(self, z6):
        s = mcs(z6, 1, 3)
        assert localization.localize_ring(z6, s) is localization.localize_ring(z6, s)


class TestLocalizedModule:
    """
    Kernels, colon identities and local support.
    """

    def test_canonical_kernel(self, z6, z6_self):
        localized = localization.localize_module(z6_self, mcs(z6, 1, 3))
        assert localized.canonical_kernel() == frozenset({0, 2, 4})
        assert localized.as_module.order == 2

    def test_localize_submodule(self, z6, z6_self):
        localized = localization.localize_module(z6_self, mcs(z6, 1, 3))
        assert localized.localize_submodule(whole(z6_self)).is_whole
        assert localized.localize_submodule(parse_submodule(z6_self, [2])).is_zero

    def test_local_support(self, z6):
        module = zn_over_zk(z6, 2)
        assert localization.mm_locally_nonzero(module, parse_ideal(z6, [2]))
        assert not localization.mm_locally_nonzero(module, parse_ideal(z6, [3]))

    def test_colon_identity(self, small_catalog):
        for entry, module, s in small_catalog.instances():
            for ideal in enumerate_ideals(entry.ring):
                assert localization.localized_colon_identity_check(module, s, ideal)

    @pytest.mark.parametrize("n", [4, 6, 8])
    def test_self_localizations_are_comultiplication(self, n):
        ring = zn(n)
        for s in enumerate_mcs(ring):
            localized = localization.localize_module(self_of(ring), s)
            assert predicates.is_comultiplication(localized.as_module)

    def test_other_ring(self, z6_self):
        z6 = zn(6)
        with pytest.raises(ValueError):
            localization.localize_module(z6_self, mcs(z6, 1, 3))

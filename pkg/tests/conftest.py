"""
Shared fixtures: small rings and modules that are pinned by hand,
and one small catalog reused by the statement and mutation tests.
"""

import pytest

import s_comult  # noqa: F401  registers the statements
from s_comult.algebra.module import direct_sum, self_module, self_of
from s_comult.algebra.ring import make_ring, zn
from s_comult.verifier.catalog import CatalogParams, generate_catalog
from tests.strategies import local_ring_tables


@pytest.fixture(scope="session")
def z6():
    return zn(6)


@pytest.fixture(scope="session")
def z6_self(z6):
    return self_of(z6)


@pytest.fixture(scope="session")
def z2():
    return zn(2)


@pytest.fixture(scope="session")
def v2(z2):
    """
    Z2 x Z2 over Z2, a two dimensional vector space.
    """

    line = self_module(z2)
    return direct_sum(line, line)


@pytest.fixture(scope="session")
def local_ring():
    return make_ring(local_ring_tables())


@pytest.fixture(scope="session")
def small_catalog():
    return generate_catalog(CatalogParams(max_ring=6))

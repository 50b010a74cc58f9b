"""
Catalog of finite instances the statements are checked over

A catalog holds, per ring, its modules, its m.c.s. and the homomorphisms
between its small modules, plus a pool of product instances.
Generation is deterministic: the same CatalogParams always give
the same catalog, in the same order.
"""

from __future__ import annotations

import dataclasses
import itertools
import logging
from typing import Iterator, List, Optional, Sequence, Tuple

from s_comult.algebra.errors import AlgebraError, SizeCap
from s_comult.algebra.module import (Module, cyclic_submodule, direct_sum, enumerate_submodules, quotient_of,
                                     product_module, self_of, zero_module, zn_over_zk)
from s_comult.algebra.morphism import ModuleHom, enumerate_homs, inclusion, projection
from s_comult.algebra.ring import MCS, Ring, enumerate_mcs, generated_mcs, product_mcs, zn
from s_comult.algebra.struct import Caps
from s_comult.algebra.utils import divisors

logger = logging.getLogger(__name__)

DEFAULT_PRODUCTS: Tuple[Tuple[int, ...], ...] = ((2, 2), (2, 3), (2, 4), (3, 3))


@dataclasses.dataclass(slots=True)
class CatalogParams:
    """
    CatalogParams - knobs for catalog generation
    """

    max_ring: int = 12  # Z_n for 2 <= n <= max_ring
    max_module: int = 16  # Largest module carrier in the catalog
    full_mcs_ring: int = 8  # Rings up to this order get every m.c.s., larger ones the generated ones
    max_hom_carrier: int = 8  # All homs between modules up to this carrier, canonical maps above
    rings: Optional[List[Tuple[int, ...]]] = None  # Explicit zn_product moduli, replacing the default list
    include_products: bool = True  # Add Z2xZ2, Z2xZ3, Z2xZ4, Z3xZ3 to the default list
    family_size: int = 3  # Largest submodule family for the intersection statement
    sum_size: int = 3  # Largest number of summands for the second-sum statement
    caps: Caps = dataclasses.field(default_factory=Caps)

    def ring_moduli(self) -> List[Tuple[int, ...]]:
        """
        Presentations of every ring in the catalog, in catalog order.
        """

        if self.rings is not None:
            chosen = [tuple(r) for r in self.rings]
        else:
            chosen = [(n,) for n in range(2, self.max_ring + 1)]
            if self.include_products:
                chosen.extend(DEFAULT_PRODUCTS)
        return [m for m in chosen if _order(m) <= min(self.max_ring, self.caps.ring_order)]

    def as_dict(self) -> dict:
        out = {f.name: getattr(self, f.name) for f in dataclasses.fields(self) if f.name != "caps"}
        out["caps"] = dataclasses.asdict(self.caps)
        return out


def _order(moduli: Sequence[int]) -> int:
    out = 1
    for n in moduli:
        out *= n
    return out


@dataclasses.dataclass(slots=True)
class RingEntry:
    """
    RingEntry - a ring with everything the catalog keeps about it
    """

    ring: Ring
    modules: List[Module]  # Nonzero modules, self first
    mcs: List[MCS]  # In canonical order, {1} first
    zero: Module  # The flagged zero module
    homs: List[ModuleHom] = dataclasses.field(default_factory=list)

    def instances(self, with_zero: bool = False) -> Iterator[Tuple[Module, MCS]]:
        modules = self.modules + [self.zero] if with_zero else self.modules
        for module in modules:
            for mcs in self.mcs:
                yield module, mcs


@dataclasses.dataclass(slots=True)
class ProductInstance:
    """
    ProductInstance - M1 x ... x Mn over R1 x ... x Rn with S1 x ... x Sn
    """

    factors: Tuple[Tuple[Module, MCS], ...]
    module: Module
    mcs: MCS


@dataclasses.dataclass(slots=True)
class Catalog:
    """
    Catalog - the generated instance collection.
    """

    params: CatalogParams
    entries: List[RingEntry] = dataclasses.field(default_factory=list)
    products: List[ProductInstance] = dataclasses.field(default_factory=list)
    triples: List[ProductInstance] = dataclasses.field(default_factory=list)

    @property
    def rings(self) -> List[Ring]:
        return [e.ring for e in self.entries]

    def instances(self, with_zero: bool = False) -> Iterator[Tuple[RingEntry, Module, MCS]]:
        """
        Every (module, S) pair, ring by ring.
        """

        for entry in self.entries:
            for module, mcs in entry.instances(with_zero):
                yield entry, module, mcs

    def entry(self, ring_name: str) -> RingEntry:
        for e in self.entries:
            if e.ring.name == ring_name:
                return e
        raise KeyError(ring_name)

    def size(self) -> dict:
        return {
            "rings": len(self.entries),
            "modules": sum(len(e.modules) for e in self.entries),
            "instances": sum(len(e.modules) * len(e.mcs) for e in self.entries),
            "homs": sum(len(e.homs) for e in self.entries),
            "products": len(self.products),
            "triples": len(self.triples),
        }


def _ring_mcs(ring: Ring, params: CatalogParams) -> List[MCS]:
    if ring.order <= params.full_mcs_ring:
        return enumerate_mcs(ring, params.caps)
    found = {}
    for s in ring.elements:
        mcs = generated_mcs(ring, s)
        if mcs is not None:
            found.setdefault(mcs.elements, mcs)
    return sorted(found.values(), key=lambda m: (len(m), m.sorted))


def _ring_modules(ring: Ring, params: CatalogParams) -> List[Module]:
    """
    Self, the divisor modules Z_d over Z_n, direct sums of those and one quotient per sum.
    """

    base = [self_of(ring)]
    if len(ring.moduli) == 1 and ring.kind == Ring.ZN_PRODUCT:
        n = ring.moduli[0]
        base.extend(zn_over_zk(ring, d, params.caps) for d in divisors(n) if 1 < d < n)
    base = [m for m in base if m.order <= params.max_module]

    sums = []
    for left, right in itertools.combinations_with_replacement(base, 2):
        if left.order * right.order <= params.max_module:
            sums.append(direct_sum(left, right, params.caps))

    quotients = []
    for module in sums:
        sub = cyclic_submodule(module, module.order - 1)
        if not sub.is_whole:
            quotients.append(quotient_of(module, sub))

    return base + sums + quotients


def _ring_homs(modules: List[Module], params: CatalogParams) -> List[ModuleHom]:
    """
    Every hom between modules with carrier up to max_hom_carrier,
    and inclusions and projections of every submodule of the larger ones.
    """

    small = [m for m in modules if m.order <= params.max_hom_carrier]
    homs: List[ModuleHom] = []
    for source, target in itertools.product(small, repeat=2):
        homs.extend(enumerate_homs(source, target, params.caps))
    for module in modules:
        if module.order <= params.max_hom_carrier:
            continue
        for sub in enumerate_submodules(module, params.caps):
            homs.append(inclusion(sub))
            homs.append(projection(module, sub))
    return homs


def _product_pool(entries: List[RingEntry]) -> List[Tuple[Module, MCS]]:
    """
    Self modules of Z2, Z3 and Z4 and Z2 over Z4, each with every m.c.s.
    """

    pool = []
    for entry in entries:
        if entry.ring.kind != Ring.ZN_PRODUCT or entry.ring.moduli not in ((2,), (3,), (4,)):
            continue
        for module in entry.modules:
            if module.rule[0] in ("self", "zn_over_zk"):
                pool.extend((module, mcs) for mcs in entry.mcs)
    return pool


def _product(factors: Sequence[Tuple[Module, MCS]], params: CatalogParams) -> ProductInstance:
    module, mcs = factors[0]
    for right, right_mcs in factors[1:]:
        module = product_module(module, right, params.caps)
        mcs = product_mcs(mcs, right_mcs, module.ring)
    return ProductInstance(tuple(factors), module, mcs)


def _products(pool: List[Tuple[Module, MCS]], n: int, params: CatalogParams) -> List[ProductInstance]:
    out = []
    for factors in itertools.combinations_with_replacement(pool, n):
        order = _order([m.order for m, _ in factors])
        if order > params.max_module:
            continue
        # triples vary S in the first factor only
        if n > 2 and any(len(s) > 1 for _, s in factors[1:]):
            continue
        try:
            out.append(_product(factors, params))
        except SizeCap as e:
            logger.debug("skipping product: %s", e)
    return out


def generate_catalog(params: Optional[CatalogParams] = None) -> Catalog:
    """
    Builds the catalog described by params.

    :param params: Generation parameters, defaults when None
    :type params: CatalogParams
    :return: The catalog
    :rtype: Catalog
    :raise SizeCap: If a requested ring is above the ring cap
    """

    params = params or CatalogParams()
    catalog = Catalog(params)

    for moduli in params.ring_moduli():
        ring = zn(*moduli, caps=params.caps)
        modules = _ring_modules(ring, params)
        entry = RingEntry(ring, modules, _ring_mcs(ring, params), zero_module(ring))
        try:
            entry.homs = _ring_homs(modules, params)
        except AlgebraError as e:
            logger.debug("no homs for %s: %s", ring.name, e)
        catalog.entries.append(entry)

    pool = _product_pool(catalog.entries)
    catalog.products = _products(pool, 2, params)
    catalog.triples = _products(pool, 3, params)

    logger.info("catalog: %s", catalog.size())
    return catalog

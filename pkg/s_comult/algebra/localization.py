"""
Localizations S^-1 R and S^-1 M, built from explicit classes of pairs

A pair (m, s) stands for the fraction m/s.
Two pairs are related when some u in S kills s'm - sm'.
The relation is computed row by row: the row of a pair lists
every pair related to it, and classes are read off these rows.
Representatives are lexicographically least pairs (m index, s index).

Operations are carried out on representatives and then normalized;
every table is recomputed with a second member of each class
to make sure the result does not depend on the choice.
"""

from __future__ import annotations

import functools
import logging
from typing import Dict, FrozenSet, List, Tuple

import numpy as np
import numpy.typing as npt

from s_comult.algebra.errors import AxiomViolation, InvariantBroken, SizeCap
from s_comult.algebra.module import Module, Submodule, from_tables, self_module, zero_colon
from s_comult.algebra.ring import MCS, Ideal, Ring, TablePresentation, complement_mcs, make_ring
from s_comult.algebra.struct import CACHE_SIZE, DEFAULT_CAPS, Caps

logger = logging.getLogger(__name__)


def s_torsion_mask(module: Module, mcs: MCS) -> npt.NDArray[np.bool_]:
    """
    Marks every element x with ux = 0 for some u in S.

    :param module: Module holding the differences
    :type module: Module
    :param mcs: The set S
    :type mcs: MCS
    :return: Boolean mask over the carrier
    :rtype: npt.NDArray[np.bool_]
    """

    scalars = np.array(mcs.sorted, dtype=np.int64)
    return (module.act_table[scalars, :] == module.zero).any(axis=0)


class Localization:
    """
    Localization - classes of pairs (m, s) of a module under the S relation.

    Shared by LocalizedRing (over the ring as a module over itself)
    and LocalizedModule.

    :param module: Module to localize
    :type module: Module
    :param mcs: Multiplicatively closed set S
    :type mcs: MCS
    :param caps: Size caps
    :type caps: Caps
    """

    def __init__(self, module: Module, mcs: MCS, caps: Caps = DEFAULT_CAPS) -> None:

        if mcs.ring is not module.ring:
            raise ValueError("S is not a subset of the acting ring")

        self.module = module
        self.mcs = mcs
        self.caps = caps
        self.s_list: Tuple[int, ...] = mcs.sorted
        self.s_position: Dict[int, int] = {s: i for i, s in enumerate(self.s_list)}

        pair_count = module.order * len(self.s_list)
        if pair_count > caps.localization_pairs:
            raise SizeCap("localization pairs", pair_count, caps.localization_pairs)

        # Pair p is (pair_m[p], pair_s[p]), in lexicographic order
        self.pair_m = np.repeat(np.arange(module.order, dtype=np.int64), len(self.s_list))
        self.pair_s = np.tile(np.array(self.s_list, dtype=np.int64), module.order)

        self.class_of = np.full(pair_count, -1, dtype=np.int64)
        self.representatives: List[int] = []
        self.alternates: List[int] = []

        self._build_classes()

        self.order: int = len(self.representatives)
        self.zero: int = self.pair_class(module.zero, mcs.ring.one)

    def _rows(self) -> npt.NDArray[np.bool_]:
        module = self.module
        killed = s_torsion_mask(module, self.mcs)
        negate = np.array([module.neg(m) for m in module.elements], dtype=np.int64)

        rows = np.empty((self.pair_m.size, self.pair_m.size), dtype=bool)
        for p in range(self.pair_m.size):
            # s'm - sm' for every other pair (m', s')
            left = module.act_table[self.pair_s, self.pair_m[p]]
            right = module.act_table[self.pair_s[p], self.pair_m]
            rows[p] = killed[module.add_table[left, negate[right]]]
        return rows

    def _build_classes(self) -> None:
        rows = self._rows()
        pair_count = rows.shape[0]

        for p in range(pair_count):
            if self.class_of[p] >= 0:
                continue
            members = np.flatnonzero(rows[p] & (self.class_of < 0))
            self.class_of[members] = len(self.representatives)
            self.representatives.append(p)
            self.alternates.append(int(members[-1]))

        if pair_count > self.caps.transitivity_scan_pairs:
            logger.debug("skipping transitivity scan on %d pairs", pair_count)
            return

        if not rows.diagonal().all():
            raise AxiomViolation("pair relation is reflexive", (int(np.flatnonzero(~rows.diagonal())[0]),))
        witness = np.argwhere(rows != rows.T)
        if witness.size:
            raise AxiomViolation("pair relation is symmetric", self._describe(*witness[0]))
        for rep in self.representatives:
            for p in np.flatnonzero(rows[rep]):
                if not np.array_equal(rows[p], rows[rep]):
                    other = int(np.flatnonzero(rows[p] != rows[rep])[0])
                    raise AxiomViolation("pair relation is transitive", self._describe(rep, p, other))

    def _describe(self, *pairs: int) -> Tuple[str, ...]:
        return tuple(self.format_pair(int(p)) for p in pairs)

    def format_pair(self, p: int) -> str:
        return f"{self.module.format(int(self.pair_m[p]))}/{self.mcs.ring.format(int(self.pair_s[p]))}"

    def pair_index(self, m: int, s: int) -> int:
        return m * len(self.s_list) + self.s_position[s]

    def pair_class(self, m: int, s: int) -> int:
        return int(self.class_of[self.pair_index(m, s)])

    def labels(self) -> List[str]:
        return [self.format_pair(p) for p in self.representatives]

    def canonical(self, m: int) -> int:
        """
        Image of m under M -> S^-1 M, that is the class of m/1.
        """

        return self.pair_class(m, self.mcs.ring.one)

    def canonical_kernel(self) -> FrozenSet[int]:
        """
        Kernel of M -> S^-1 M, checked against {m : sm = 0 for some s in S}.

        :raise InvariantBroken: If the two sets differ
        """

        kernel = frozenset(m for m in self.module.elements if self.canonical(m) == self.zero)
        act = self.module.act_table
        expected = frozenset(
            m for m in self.module.elements if any(int(act[s, m]) == self.module.zero for s in self.s_list)
        )
        if kernel != expected:
            raise InvariantBroken("canonical kernel", f"{sorted(kernel)} != {sorted(expected)}")
        return kernel

    def _pair_table(self, rows: int, op) -> npt.NDArray[np.int64]:
        """
        Fills a table over classes from an operation on pairs,
        once with representatives and once with alternates.
        """

        def fill(choice: List[int]) -> npt.NDArray[np.int64]:
            table = np.empty((rows, self.order), dtype=np.int64)
            for a in range(rows):
                for b, p in enumerate(choice):
                    table[a, b] = op(a, p, choice)
            return table

        table = fill(self.representatives)
        witness = np.argwhere(table != fill(self.alternates))
        if witness.size:
            raise AxiomViolation("localized operation is well defined", tuple(int(v) for v in witness[0]))
        return table

    def sum_table(self) -> npt.NDArray[np.int64]:
        """
        m/s + m'/s' = (s'm + sm')/(ss')
        """

        module, ring = self.module, self.mcs.ring

        def op(a: int, q: int, choice: List[int]) -> int:
            p = choice[a]
            m, s = int(self.pair_m[p]), int(self.pair_s[p])
            n, t = int(self.pair_m[q]), int(self.pair_s[q])
            return self.pair_class(module.add(module.act(t, m), module.act(s, n)), ring.mul(s, t))

        return self._pair_table(self.order, op)


class LocalizedRing(Localization):
    """
    S^-1 R, with class tables for addition and multiplication.
    """

    def __init__(self, ring: Ring, mcs: MCS, caps: Caps = DEFAULT_CAPS) -> None:
        super().__init__(self_module(ring, caps), mcs, caps)
        self.base = ring
        self.one: int = self.pair_class(ring.one, ring.one)
        self.add_table = self.sum_table()
        self.mul_table = self._product_table()
        self._check_units()

    def _product_table(self) -> npt.NDArray[np.int64]:
        ring = self.base

        def op(a: int, q: int, choice: List[int]) -> int:
            p = choice[a]
            return self.pair_class(ring.mul(int(self.pair_m[p]), int(self.pair_m[q])),
                                   ring.mul(int(self.pair_s[p]), int(self.pair_s[q])))

        return self._pair_table(self.order, op)

    def _check_units(self) -> None:
        for s in self.s_list:
            image, inverse = self.canonical(s), self.pair_class(self.base.one, s)
            if int(self.mul_table[image, inverse]) != self.one:
                raise AxiomViolation("elements of S become units", (self.base.format(s),))

    @functools.cached_property
    def ring(self) -> Ring:
        return self.as_ring()

    def as_ring(self) -> Ring:
        """
        The localization as a validated table ring; class ids are element indices.

        The canonical map R -> S^-1 R is checked to be a ring homomorphism.
        """

        presentation = TablePresentation(
            add=tuple(tuple(int(x) for x in row) for row in self.add_table),
            mul=tuple(tuple(int(x) for x in row) for row in self.mul_table),
            zero=self.zero,
            one=self.one,
            name=f"{self.mcs.format()}^-1 {self.base.name}",
        )
        localized = make_ring(presentation, self.caps)

        image = np.array([self.canonical(x) for x in self.base.elements], dtype=np.int64)
        for a in self.base.elements:
            if not np.array_equal(image[self.base.add_row(a)], self.add_table[image[a], image]):
                raise AxiomViolation("canonical map preserves addition", (self.base.format(a),))
            if not np.array_equal(image[self.base.mul_row(a)], self.mul_table[image[a], image]):
                raise AxiomViolation("canonical map preserves multiplication", (self.base.format(a),))
        return localized

    def localize_ideal(self, ideal: Ideal) -> Ideal:
        """
        Determines S^-1 I inside as_ring().
        """

        return Ideal(self.ring, frozenset(self.pair_class(a, s) for a in ideal.elements for s in self.s_list))


class LocalizedModule(Localization):
    """
    S^-1 M, acted on by the classes of S^-1 R.
    """

    def __init__(self, module: Module, mcs: MCS, caps: Caps = DEFAULT_CAPS) -> None:
        super().__init__(module, mcs, caps)
        self.ring_loc = localize_ring(module.ring, mcs, caps)
        self.add_table = self.sum_table()
        self.act_table = self._action_table()

    def _action_table(self) -> npt.NDArray[np.int64]:
        """
        (r/t)(m/s) = rm/(ts), tabled as ring class by module class.
        """

        module, ring, ring_loc = self.module, self.mcs.ring, self.ring_loc

        def fill(ring_choice: List[int], choice: List[int]) -> npt.NDArray[np.int64]:
            table = np.empty((ring_loc.order, self.order), dtype=np.int64)
            for a, p in enumerate(ring_choice):
                r, t = int(ring_loc.pair_m[p]), int(ring_loc.pair_s[p])
                for b, q in enumerate(choice):
                    m, s = int(self.pair_m[q]), int(self.pair_s[q])
                    table[a, b] = self.pair_class(module.act(r, m), ring.mul(t, s))
            return table

        table = fill(ring_loc.representatives, self.representatives)
        witness = np.argwhere(table != fill(ring_loc.alternates, self.alternates))
        if witness.size:
            raise AxiomViolation("localized action is well defined", tuple(int(v) for v in witness[0]))
        return table

    @functools.cached_property
    def as_module(self) -> Module:
        """
        The localization as a validated module over ring_loc.ring.
        """

        return from_tables(self.ring_loc.ring, self.add_table, self.act_table, self.zero, self.labels(),
                           f"{self.mcs.format()}^-1 {self.module.name}", self.caps, allow_zero=True,
                           rule=("localization", self.module, self.mcs))

    def localize_submodule(self, sub: Submodule) -> Submodule:
        """
        Determines S^-1 N = {n/s : n in N, s in S} inside as_module.
        """

        if sub.module is not self.module:
            raise ValueError("submodule does not belong to the localized module")
        return Submodule(self.as_module, frozenset(self.pair_class(n, s) for n in sub.elements for s in self.s_list))


@functools.lru_cache(maxsize=CACHE_SIZE)
def _localize_ring(ring: Ring, mcs: MCS, caps_key: Tuple[int, ...]) -> LocalizedRing:
    localized = LocalizedRing(ring, mcs, Caps(*caps_key))
    logger.debug("localized %s at %s: %d classes", ring.name, mcs.format(), localized.order)
    return localized


@functools.lru_cache(maxsize=CACHE_SIZE)
def _localize_module(module: Module, mcs: MCS, caps_key: Tuple[int, ...]) -> LocalizedModule:
    localized = LocalizedModule(module, mcs, Caps(*caps_key))
    logger.debug("localized %s at %s: %d classes", module, mcs.format(), localized.order)
    return localized


def _caps_key(caps: Caps) -> Tuple[int, ...]:
    return (caps.ring_order, caps.module_order, caps.localization_pairs,
            caps.transitivity_scan_pairs, caps.hom_source_order)


def localize_ring(ring: Ring, mcs: MCS, caps: Caps = DEFAULT_CAPS) -> LocalizedRing:
    """
    Builds S^-1 R.

    :param ring: Base ring
    :type ring: Ring
    :param mcs: Multiplicatively closed set S
    :type mcs: MCS
    :param caps: Size caps
    :type caps: Caps
    :return: The localized ring
    :rtype: LocalizedRing
    :raise SizeCap: If |R| * |S| exceeds caps.localization_pairs
    :raise AxiomViolation: If the pair relation or an operation misbehaves
    """

    return _localize_ring(ring, mcs, _caps_key(caps))


def localize_module(module: Module, mcs: MCS, caps: Caps = DEFAULT_CAPS) -> LocalizedModule:
    """
    Builds S^-1 M.

    :param module: Base module
    :type module: Module
    :param mcs: Multiplicatively closed set S
    :type mcs: MCS
    :param caps: Size caps
    :type caps: Caps
    :return: The localized module
    :rtype: LocalizedModule
    :raise SizeCap: If |M| * |S| exceeds caps.localization_pairs
    """

    return _localize_module(module, mcs, _caps_key(caps))


def localized_colon_identity_check(module: Module, mcs: MCS, ideal: Ideal, caps: Caps = DEFAULT_CAPS) -> bool:
    """
    Compares S^-1 (0 :_M I) with (0 :_{S^-1 M} S^-1 I).
    """

    localized = localize_module(module, mcs, caps)
    left = localized.localize_submodule(zero_colon(module, ideal))
    right = zero_colon(localized.as_module, localized.ring_loc.localize_ideal(ideal))
    return left.elements == right.elements


def mm_locally_nonzero(module: Module, maximal: Ideal, caps: Caps = DEFAULT_CAPS) -> bool:
    """
    True when M localized at R - m has more than one element.

    R - m is validated as an m.c.s. first, which holds because m is prime.
    """

    return localize_module(module, complement_mcs(module.ring, maximal), caps).order > 1


def clear_caches() -> None:
    _localize_ring.cache_clear()
    _localize_module.cache_clear()

"""
Finite commutative rings, their ideals and multiplicatively closed sets

Rings come in two presentations.
A 'zn_product' ring is Z_{n1} x ... x Z_{nk} with componentwise
modular arithmetic; no operation table is ever built for it.
A 'table' ring carries explicit addition and multiplication tables,
which are checked against every ring axiom when the ring is made.

Elements are handled as indices into the canonical element order:
lexicographic residue tuples for zn_product rings,
table position for table rings.
"""

from __future__ import annotations

import dataclasses
import functools
import logging
from typing import TYPE_CHECKING, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np
import numpy.typing as npt

from s_comult.algebra.errors import AxiomViolation, ContainsZero, MissingOne, NotClosed, SizeCap
from s_comult.algebra.struct import CACHE_SIZE, DEFAULT_CAPS, Caps
from s_comult.algebra.utils import canonical_key, closure_lattice, encode, format_label, radix_weights, residue_grid

if TYPE_CHECKING:
    # Only import for typechecking to prevent circular dependency
    from s_comult.algebra.module import Module

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True, slots=True)
class ZnProduct:
    """
    Presentation of Z_{n1} x ... x Z_{nk}.
    """

    moduli: Tuple[int, ...]


@dataclasses.dataclass(frozen=True, slots=True)
class TablePresentation:
    """
    Presentation of a ring by explicit operation tables.

    Tables are nested sequences of element indices, m rows of m entries.
    """

    add: Tuple[Tuple[int, ...], ...]
    mul: Tuple[Tuple[int, ...], ...]
    zero: int = 0
    one: int = 1
    name: str = ""


class Ring:
    """
    Ring - a finite commutative unital ring.

    Do not build these directly, use make_ring() (or zn()),
    which validates the presentation.
    """

    ZN_PRODUCT: str = "zn_product"
    TABLE: str = "table"

    def __init__(self, presentation: ZnProduct | TablePresentation) -> None:

        self.presentation = presentation
        self.kind: str
        self.moduli: Tuple[int, ...] = ()

        if isinstance(presentation, ZnProduct):
            self.kind = Ring.ZN_PRODUCT
            self.moduli = tuple(int(n) for n in presentation.moduli)
            self._mod = np.array(self.moduli, dtype=np.int64)
            self._weights = radix_weights(self.moduli)
            self._residues = residue_grid(self.moduli)
            self._tuples: List[Tuple[int, ...]] = [tuple(int(x) for x in row) for row in self._residues]
            self._index: Dict[Tuple[int, ...], int] = {t: i for i, t in enumerate(self._tuples)}
            self.order: int = len(self._tuples)
            self.zero: int = 0
            self.one: int = self._index[tuple(1 % n for n in self.moduli)]
            self.name: str = "x".join(f"Z{n}" for n in self.moduli)
        else:
            self.kind = Ring.TABLE
            self.add_table = np.array(presentation.add, dtype=np.int64)
            self.mul_table = np.array(presentation.mul, dtype=np.int64)
            self.order = int(self.add_table.shape[0])
            self.zero = int(presentation.zero)
            self.one = int(presentation.one)
            self.name = presentation.name or f"T{self.order}"

    def __repr__(self) -> str:
        return f"Ring({self.name})"

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def labels(self) -> List[object]:
        if self.kind == Ring.ZN_PRODUCT:
            return [t[0] if len(t) == 1 else t for t in self._tuples]
        return list(range(self.order))

    def format(self, x: int) -> str:
        return format_label(self.labels[x])

    def index_of(self, label: object) -> int:
        """
        Maps a label (int residue, residue tuple or table index) to its index.

        :param label: Label as written in instance files
        :type label: object
        :return: Element index
        :rtype: int
        """

        if self.kind == Ring.TABLE:
            index = int(label)  # type: ignore[arg-type]
            if not 0 <= index < self.order:
                raise ValueError(f"{label} is not an element of {self.name}")
            return index

        residues = label if isinstance(label, tuple) else (label,)
        if len(residues) != len(self.moduli):
            raise ValueError(f"{label} does not have {len(self.moduli)} components")
        return self._index[tuple(int(x) % n for x, n in zip(residues, self.moduli))]

    # Arithmetic on indices:

    def add(self, a: int, b: int) -> int:
        if self.kind == Ring.TABLE:
            return int(self.add_table[a, b])
        return self._index[tuple((x + y) % n for x, y, n in zip(self._tuples[a], self._tuples[b], self.moduli))]

    def neg(self, a: int) -> int:
        if self.kind == Ring.TABLE:
            return int(np.flatnonzero(self.add_table[a] == self.zero)[0])
        return self._index[tuple((-x) % n for x, n in zip(self._tuples[a], self.moduli))]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.kind == Ring.TABLE:
            return int(self.mul_table[a, b])
        return self._index[tuple((x * y) % n for x, y, n in zip(self._tuples[a], self._tuples[b], self.moduli))]

    def add_row(self, a: int) -> npt.NDArray[np.int64]:
        """
        Returns a + x for every element x, in canonical order.
        """

        if self.kind == Ring.TABLE:
            return self.add_table[a]
        return encode(self._residues[a] + self._residues, self._mod, self._weights)

    def mul_row(self, a: int) -> npt.NDArray[np.int64]:
        """
        Returns a * x for every element x, in canonical order.
        """

        if self.kind == Ring.TABLE:
            return self.mul_table[a]
        return encode(self._residues[a] * self._residues, self._mod, self._weights)

    def sum_set(self, left: Iterable[int], right: Iterable[int]) -> FrozenSet[int]:
        """
        Determines {a + b : a in left, b in right}.
        """

        lhs = np.fromiter(left, dtype=np.int64)
        rhs = np.fromiter(right, dtype=np.int64)
        if self.kind == Ring.TABLE:
            sums = self.add_table[np.ix_(lhs, rhs)]
        else:
            sums = encode(self._residues[lhs][:, None, :] + self._residues[rhs][None, :, :], self._mod, self._weights)
        return frozenset(int(x) for x in np.unique(sums))

    def power(self, a: int, k: int) -> int:
        result = self.one
        for _ in range(k):
            result = self.mul(result, a)
        return result


@dataclasses.dataclass(frozen=True, slots=True)
class Ideal:
    """
    Ideal - a subset closed under addition and under multiplication by the ring.

    Equality is by element set (and ring identity), never by generators.
    """

    ring: Ring
    elements: FrozenSet[int]
    generators: Tuple[int, ...] = dataclasses.field(default=(), compare=False)

    def __contains__(self, x: int) -> bool:
        return x in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.sorted)

    @property
    def sorted(self) -> Tuple[int, ...]:
        return tuple(sorted(self.elements))

    @property
    def is_zero(self) -> bool:
        return self.elements == frozenset({self.ring.zero})

    @property
    def is_whole(self) -> bool:
        return len(self.elements) == self.ring.order

    def issubset(self, other: Ideal) -> bool:
        return self.elements <= other.elements

    def format(self) -> str:
        return "{" + ",".join(self.ring.format(x) for x in self.sorted) + "}"


@dataclasses.dataclass(frozen=True, slots=True)
class MCS:
    """
    MCS - a validated multiplicatively closed subset.

    Iteration follows canonical element order;
    every 'first witness' search in this package iterates an MCS this way.
    """

    ring: Ring
    elements: FrozenSet[int]

    def __contains__(self, x: int) -> bool:
        return x in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.sorted)

    @property
    def sorted(self) -> Tuple[int, ...]:
        return tuple(sorted(self.elements))

    def issubset(self, other: MCS) -> bool:
        return self.elements <= other.elements

    def format(self) -> str:
        return "{" + ",".join(self.ring.format(x) for x in self.sorted) + "}"


# Construction:

def _first_failure(mask: npt.NDArray[np.bool_]) -> Optional[Tuple[int, ...]]:
    hits = np.argwhere(mask)
    if hits.size == 0:
        return None
    return tuple(int(v) for v in hits[0])


def _check_table_shape(presentation: TablePresentation) -> None:
    """
    Checks that both tables are m rows of m entries before they become arrays.

    :raise AxiomViolation: If a table is empty, ragged or of the wrong size
    """

    m = len(presentation.add)
    if m == 0:
        raise AxiomViolation("1 != 0", ("empty tables present the zero ring",))
    if len(presentation.mul) != m:
        raise AxiomViolation("tables must both be square of the same size", (m, len(presentation.mul)))
    for name, table in (("add", presentation.add), ("mul", presentation.mul)):
        for i, row in enumerate(table):
            if len(row) != m:
                raise AxiomViolation("tables must both be square of the same size", (name, i, len(row)))


def _check_table_axioms(ring: Ring) -> None:
    """
    Checks every ring axiom on a table ring, exhaustively.

    :raise AxiomViolation: On the first axiom that fails, with witnessing elements
    """

    m = ring.order
    add, mul = ring.add_table, ring.mul_table
    if add.shape != (m, m) or mul.shape != (m, m):
        raise AxiomViolation("tables must both be square of the same size", (add.shape, mul.shape))
    if ((add < 0) | (add >= m)).any() or ((mul < 0) | (mul >= m)).any():
        raise AxiomViolation("table entries must be element indices")
    if not (0 <= ring.zero < m and 0 <= ring.one < m):
        raise AxiomViolation("designated 0 and 1 must be elements", (ring.zero, ring.one))
    if ring.zero == ring.one:
        raise AxiomViolation("1 != 0", (ring.zero,))

    idx = np.arange(m)

    def associative(table: npt.NDArray[np.int64]) -> Optional[Tuple[int, ...]]:
        lhs = table[table[:, :, None], idx[None, None, :]]
        rhs = table[idx[:, None, None], table[None, :, :]]
        return _first_failure(lhs != rhs)

    checks = [
        ("addition is commutative", lambda: _first_failure(add != add.T)),
        ("addition is associative", lambda: associative(add)),
        ("0 is an additive identity", lambda: _first_failure(add[ring.zero] != idx)),
        ("every element has an additive inverse", lambda: _first_failure(~(add == ring.zero).any(axis=1))),
        ("multiplication is commutative", lambda: _first_failure(mul != mul.T)),
        ("multiplication is associative", lambda: associative(mul)),
        ("1 is a multiplicative identity", lambda: _first_failure(mul[ring.one] != idx)),
        ("multiplication distributes over addition",
         lambda: _first_failure(mul[idx[:, None, None], add[None, :, :]]
                                != add[mul[:, :, None], mul[:, None, :]])),
    ]

    for axiom, check in checks:
        witness = check()
        if witness is not None:
            raise AxiomViolation(axiom, witness)


def make_ring(presentation: ZnProduct | TablePresentation, caps: Caps = DEFAULT_CAPS) -> Ring:
    """
    Builds and validates a ring.

    zn_product presentations need every modulus to be at least 2
    (which also rules out the zero ring).
    Table presentations are checked against every ring axiom.

    :param presentation: ZnProduct or TablePresentation
    :type presentation: ZnProduct | TablePresentation
    :param caps: Size caps
    :type caps: Caps
    :return: Validated ring
    :rtype: Ring
    :raise AxiomViolation: If an axiom fails
    :raise SizeCap: If the ring is larger than caps.ring_order
    """

    if isinstance(presentation, ZnProduct):
        if not presentation.moduli:
            raise AxiomViolation("1 != 0", ("empty product is the zero ring",))
        bad = [n for n in presentation.moduli if int(n) < 2]
        if bad:
            raise AxiomViolation("moduli must be at least 2", tuple(bad))
        order = int(np.prod(presentation.moduli))
        if order > caps.ring_order:
            raise SizeCap("ring", order, caps.ring_order)
        return Ring(presentation)

    _check_table_shape(presentation)
    ring = Ring(presentation)
    if ring.order > caps.ring_order:
        raise SizeCap("ring", ring.order, caps.ring_order)
    _check_table_axioms(ring)
    return ring


def zn(*moduli: int, caps: Caps = DEFAULT_CAPS) -> Ring:
    """
    Shortcut for make_ring(ZnProduct(moduli)).
    """

    return make_ring(ZnProduct(tuple(moduli)), caps)


def product_ring(left: Ring, right: Ring, caps: Caps = DEFAULT_CAPS) -> Ring:
    """
    Forms R1 x R2, with element (r1, r2) at index r1 * |R2| + r2.

    Two zn_product rings give a zn_product ring (moduli concatenated),
    which has exactly that indexing; anything else gives a table ring.
    """

    if left.kind == Ring.ZN_PRODUCT and right.kind == Ring.ZN_PRODUCT:
        return make_ring(ZnProduct(left.moduli + right.moduli), caps)

    n2 = right.order

    def op(f_left, f_right):
        return tuple(
            tuple(f_left(a // n2, b // n2) * n2 + f_right(a % n2, b % n2) for b in range(left.order * n2))
            for a in range(left.order * n2)
        )

    presentation = TablePresentation(
        add=op(left.add, right.add),
        mul=op(left.mul, right.mul),
        zero=left.zero * n2 + right.zero,
        one=left.one * n2 + right.one,
        name=f"{left.name}x{right.name}",
    )
    return make_ring(presentation, caps)


# Ideals:

def principal_ideal(ring: Ring, a: int) -> Ideal:
    return Ideal(ring, frozenset(int(x) for x in ring.mul_row(a)), (a,))


def ideal_closure(ring: Ring, generators: Iterable[int]) -> Ideal:
    """
    Determines the least ideal containing the generators.

    We join principal ideals one generator at a time;
    the sum of two ideals is an ideal, so this reaches the fixpoint.

    :param ring: Ring to work in
    :type ring: Ring
    :param generators: Generating elements (indices)
    :type generators: Iterable[int]
    :return: Generated ideal
    :rtype: Ideal
    """

    gens = tuple(generators)
    elements = frozenset({ring.zero})
    for g in gens:
        if g not in elements:
            elements = ring.sum_set(elements, principal_ideal(ring, g).elements)
    return Ideal(ring, elements, gens)


def is_ideal(ring: Ring, subset: Iterable[int]) -> bool:
    """
    Checks the ideal invariants on a subset directly (test oracle).
    """

    elements = frozenset(subset)
    if ring.zero not in elements:
        return False
    for a in elements:
        for b in elements:
            if ring.add(a, b) not in elements:
                return False
        if not all(int(x) in elements for x in ring.mul_row(a)):
            return False
    return True


@functools.lru_cache(maxsize=CACHE_SIZE)
def _ideal_lattice(ring: Ring) -> Tuple[Ideal, ...]:
    sets = closure_lattice(
        ring.order,
        lambda x: principal_ideal(ring, x).elements,
        ring.sum_set,
    )
    logger.debug("%s has %d ideals", ring.name, len(sets))
    return tuple(Ideal(ring, s) for s in sets)


def enumerate_ideals(ring: Ring, caps: Caps = DEFAULT_CAPS) -> List[Ideal]:
    """
    Lists every ideal once, sorted by cardinality then element list.

    :raise SizeCap: If the ring is above caps.ring_order
    """

    if ring.order > caps.ring_order:
        raise SizeCap("ring", ring.order, caps.ring_order)
    return list(_ideal_lattice(ring))


def zero_ideal(ring: Ring) -> Ideal:
    return Ideal(ring, frozenset({ring.zero}))


def maximal_ideals(ring: Ring, caps: Caps = DEFAULT_CAPS) -> List[Ideal]:
    """
    Proper ideals that are maximal under inclusion among proper ideals.
    """

    proper = [i for i in enumerate_ideals(ring, caps) if not i.is_whole]
    return [i for i in proper if not any(i.elements < j.elements for j in proper)]


def is_prime_ideal(ring: Ring, ideal: Ideal) -> bool:
    """
    A proper ideal P with ab in P implying a in P or b in P.
    """

    if ideal.is_whole:
        return False
    outside = [a for a in ring.elements if a not in ideal]
    for a in outside:
        row = ring.mul_row(a)
        if any(int(row[b]) in ideal for b in outside):
            return False
    return True


def prime_ideals(ring: Ring, caps: Caps = DEFAULT_CAPS) -> List[Ideal]:
    return [i for i in enumerate_ideals(ring, caps) if is_prime_ideal(ring, i)]


def jacobson_radical(ring: Ring, caps: Caps = DEFAULT_CAPS) -> Ideal:
    """
    Intersection of all maximal ideals.
    """

    elements = frozenset(ring.elements)
    for maximal in maximal_ideals(ring, caps):
        elements &= maximal.elements
    return Ideal(ring, elements)


@dataclasses.dataclass(frozen=True, slots=True)
class IdealOps:
    """
    Results of the binary ideal operations on a pair (I, J).
    """

    sum: Ideal
    product: Ideal
    intersection: Ideal
    colon: Ideal  # (I : J)
    annihilator: Ideal  # ann(I)


def ideal_sum(left: Ideal, right: Ideal) -> Ideal:
    return Ideal(left.ring, left.ring.sum_set(left.elements, right.elements))


def ideal_product(left: Ideal, right: Ideal) -> Ideal:
    ring = left.ring
    products = {ring.mul(a, b) for a in left.elements for b in right.elements}
    return ideal_closure(ring, sorted(products))


def ideal_intersection(left: Ideal, right: Ideal) -> Ideal:
    return Ideal(left.ring, left.elements & right.elements)


def ideal_colon(left: Ideal, right: Ideal) -> Ideal:
    """
    Determines (I : J) = {x : xJ in I}.
    """

    ring = left.ring
    targets = np.fromiter(right.elements, dtype=np.int64)
    inside = np.fromiter(left.elements, dtype=np.int64)
    elements = frozenset(
        x for x in ring.elements if np.isin(ring.mul_row(x)[targets], inside).all()
    )
    return Ideal(ring, elements)


def ideal_annihilator(ideal: Ideal) -> Ideal:
    return ideal_colon(zero_ideal(ideal.ring), ideal)


def ideal_ops(ring: Ring, left: Ideal, right: Ideal) -> IdealOps:
    """
    Computes sum, product, intersection, (I : J) and ann(I).

    :param ring: Ring both ideals live in
    :type ring: Ring
    :param left: The ideal I
    :type left: Ideal
    :param right: The ideal J
    :type right: Ideal
    :return: All five results
    :rtype: IdealOps
    """

    if left.ring is not ring or right.ring is not ring:
        raise ValueError("ideals must belong to the given ring")
    return IdealOps(
        sum=ideal_sum(left, right),
        product=ideal_product(left, right),
        intersection=ideal_intersection(left, right),
        colon=ideal_colon(left, right),
        annihilator=ideal_annihilator(left),
    )


def scaled_ideal(ideal: Ideal, t: int) -> Ideal:
    """
    Determines tI, itself an ideal.
    """

    ring = ideal.ring
    return Ideal(ring, frozenset(ring.mul(t, a) for a in ideal.elements))


# Units and zero divisors:

def units(ring: Ring) -> FrozenSet[int]:
    return frozenset(x for x in ring.elements if (ring.mul_row(x) == ring.one).any())


def zero_divisors_on(ring: Ring, module: Module) -> FrozenSet[int]:
    """
    Determines z(M) = {x : xm = 0 for some nonzero m}.
    """

    if module.ring is not ring:
        raise ValueError("module is not over this ring")
    nonzero = np.arange(module.order) != module.zero
    killed = (module.act_table[:, nonzero] == module.zero).any(axis=1)
    return frozenset(int(x) for x in np.flatnonzero(killed))


# Multiplicatively closed sets:

def validate_mcs(ring: Ring, subset: Iterable[int]) -> MCS:
    """
    Checks the three m.c.s. conditions and returns the validated set.

    :raise ContainsZero: If 0 is in the subset
    :raise MissingOne: If 1 is not in the subset
    :raise NotClosed: With the first (s, t), in canonical order, whose product escapes
    """

    elements = frozenset(int(x) for x in subset)
    if ring.zero in elements:
        raise ContainsZero()
    if ring.one not in elements:
        raise MissingOne()
    for s in sorted(elements):
        row = ring.mul_row(s)
        for t in sorted(elements):
            if int(row[t]) not in elements:
                raise NotClosed(ring.format(s), ring.format(t))
    return MCS(ring, elements)


def multiplicative_closure(ring: Ring, subset: Iterable[int]) -> FrozenSet[int]:
    """
    Least multiplicatively closed superset of subset and {1} (may contain 0).
    """

    closed = set(subset) | {ring.one}
    frontier = list(closed)
    while frontier:
        grown = []
        for a in frontier:
            for b in list(closed):
                c = ring.mul(a, b)
                if c not in closed:
                    closed.add(c)
                    grown.append(c)
        frontier = grown
    return frozenset(closed)


def generated_mcs(ring: Ring, s: int) -> Optional[MCS]:
    """
    The m.c.s. {1} U {s^k : k >= 1}, or None when some power of s is 0.
    """

    closed = multiplicative_closure(ring, [s])
    if ring.zero in closed:
        return None
    return MCS(ring, closed)


@functools.lru_cache(maxsize=CACHE_SIZE)
def _mcs_lattice(ring: Ring) -> Tuple[MCS, ...]:
    bottom = frozenset({ring.one})
    seen = {bottom}
    frontier = [bottom]
    while frontier:
        grown = []
        for current in frontier:
            for x in ring.elements:
                if x in current or x == ring.zero:
                    continue
                bigger = multiplicative_closure(ring, current | {x})
                # closures only grow, so a set holding 0 has no admissible superset
                if ring.zero in bigger or bigger in seen:
                    continue
                seen.add(bigger)
                grown.append(bigger)
        frontier = grown
    return tuple(MCS(ring, s) for s in sorted(seen, key=canonical_key))


def enumerate_mcs(ring: Ring, caps: Caps = DEFAULT_CAPS) -> List[MCS]:
    """
    Lists every multiplicatively closed set of the ring, in canonical order.

    :raise SizeCap: If the ring is above caps.ring_order
    """

    if ring.order > caps.ring_order:
        raise SizeCap("ring", ring.order, caps.ring_order)
    return list(_mcs_lattice(ring))


def _divisors_of(ring: Ring, targets: FrozenSet[int]) -> FrozenSet[int]:
    return frozenset(
        x for x in ring.elements if any(int(y) in targets for y in ring.mul_row(x))
    )


def saturation(mcs: MCS) -> MCS:
    """
    Determines S* = {x : rx in S for some r}.

    The result is checked to be an m.c.s., to contain S,
    and to be saturated itself.
    """

    ring = mcs.ring
    star = validate_mcs(ring, _divisors_of(ring, mcs.elements))
    if not mcs.elements <= star.elements:
        raise AxiomViolation("saturation contains S", tuple(mcs.elements - star.elements))
    if _divisors_of(ring, star.elements) != star.elements:
        raise AxiomViolation("saturation is saturated", (star.format(),))
    return star


def divides(ring: Ring, t: int, s: int) -> bool:
    """
    t | s, read as s in tR.
    """

    return bool((ring.mul_row(t) == s).any())


def has_maximal_multiple(mcs: MCS) -> Optional[int]:
    """
    Returns the first s in S divisible by every t in S, if any.
    """

    ring = mcs.ring
    for s in mcs:
        if all(divides(ring, t, s) for t in mcs):
            return s
    return None


def is_s_noetherian(ring: Ring, mcs: MCS) -> Tuple[bool, str]:
    """
    Every ideal of a finite ring is finitely generated,
    so every ideal is S-finite with s = 1.
    """

    return True, "trivially true at finite scale"


def complement_mcs(ring: Ring, prime: Ideal) -> MCS:
    """
    Builds R - P, validated as an m.c.s. (which holds exactly when P is prime).
    """

    return validate_mcs(ring, [x for x in ring.elements if x not in prime])


def product_mcs(left: MCS, right: MCS, ring: Ring) -> MCS:
    """
    Builds S1 x S2 inside ring = product_ring(R1, R2).
    """

    n2 = right.ring.order
    if ring.order != left.ring.order * n2:
        raise ValueError(f"{ring.name} is not the product of {left.ring.name} and {right.ring.name}")
    return validate_mcs(ring, [s1 * n2 + s2 for s1 in left for s2 in right])


def parse_ideal(ring: Ring, labels: Sequence[object]) -> Ideal:
    """
    Builds the ideal generated by labelled elements.
    """

    return ideal_closure(ring, [ring.index_of(label) for label in labels])

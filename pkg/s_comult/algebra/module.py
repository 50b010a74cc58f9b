"""
Finite unital modules over a Ring

A Module keeps its carrier as element indices with two tables:
'add_table' (carrier x carrier) and 'act_table' (ring x carrier).
Both are materialized, and checked against every module axiom
by the constructors in this file.
The constructor that produced a module is kept as its 'rule',
so instance files can spell standard modules by name.

Submodules are canonical element sets; all the lattice operations
(closure, enumeration, residuals, annihilators, torsion)
are computed directly on these sets.
"""

from __future__ import annotations

import dataclasses
import functools
import logging
from typing import Any, Callable, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np
import numpy.typing as npt

from s_comult.algebra.errors import AxiomViolation, InvariantBroken, SizeCap
from s_comult.algebra.ring import Ideal, Ring, product_ring
from s_comult.algebra.struct import CACHE_SIZE, DEFAULT_CAPS, Caps
from s_comult.algebra.utils import closure_lattice, format_label, radix_weights, residue_grid, subsets

logger = logging.getLogger(__name__)


class Module:
    """
    Module - a finite unital module over a Ring.

    Build these with one of the constructors below
    (make_module, self_module, zn_over_zk, direct_sum, from_tables, ...),
    which all validate the tables.
    Equality and hashing are by identity; use same_structure()
    to compare the invariant data of two modules.
    """

    def __init__(self, ring: Ring, add_table: npt.NDArray[np.int64], act_table: npt.NDArray[np.int64],
                 zero: int = 0, labels: Optional[Sequence[object]] = None,
                 moduli: Optional[Tuple[int, ...]] = None, name: str = "",
                 rule: Tuple[Any, ...] = ("table",)) -> None:

        self.ring = ring
        self.add_table = np.asarray(add_table, dtype=np.int64)
        self.act_table = np.asarray(act_table, dtype=np.int64)
        self.order: int = int(self.add_table.shape[0])
        self.zero: int = int(zero)
        self.labels: List[object] = list(labels) if labels is not None else list(range(self.order))
        self.moduli = moduli  # Carrier is Z_{d1} x ... x Z_{dm} in lexicographic order, when set
        self.name: str = name or f"M{self.order}"
        self.rule = rule

    def __repr__(self) -> str:
        return f"Module({self.name} over {self.ring.name})"

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def degenerate(self) -> bool:
        """
        True for the zero module, which theorem checks skip.
        """

        return self.order == 1

    def format(self, m: int) -> str:
        return format_label(self.labels[m])

    def index_of(self, label: object) -> int:
        """
        Maps a label as written in instance files to its element index.

        :param label: Int, residue tuple or table index
        :type label: object
        :return: Element index
        :rtype: int
        """

        if self.moduli is not None:
            residues = label if isinstance(label, tuple) else (label,)
            if len(residues) != len(self.moduli):
                raise ValueError(f"{label} does not have {len(self.moduli)} components")
            reduced = tuple(int(x) % d for x, d in zip(residues, self.moduli))
            weights = radix_weights(self.moduli)
            return int(sum(int(w) * x for w, x in zip(weights, reduced)))

        # quotients and restrictions keep the labels of their ambient module
        if label in self.labels:
            return self.labels.index(label)
        index = int(label)  # type: ignore[arg-type]
        if not 0 <= index < self.order:
            raise ValueError(f"{label} is not an element of {self.name}")
        return index

    def add(self, m: int, n: int) -> int:
        return int(self.add_table[m, n])

    def act(self, r: int, m: int) -> int:
        return int(self.act_table[r, m])

    def neg(self, m: int) -> int:
        return int(np.flatnonzero(self.add_table[m] == self.zero)[0])

    def sub(self, m: int, n: int) -> int:
        return self.add(m, self.neg(n))

    def sum_set(self, left: Iterable[int], right: Iterable[int]) -> FrozenSet[int]:
        """
        Determines {a + b : a in left, b in right}.
        """

        lhs = np.fromiter(left, dtype=np.int64)
        rhs = np.fromiter(right, dtype=np.int64)
        return frozenset(int(x) for x in np.unique(self.add_table[np.ix_(lhs, rhs)]))

    def image_under(self, r: int, elements: Iterable[int]) -> FrozenSet[int]:
        """
        Determines r * X for a set X of elements.
        """

        ids = np.fromiter(elements, dtype=np.int64)
        return frozenset(int(x) for x in np.unique(self.act_table[r, ids]))


@dataclasses.dataclass(frozen=True, slots=True)
class Submodule:
    """
    Submodule - canonical element set of a submodule.

    Equality is by element set (and module identity), never by generators.
    """

    module: Module
    elements: FrozenSet[int]
    generators: Tuple[int, ...] = dataclasses.field(default=(), compare=False)

    def __contains__(self, m: int) -> bool:
        return m in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.sorted)

    @property
    def sorted(self) -> Tuple[int, ...]:
        return tuple(sorted(self.elements))

    @property
    def is_zero(self) -> bool:
        return len(self.elements) == 1

    @property
    def is_whole(self) -> bool:
        return len(self.elements) == self.module.order

    def issubset(self, other: Submodule) -> bool:
        return self.elements <= other.elements

    def format(self) -> str:
        return "{" + ",".join(self.module.format(m) for m in self.sorted) + "}"


# Validation:

def _first_failure(mask: npt.NDArray[np.bool_]) -> Optional[Tuple[int, ...]]:
    hits = np.argwhere(mask)
    if hits.size == 0:
        return None
    return tuple(int(v) for v in hits[0])


def _check_module_axioms(module: Module) -> None:
    """
    Checks the abelian group and unital action axioms exhaustively.

    The ring side is read off row by row (add_row / mul_row),
    so zn_product rings never need tables.

    :param module: Module to check
    :type module: Module
    :raise AxiomViolation: On the first failing axiom, with a witnessing tuple
    """

    ring = module.ring
    n = module.order
    add, act = module.add_table, module.act_table

    if add.shape != (n, n) or act.shape != (ring.order, n):
        raise AxiomViolation("tables have the carrier and ring dimensions", (add.shape, act.shape))
    if ((add < 0) | (add >= n)).any() or ((act < 0) | (act >= n)).any():
        raise AxiomViolation("table entries must be carrier indices")
    if not 0 <= module.zero < n:
        raise AxiomViolation("designated 0 must be an element", (module.zero,))

    idx = np.arange(n)

    checks = [
        ("addition is commutative", lambda: _first_failure(add != add.T)),
        ("addition is associative",
         lambda: _first_failure(add[add[:, :, None], idx[None, None, :]] != add[idx[:, None, None], add[None, :, :]])),
        ("0 is an additive identity", lambda: _first_failure(add[module.zero] != idx)),
        ("every element has an additive inverse", lambda: _first_failure(~(add == module.zero).any(axis=1))),
        ("1m = m", lambda: _first_failure(act[ring.one] != idx)),
        ("r(m+m') = rm + rm'",
         lambda: _first_failure(act[:, add] != add[act[:, :, None], act[:, None, :]])),
    ]

    for axiom, check in checks:
        witness = check()
        if witness is not None:
            raise AxiomViolation(axiom, witness)

    for r in ring.elements:
        # (r + r')m against rm + r'm, and (rr')m against r(r'm), for every r'
        witness = _first_failure(act[ring.add_row(r)] != add[act[r][None, :], act])
        if witness is not None:
            raise AxiomViolation("(r+r')m = rm + r'm", (r,) + witness)
        witness = _first_failure(act[ring.mul_row(r)] != act[r][act])
        if witness is not None:
            raise AxiomViolation("(rr')m = r(r'm)", (r,) + witness)


def _admit(module: Module, caps: Caps, allow_zero: bool) -> Module:
    if module.order > caps.module_order:
        raise SizeCap("module", module.order, caps.module_order)
    if module.degenerate and not allow_zero:
        raise AxiomViolation("nonzero unital module", (module.name,))
    _check_module_axioms(module)
    return module


# Constructors:

def _carrier_add_table(moduli: Tuple[int, ...]) -> npt.NDArray[np.int64]:
    residues = residue_grid(moduli)
    weights = radix_weights(moduli)
    mod = np.array(moduli, dtype=np.int64)
    return (np.mod(residues[:, None, :] + residues[None, :, :], mod) * weights).sum(axis=-1)


def _carrier_labels(moduli: Tuple[int, ...]) -> List[object]:
    return [int(row[0]) if len(row) == 1 else tuple(int(x) for x in row) for row in residue_grid(moduli)]


def make_module(ring: Ring, moduli: Sequence[int],
                action: npt.ArrayLike | Callable[[int, Tuple[int, ...]], Sequence[int]],
                name: str = "", caps: Caps = DEFAULT_CAPS, allow_zero: bool = False) -> Module:
    """
    Builds a module on the carrier Z_{d1} x ... x Z_{dm}.

    The action is either a full table (ring element index by carrier index)
    or a rule taking a ring index and a residue tuple to a residue tuple.

    :param ring: Ring acting on the carrier
    :type ring: Ring
    :param moduli: Carrier moduli, each at least 1
    :type moduli: Sequence[int]
    :param action: Action table or rule
    :type action: npt.ArrayLike | Callable
    :param name: Display name
    :type name: str
    :param caps: Size caps
    :type caps: Caps
    :param allow_zero: Admit the (flagged) zero module
    :type allow_zero: bool
    :return: Validated module
    :rtype: Module
    :raise AxiomViolation: If an axiom fails
    :raise SizeCap: If the carrier is larger than caps.module_order
    """

    moduli = tuple(int(d) for d in moduli)
    if any(d < 1 for d in moduli):
        raise AxiomViolation("carrier moduli must be at least 1", moduli)
    order = int(np.prod(moduli)) if moduli else 1
    if order > caps.module_order:
        raise SizeCap("module", order, caps.module_order)

    residues = residue_grid(moduli)
    weights = radix_weights(moduli)
    mod = np.array(moduli, dtype=np.int64)

    if callable(action):
        act = np.empty((ring.order, order), dtype=np.int64)
        for r in ring.elements:
            for m in range(order):
                image = np.array(action(r, tuple(int(x) for x in residues[m])), dtype=np.int64)
                act[r, m] = int((np.mod(image, mod) * weights).sum())
    else:
        act = np.asarray(action, dtype=np.int64)

    module = Module(ring, _carrier_add_table(moduli), act, 0, _carrier_labels(moduli), moduli,
                    name or "x".join(f"Z{d}" for d in moduli), ("table",))
    return _admit(module, caps, allow_zero)


def self_module(ring: Ring, caps: Caps = DEFAULT_CAPS) -> Module:
    """
    The ring as a module over itself; submodules are exactly the ideals.
    """

    add = np.stack([ring.add_row(a) for a in ring.elements])
    act = np.stack([ring.mul_row(a) for a in ring.elements])
    moduli = ring.moduli if ring.kind == Ring.ZN_PRODUCT else None
    module = Module(ring, add, act, ring.zero, ring.labels, moduli, ring.name, ("self",))
    return _admit(module, caps, False)


@functools.lru_cache(maxsize=CACHE_SIZE)
def self_of(ring: Ring) -> Module:
    """
    Memoized self_module(); ideals of ring are its submodules, index for index.
    """

    return self_module(ring)


def ideal_submodule(ideal: Ideal) -> Submodule:
    return Submodule(self_of(ideal.ring), ideal.elements)


def zn_over_zk(ring: Ring, d: int, caps: Caps = DEFAULT_CAPS) -> Module:
    """
    Z_d over Z_n with d | n, acting by r * m mod d.

    :param ring: The ring Z_n (single modulus)
    :type ring: Ring
    :param d: Carrier modulus, dividing n
    :type d: int
    :return: Validated module
    :rtype: Module
    """

    if ring.kind != Ring.ZN_PRODUCT or len(ring.moduli) != 1:
        raise AxiomViolation("zn_over_zk needs a ring Z_n", (ring.name,))
    n = ring.moduli[0]
    if d < 1 or n % d:
        raise AxiomViolation("d divides n", (d, n))

    residues = np.arange(d, dtype=np.int64)
    act = np.mod(np.arange(n, dtype=np.int64)[:, None] * residues[None, :], d)
    module = Module(ring, _carrier_add_table((d,)), act, 0, list(range(d)), (d,), f"Z{d}",
                    ("zn_over_zk", d))
    return _admit(module, caps, d == 1)


def zero_module(ring: Ring) -> Module:
    """
    The flagged zero module over ring.
    """

    module = Module(ring, np.zeros((1, 1), dtype=np.int64), np.zeros((ring.order, 1), dtype=np.int64),
                    0, [0], (1,), "0", ("zero",))
    return _admit(module, DEFAULT_CAPS, True)


def direct_sum(left: Module, right: Module, caps: Caps = DEFAULT_CAPS) -> Module:
    """
    Builds M1 + M2 over their common ring, with (m1, m2) at index m1 * |M2| + m2.
    """

    if left.ring is not right.ring:
        raise AxiomViolation("summands share one ring", (left.ring.name, right.ring.name))
    n2 = right.order
    order = left.order * n2
    if order > caps.module_order:
        raise SizeCap("module", order, caps.module_order)

    add = (left.add_table[:, None, :, None] * n2 + right.add_table[None, :, None, :]).reshape(order, order)
    act = (left.act_table[:, :, None] * n2 + right.act_table[:, None, :]).reshape(left.ring.order, order)

    moduli = None
    labels: List[object] = [(a, b) for a in left.labels for b in right.labels]
    if left.moduli is not None and right.moduli is not None:
        moduli = left.moduli + right.moduli
        labels = _carrier_labels(moduli)

    module = Module(left.ring, add, act, left.zero * n2 + right.zero, labels, moduli,
                    f"{left.name}+{right.name}", ("direct_sum", left, right))
    return _admit(module, caps, False)


def from_tables(ring: Ring, add: npt.ArrayLike, act: npt.ArrayLike, zero: int = 0,
                labels: Optional[Sequence[object]] = None, name: str = "",
                caps: Caps = DEFAULT_CAPS, allow_zero: bool = False,
                rule: Tuple[Any, ...] = ("table",)) -> Module:
    """
    Builds a module from explicit tables on carrier indices 0..n-1.

    :param ring: Acting ring
    :type ring: Ring
    :param add: Carrier addition table, n x n
    :type add: npt.ArrayLike
    :param act: Action table, |R| x n
    :type act: npt.ArrayLike
    :param zero: Index of the zero element
    :type zero: int
    :return: Validated module
    :rtype: Module
    """

    module = Module(ring, np.asarray(add, dtype=np.int64), np.asarray(act, dtype=np.int64), zero,
                    labels, None, name, rule)
    return _admit(module, caps, allow_zero)


def coset_positions(module: Module, sub: Submodule) -> Tuple[npt.NDArray[np.int64], npt.NDArray[np.int64]]:
    """
    Lists coset representatives (least elements) and maps each element to its coset.

    :return: Representatives in increasing order, and coset position per element
    :rtype: Tuple[npt.NDArray[np.int64], npt.NDArray[np.int64]]
    """

    if sub.module is not module:
        raise ValueError("submodule does not belong to this module")

    members = np.fromiter(sub.elements, dtype=np.int64)
    coset_of = module.add_table[:, members].min(axis=1)
    reps = np.unique(coset_of)
    position = np.full(module.order, -1, dtype=np.int64)
    position[reps] = np.arange(reps.size)
    return reps, position[coset_of]


def quotient_module(module: Module, sub: Submodule, caps: Caps = DEFAULT_CAPS) -> Module:
    """
    Builds M/N on cosets, ordered by their least element index.

    The coset of m is labelled by the label of its least element.
    """

    reps, coset = coset_positions(module, sub)

    add = coset[module.add_table[np.ix_(reps, reps)]]
    act = coset[module.act_table[:, reps]]
    labels = [module.labels[int(r)] for r in reps]
    zero = int(coset[module.zero])

    quotient = Module(module.ring, add, act, zero, labels, None, f"{module.name}/{sub.format()}",
                      ("quotient", module, sub))
    return _admit(quotient, caps, True)


def submodule_as_module(sub: Submodule, caps: Caps = DEFAULT_CAPS) -> Module:
    """
    Restricts a submodule to a module of its own, keeping ring and action.

    Elements keep their relative order and their labels.
    """

    module = sub.module
    members = np.array(sub.sorted, dtype=np.int64)
    position = np.full(module.order, -1, dtype=np.int64)
    position[members] = np.arange(members.size)

    add = position[module.add_table[np.ix_(members, members)]]
    act = position[module.act_table[:, members]]
    restricted = Module(module.ring, add, act, int(position[module.zero]),
                        [module.labels[int(m)] for m in members], None, f"{sub.format()}<{module.name}",
                        ("submodule", sub))
    return _admit(restricted, caps, True)


@functools.lru_cache(maxsize=CACHE_SIZE)
def quotient_of(module: Module, sub: Submodule) -> Module:
    """
    Memoized quotient_module() with default caps.
    """

    return quotient_module(module, sub)


@functools.lru_cache(maxsize=CACHE_SIZE)
def restriction_of(sub: Submodule) -> Module:
    return submodule_as_module(sub)


def embed_submodule(sub: Submodule, restricted: Module) -> Tuple[int, ...]:
    """
    Index map from submodule_as_module(sub) back into the ambient module.
    """

    if restricted.order != len(sub):
        raise ValueError("module is not the restriction of this submodule")
    return sub.sorted


def product_module(left: Module, right: Module, caps: Caps = DEFAULT_CAPS) -> Module:
    """
    Builds M1 x M2 over R1 x R2, acting componentwise.

    Ring element (r1, r2) is index r1 * |R2| + r2 (see product_ring),
    module element (m1, m2) is index m1 * |M2| + m2.
    """

    ring = product_ring(left.ring, right.ring, caps)
    n2 = right.order
    order = left.order * n2
    if order > caps.module_order:
        raise SizeCap("module", order, caps.module_order)

    add = (left.add_table[:, None, :, None] * n2 + right.add_table[None, :, None, :]).reshape(order, order)
    act = (left.act_table[:, None, :, None] * n2 + right.act_table[None, :, None, :]).reshape(ring.order, order)

    moduli = None
    labels: List[object] = [(a, b) for a in left.labels for b in right.labels]
    if left.moduli is not None and right.moduli is not None:
        moduli = left.moduli + right.moduli
        labels = _carrier_labels(moduli)

    module = Module(ring, add, act, left.zero * n2 + right.zero, labels, moduli,
                    f"{left.name}x{right.name}", ("product", left, right))
    return _admit(module, caps, left.degenerate and right.degenerate)


def product_submodule(left: Submodule, right: Submodule, product: Module) -> Submodule:
    """
    N1 x N2 inside product_module(M1, M2).
    """

    n2 = right.module.order
    return Submodule(product, frozenset(a * n2 + b for a in left.elements for b in right.elements))


def same_structure(left: Module, right: Module) -> bool:
    """
    Compares the invariant data of two modules: ring, carrier, zero and tables.
    """

    return (
        left.ring is right.ring
        and left.order == right.order
        and left.zero == right.zero
        and np.array_equal(left.add_table, right.add_table)
        and np.array_equal(left.act_table, right.act_table)
    )


# Submodules:

def whole(module: Module) -> Submodule:
    return Submodule(module, frozenset(module.elements))


def zero_submodule(module: Module) -> Submodule:
    return Submodule(module, frozenset({module.zero}))


def cyclic_submodule(module: Module, m: int) -> Submodule:
    """
    Determines Rm, which is already closed under addition.
    """

    return Submodule(module, frozenset(int(x) for x in module.act_table[:, m]), (m,))


def submodule_closure(module: Module, generators: Iterable[int]) -> Submodule:
    """
    Determines the least submodule containing the generators.

    :param module: Ambient module
    :type module: Module
    :param generators: Generating elements
    :type generators: Iterable[int]
    :return: Generated submodule
    :rtype: Submodule
    """

    gens = tuple(generators)
    elements = frozenset({module.zero})
    for g in gens:
        if g not in elements:
            elements = module.sum_set(elements, cyclic_submodule(module, g).elements)
    return Submodule(module, elements, gens)


def parse_submodule(module: Module, labels: Sequence[object]) -> Submodule:
    return submodule_closure(module, [module.index_of(label) for label in labels])


def is_submodule(module: Module, subset: Iterable[int]) -> bool:
    """
    Checks the submodule invariants on a subset directly (test oracle).
    """

    elements = frozenset(subset)
    if module.zero not in elements:
        return False
    for a in elements:
        for b in elements:
            if module.add(a, b) not in elements:
                return False
        if not all(int(x) in elements for x in module.act_table[:, a]):
            return False
    return True


@functools.lru_cache(maxsize=CACHE_SIZE)
def submodule_lattice(module: Module) -> Tuple[Submodule, ...]:
    """
    Every submodule, sorted by cardinality then element list (no cap check).
    """

    sets = closure_lattice(
        module.order,
        lambda m: cyclic_submodule(module, m).elements,
        module.sum_set,
    )
    logger.debug("%s has %d submodules", module, len(sets))
    return tuple(Submodule(module, s) for s in sets)


def enumerate_submodules(module: Module, caps: Caps = DEFAULT_CAPS) -> List[Submodule]:
    """
    Lists every submodule once, sorted by cardinality then element list.

    :raise SizeCap: If the carrier is above caps.module_order
    """

    if module.order > caps.module_order:
        raise SizeCap("module", module.order, caps.module_order)
    return list(submodule_lattice(module))


def brute_force_submodules(module: Module) -> List[Submodule]:
    """
    Filters every subset of the carrier through is_submodule (test oracle).
    """

    found = [Submodule(module, s) for s in subsets(list(module.elements)) if is_submodule(module, s)]
    return sorted(found, key=lambda n: (len(n), n.sorted))


def submodule_sum(left: Submodule, right: Submodule) -> Submodule:
    return Submodule(left.module, left.module.sum_set(left.elements, right.elements))


def submodule_intersection(left: Submodule, right: Submodule) -> Submodule:
    return Submodule(left.module, left.elements & right.elements)


def scaled(sub: Submodule, s: int) -> Submodule:
    """
    Determines sN, itself a submodule.
    """

    return Submodule(sub.module, sub.module.image_under(s, sub.elements))


def ideal_times(ideal: Ideal, sub: Submodule) -> Submodule:
    """
    Determines IN, the submodule generated by every an with a in I, n in N.
    """

    module = sub.module
    products = module.act_table[np.ix_(np.array(ideal.sorted), np.array(sub.sorted))]
    return submodule_closure(module, sorted({int(x) for x in products.ravel()}))


# Residuals:

def _checked_ideal(ring: Ring, elements: FrozenSet[int], name: str) -> Ideal:
    ids = np.fromiter(elements, dtype=np.int64)
    members = np.fromiter(ring.sum_set(elements, elements), dtype=np.int64)
    closed = np.isin(members, ids).all() and all(np.isin(ring.mul_row(int(x)), ids).all() for x in ids)
    if not closed or ring.zero not in elements:
        raise InvariantBroken(name, "result is not an ideal")
    return Ideal(ring, elements)


def _checked_submodule(module: Module, elements: FrozenSet[int], name: str) -> Submodule:
    ids = np.fromiter(elements, dtype=np.int64)
    closed = (
        module.zero in elements
        and np.isin(module.add_table[np.ix_(ids, ids)], ids).all()
        and np.isin(module.act_table[:, ids], ids).all()
    )
    if not closed:
        raise InvariantBroken(name, "result is not a submodule")
    return Submodule(module, elements)


def colon_into_ring(sub: Submodule, subset: Iterable[int]) -> Ideal:
    """
    Determines (N : K) = {x in R : xK in N}.

    :param sub: The submodule N
    :type sub: Submodule
    :param subset: The elements K (a submodule, or any nonempty subset)
    :type subset: Iterable[int]
    :return: The residual ideal
    :rtype: Ideal
    """

    module = sub.module
    targets = np.fromiter(subset, dtype=np.int64)
    inside = np.fromiter(sub.elements, dtype=np.int64)
    mask = np.isin(module.act_table[:, targets], inside).all(axis=1)
    return _checked_ideal(module.ring, frozenset(int(x) for x in np.flatnonzero(mask)), "(N : K)")


@functools.lru_cache(maxsize=CACHE_SIZE)
def _colon_into_module(sub: Submodule, ideal: Ideal) -> Submodule:
    module = sub.module
    scalars = np.array(ideal.sorted, dtype=np.int64)
    inside = np.fromiter(sub.elements, dtype=np.int64)
    mask = np.isin(module.act_table[scalars, :], inside).all(axis=0)
    return _checked_submodule(module, frozenset(int(m) for m in np.flatnonzero(mask)), "(N :_M J)")


def colon_into_module(sub: Submodule, ideal: Ideal) -> Submodule:
    """
    Determines (N :_M J) = {m in M : Jm in N}.

    :param sub: The submodule N
    :type sub: Submodule
    :param ideal: The ideal J
    :type ideal: Ideal
    :return: The residual submodule
    :rtype: Submodule
    """

    if ideal.ring is not sub.module.ring:
        raise ValueError("ideal and submodule live over different rings")
    return _colon_into_module(sub, ideal)


@functools.lru_cache(maxsize=CACHE_SIZE)
def annihilator(sub: Submodule) -> Ideal:
    """
    Determines ann(K) = (0 : K).
    """

    return colon_into_ring(zero_submodule(sub.module), sub.elements)


def module_annihilator(module: Module) -> Ideal:
    return annihilator(whole(module))


def zero_colon(module: Module, ideal: Ideal) -> Submodule:
    """
    Determines (0 :_M I).
    """

    return colon_into_module(zero_submodule(module), ideal)


def ann_closure(sub: Submodule) -> Submodule:
    """
    Determines (0 :_M ann(N)), which always contains N.
    """

    return zero_colon(sub.module, annihilator(sub))


# Torsion:

def torsion_set(module: Module) -> FrozenSet[int]:
    """
    Determines T(M) = {m : rm = 0 for some nonzero r}.
    """

    ring = module.ring
    nonzero = np.arange(ring.order) != ring.zero
    killed = (module.act_table[nonzero, :] == module.zero).any(axis=0)
    return frozenset(int(m) for m in np.flatnonzero(killed))


def is_torsion(module: Module) -> bool:
    return len(torsion_set(module)) == module.order


def clear_caches() -> None:
    """
    Drops every memoized lattice and residual in this module.
    """

    submodule_lattice.cache_clear()
    quotient_of.cache_clear()
    restriction_of.cache_clear()
    _colon_into_module.cache_clear()
    annihilator.cache_clear()

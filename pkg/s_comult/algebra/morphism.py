"""
Homomorphisms between finite modules over one ring

A ModuleHom is its value table on the source carrier.
This file also holds the S-zero / S-monic / S-epic classification,
homotheties on quotients and submodules,
and the transfer check for S-comultiplication along a homomorphism.
"""

from __future__ import annotations

import dataclasses
import itertools
import logging
from typing import Dict, List, Optional, Tuple

import numpy as np
import numpy.typing as npt

from s_comult.algebra.errors import AxiomViolation, PreconditionUnmet, SizeCap
from s_comult.algebra.module import (Module, Submodule, coset_positions, embed_submodule, quotient_of,
                                     restriction_of, scaled, submodule_closure)
from s_comult.algebra.ring import MCS, units, zero_divisors_on
from s_comult.algebra.struct import DEFAULT_CAPS, Caps, Witness, WitnessKind

logger = logging.getLogger(__name__)


class ModuleHom:
    """
    ModuleHom - an R-linear map between two modules over the same ring.

    Use make_hom() (or one of the canonical maps) to get a validated instance.
    """

    def __init__(self, source: Module, target: Module, table: npt.NDArray[np.int64], name: str = "") -> None:

        self.source = source
        self.target = target
        self.table = np.asarray(table, dtype=np.int64)
        self.name: str = name or "f"

    def __repr__(self) -> str:
        return f"ModuleHom({self.name}: {self.source.name} -> {self.target.name})"

    def __call__(self, m: int) -> int:
        return int(self.table[m])

    @property
    def injective(self) -> bool:
        return len(set(self.table.tolist())) == self.source.order

    @property
    def surjective(self) -> bool:
        return len(set(self.table.tolist())) == self.target.order

    @property
    def is_zero(self) -> bool:
        return bool((self.table == self.target.zero).all())


def _check_hom(f: ModuleHom) -> None:
    source, target, table = f.source, f.target, f.table
    if table.shape != (source.order,) or ((table < 0) | (table >= target.order)).any():
        raise AxiomViolation("map is total on the source carrier", (table.shape,))

    hits = np.argwhere(table[source.add_table] != target.add_table[table[:, None], table[None, :]])
    if hits.size:
        raise AxiomViolation("f(m+m') = f(m) + f(m')", tuple(int(v) for v in hits[0]))

    hits = np.argwhere(table[source.act_table] != target.act_table[:, table])
    if hits.size:
        raise AxiomViolation("f(rm) = rf(m)", tuple(int(v) for v in hits[0]))


def make_hom(source: Module, target: Module, table: npt.ArrayLike, name: str = "") -> ModuleHom:
    """
    Builds and validates a homomorphism from its value table.

    :param source: Source module
    :type source: Module
    :param target: Target module, over the same ring
    :type target: Module
    :param table: f(m) for every source index m
    :type table: npt.ArrayLike
    :param name: Display name
    :type name: str
    :return: Validated homomorphism
    :rtype: ModuleHom
    :raise AxiomViolation: If f is not additive or not R-linear
    """

    if source.ring is not target.ring:
        raise AxiomViolation("source and target share one ring", (source.ring.name, target.ring.name))
    f = ModuleHom(source, target, np.asarray(table, dtype=np.int64), name)
    _check_hom(f)
    return f


def kernel(f: ModuleHom) -> Submodule:
    return Submodule(f.source, frozenset(int(m) for m in np.flatnonzero(f.table == f.target.zero)))


def image(f: ModuleHom) -> Submodule:
    return Submodule(f.target, frozenset(int(y) for y in np.unique(f.table)))


def compose(g: ModuleHom, f: ModuleHom) -> ModuleHom:
    """
    g after f.
    """

    return make_hom(f.source, g.target, g.table[f.table], f"{g.name}.{f.name}")


# Canonical maps:

def identity(module: Module) -> ModuleHom:
    return make_hom(module, module, np.arange(module.order), "id")


def inclusion(sub: Submodule) -> ModuleHom:
    """
    N -> M, with N restricted to a module of its own.
    """

    restricted = restriction_of(sub)
    return make_hom(restricted, sub.module, np.array(embed_submodule(sub, restricted)), "incl")


def projection(module: Module, sub: Submodule) -> ModuleHom:
    """
    The canonical surjection M -> M/N.
    """

    _, coset = coset_positions(module, sub)
    return make_hom(module, quotient_of(module, sub), coset, "proj")


def homothety(module: Module, sub: Submodule, a: int) -> ModuleHom:
    """
    Multiplication by a on M/P.
    """

    quotient = quotient_of(module, sub)
    return make_hom(quotient, quotient, quotient.act_table[a], f"x{module.ring.format(a)} on M/P")


def homothety_on(sub: Submodule, a: int) -> ModuleHom:
    """
    Multiplication by a on N.
    """

    restricted = restriction_of(sub)
    return make_hom(restricted, restricted, restricted.act_table[a], f"x{sub.module.ring.format(a)} on N")


def _generating_set(module: Module) -> Tuple[int, ...]:
    gens: List[int] = []
    span = frozenset({module.zero})
    for m in module.elements:
        if m not in span:
            gens.append(m)
            span = submodule_closure(module, gens).elements
    return tuple(gens)


def _coordinates(module: Module, gens: Tuple[int, ...]) -> npt.NDArray[np.int64]:
    """
    Writes every element as sum r_i g_i; row m holds one choice of the r_i.
    """

    ring = module.ring
    coords: Dict[int, Tuple[int, ...]] = {module.zero: (ring.zero,) * len(gens)}
    for i, g in enumerate(gens):
        for x, c in list(coords.items()):
            for r in ring.elements:
                y = module.add(x, module.act(r, g))
                if y not in coords:
                    coords[y] = c[:i] + (r,) + c[i + 1:]
    return np.array([coords[m] for m in module.elements], dtype=np.int64).reshape(module.order, len(gens))


def enumerate_homs(source: Module, target: Module, caps: Caps = DEFAULT_CAPS) -> List[ModuleHom]:
    """
    Lists every homomorphism source -> target.

    A map is fixed by the images of a generating set,
    so we try every image tuple, extend linearly and keep what validates.

    :param source: Source module
    :type source: Module
    :param target: Target module
    :type target: Module
    :param caps: Size caps
    :type caps: Caps
    :return: All homomorphisms, ordered by image tuple
    :rtype: List[ModuleHom]
    :raise SizeCap: If the source is above caps.hom_source_order
    """

    if source.order > caps.hom_source_order:
        raise SizeCap("hom source", source.order, caps.hom_source_order)
    if source.ring is not target.ring:
        raise AxiomViolation("source and target share one ring", (source.ring.name, target.ring.name))

    gens = _generating_set(source)
    coords = _coordinates(source, gens)
    found: List[ModuleHom] = []

    for images in itertools.product(target.elements, repeat=len(gens)):
        table = np.full(source.order, target.zero, dtype=np.int64)
        for i, y in enumerate(images):
            table = target.add_table[table, target.act_table[coords[:, i], y]]
        f = ModuleHom(source, target, table, f"h{len(found)}")
        try:
            _check_hom(f)
        except AxiomViolation:
            continue
        found.append(f)

    logger.debug("%d homs %s -> %s", len(found), source.name, target.name)
    return found


# S-classification:

def s_zero_at(f: ModuleHom, s: int) -> bool:
    """
    s f(m) = 0 for every m.
    """

    return bool((f.target.act_table[s, f.table] == f.target.zero).all())


def _s_monic_by_definition(f: ModuleHom, s: int) -> bool:
    source = f.source
    return all(
        source.act(s, m) == source.zero
        for m in source.elements
        if f(m) == f.target.zero
    )


def s_monic_at(f: ModuleHom, s: int) -> bool:
    """
    f(m) = 0 implies sm = 0, cross-checked against s Ker(f) = 0.
    """

    by_definition = _s_monic_by_definition(f, s)
    by_kernel = scaled(kernel(f), s).is_zero
    if by_definition != by_kernel:
        raise AxiomViolation("S-monic forms agree", (f.name, f.source.ring.format(s)))
    return by_kernel


def s_epic_at(f: ModuleHom, s: int) -> bool:
    """
    sM' is inside Im f.
    """

    return f.target.image_under(s, f.target.elements) <= image(f).elements


def _first(mcs: MCS, test) -> Optional[Witness]:
    for s in mcs:
        if test(s):
            return Witness(WitnessKind.SINGLE_S, s=s)
    return None


def is_s_zero(f: ModuleHom, mcs: MCS) -> Optional[Witness]:
    return _first(mcs, lambda s: s_zero_at(f, s))


def is_s_monic(f: ModuleHom, mcs: MCS) -> Optional[Witness]:
    return _first(mcs, lambda s: s_monic_at(f, s))


def is_s_epic(f: ModuleHom, mcs: MCS) -> Optional[Witness]:
    return _first(mcs, lambda s: s_epic_at(f, s))


def monic_epic_bridge(f: ModuleHom, mcs: MCS) -> Dict[str, Optional[bool]]:
    """
    Checks the implications between monic/epic and their S-versions.

    Each claim maps to True when it holds, False when it fails,
    and None when its side condition does not apply to (f, S).

    :param f: Homomorphism to check
    :type f: ModuleHom
    :param mcs: The set S
    :type mcs: MCS
    :return: Claim name to verdict
    :rtype: Dict[str, Optional[bool]]
    """

    ring = f.source.ring
    s_monic = is_s_monic(f, mcs) is not None
    s_epic = is_s_epic(f, mcs) is not None
    regular = not (mcs.elements & zero_divisors_on(ring, f.source))
    invertible = mcs.elements <= units(ring)

    return {
        "monic implies S-monic": (s_monic if f.injective else None),
        "epic implies S-epic": (s_epic if f.surjective else None),
        "S-monic implies monic when S avoids z(M)": (f.injective if regular and s_monic else None),
        "S-epic implies epic when S is in u(R)": (f.surjective if invertible and s_epic else None),
    }


@dataclasses.dataclass(slots=True)
class TransferReport:
    """
    TransferReport - S-comultiplication moved along f with t Ker(f) = 0.
    """

    t: int  # First t in S killing the kernel
    source_comultiplication: bool
    target_comultiplication: bool
    surjective: bool
    pullback_holds: bool  # target S-comultiplication gives source S-comultiplication
    pushforward_holds: Optional[bool]  # None unless f is onto and the source qualifies
    counterexample: Optional[Submodule] = None


def transfer_theorem_check(f: ModuleHom, mcs: MCS, caps: Caps = DEFAULT_CAPS) -> TransferReport:
    """
    Checks both transfer directions of S-comultiplication along f.

    :param f: Homomorphism with t Ker(f) = 0 for some t in S
    :type f: ModuleHom
    :param mcs: The set S
    :type mcs: MCS
    :param caps: Size caps
    :type caps: Caps
    :return: Verdicts of both directions
    :rtype: TransferReport
    :raise PreconditionUnmet: If no t in S kills Ker(f)
    """

    from s_comult.theory import predicates

    ker = kernel(f)
    t = next((s for s in mcs if scaled(ker, s).is_zero), None)
    if t is None:
        raise PreconditionUnmet(f"no t in {mcs.format()} kills Ker({f.name})")

    source_ok, source_fail = predicates.comultiplication_failure(f.source, mcs, caps)
    target_ok, target_fail = predicates.comultiplication_failure(f.target, mcs, caps)

    pullback = source_ok or not target_ok
    pushforward = None
    if f.surjective and source_ok:
        pushforward = target_ok

    counterexample = None
    if not pullback:
        counterexample = source_fail
    elif pushforward is False:
        counterexample = target_fail

    return TransferReport(t, source_ok, target_ok, f.surjective, pullback, pushforward, counterexample)



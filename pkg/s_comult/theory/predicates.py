"""
S-theoretic predicates with deterministic witness search

Every 'there exists s in S' is searched outermost,
with S in canonical element order,
so a returned Witness names the first s that serves every case at once.
Disjointness conditions that a definition presupposes
raise DisjointnessFailure instead of answering False.

Functions here call each other through this module's namespace,
which lets the mutation harness swap a single predicate.
"""

from __future__ import annotations

import dataclasses
import functools
import itertools
from typing import Dict, List, Optional, Tuple

import numpy as np

from s_comult.algebra import morphism
from s_comult.algebra.errors import DisjointnessFailure, InvariantBroken, PreconditionUnmet, SizeCap
from s_comult.algebra.module import (Module, Submodule, ann_closure, annihilator, colon_into_module,
                                     colon_into_ring, ideal_submodule, ideal_times, module_annihilator,
                                     scaled, self_of, submodule_closure, submodule_lattice, whole, zero_colon)
from s_comult.algebra.ring import MCS, Ideal, Ring, enumerate_ideals, principal_ideal
from s_comult.algebra.struct import CACHE_SIZE, DEFAULT_CAPS, Caps, Witness, WitnessKind


@dataclasses.dataclass(frozen=True, slots=True)
class Verdicts:
    """
    Verdicts - answers of several characterizations of one property.
    """

    labels: Tuple[str, ...]
    values: Tuple[bool, ...]

    @property
    def agree(self) -> bool:
        return len(set(self.values)) <= 1

    def as_dict(self) -> Dict[str, bool]:
        return dict(zip(self.labels, self.values))


def _submodules(module: Module, caps: Caps) -> Tuple[Submodule, ...]:
    if module.order > caps.module_order:
        raise SizeCap("module", module.order, caps.module_order)
    return submodule_lattice(module)


def _mask(size: int, members) -> np.ndarray:
    out = np.zeros(size, dtype=bool)
    out[list(members)] = True
    return out


# S-prime:

def residual(sub: Submodule) -> Ideal:
    """
    Determines (P : M).
    """

    return colon_into_ring(sub, sub.module.elements)


def _first_in(mcs: MCS, ideal: Ideal) -> Optional[int]:
    return next((s for s in mcs if s in ideal), None)


def _prime_condition_holds(sub: Submodule, colon: Ideal, s: int) -> bool:
    """
    am in P implies sa in (P : M) or sm in P, for every a and m.
    """

    module = sub.module
    ring = module.ring
    in_sub = _mask(module.order, sub.elements)
    in_colon = _mask(ring.order, colon.elements)
    hits = in_sub[module.act_table]
    ok = ~hits | in_colon[ring.mul_row(s)][:, None] | in_sub[module.act_table[s]][None, :]
    return bool(ok.all())


def is_s_prime_submodule(module: Module, sub: Submodule, mcs: MCS) -> Optional[Witness]:
    """
    Searches for one s in S making P an S-prime submodule.

    :param module: Ambient module M
    :type module: Module
    :param sub: Candidate P
    :type sub: Submodule
    :param mcs: The set S
    :type mcs: MCS
    :return: Witness with the first such s, or None
    :rtype: Optional[Witness]
    :raise DisjointnessFailure: If (P : M) meets S
    """

    colon = residual(sub)
    clash = _first_in(mcs, colon)
    if clash is not None:
        raise DisjointnessFailure("(P:M)", module.ring.format(clash))
    for s in mcs:
        if _prime_condition_holds(sub, colon, s):
            return Witness(WitnessKind.SINGLE_S, s=s)
    return None


def is_s_prime_ideal(ring: Ring, ideal: Ideal, mcs: MCS) -> Optional[Witness]:
    return is_s_prime_submodule(self_of(ring), ideal_submodule(ideal), mcs)


def is_prime_submodule(module: Module, sub: Submodule) -> bool:
    """
    P proper, and am in P gives m in P or aM in P.
    """

    if sub.is_whole:
        return False
    return _prime_condition_holds(sub, residual(sub), module.ring.one)


def s_prime_characterizations(module: Module, sub: Submodule, mcs: MCS) -> Verdicts:
    """
    Compares three readings of 'P is S-prime'.

    direct: the definition;
    quotient_prime: (P :_M s) is prime for some s,
    with (P :_M s') inside (P :_M s) for every s';
    homothety: for one s, every homothety a on M/P is
    S-zero or S-monic with respect to s.

    :raise DisjointnessFailure: If (P : M) meets S
    """

    ring = module.ring
    direct = is_s_prime_submodule(module, sub, mcs) is not None

    colons = {s: colon_into_module(sub, principal_ideal(ring, s)) for s in mcs}
    quotient_prime = any(
        is_prime_submodule(module, colons[s]) and all(colons[t].issubset(colons[s]) for t in mcs)
        for s in mcs
    )

    homotheties = [morphism.homothety(module, sub, a) for a in ring.elements]
    homothety = any(
        all(morphism.s_zero_at(h, s) or morphism.s_monic_at(h, s) for h in homotheties)
        for s in mcs
    )

    return Verdicts(("direct", "quotient_prime", "homothety"), (direct, quotient_prime, homothety))


# S-second:

def _second_scan(sub: Submodule, s: int) -> bool:
    """
    saN = 0 or saN = sN for every a.

    saN always sits inside sN, so equality is a count.
    """

    module = sub.module
    ring = module.ring
    images = module.act_table[ring.mul_row(s)][:, np.array(sub.sorted)]
    s_count = len(scaled(sub, s))
    ordered = np.sort(images, axis=1)
    counts = 1 + (np.diff(ordered, axis=1) != 0).sum(axis=1)
    killed = (images == module.zero).all(axis=1)
    return bool((killed | (counts == s_count)).all())


def is_s_second(module: Module, sub: Submodule, mcs: MCS) -> Optional[Witness]:
    """
    Searches for one s in S making N an S-second submodule.

    :param module: Ambient module M
    :type module: Module
    :param sub: Candidate N, nonzero
    :type sub: Submodule
    :param mcs: The set S
    :type mcs: MCS
    :return: Witness with the first such s, or None
    :rtype: Optional[Witness]
    :raise PreconditionUnmet: If N is zero
    :raise DisjointnessFailure: If ann(N) meets S
    """

    if sub.is_zero:
        raise PreconditionUnmet("second submodules are nonzero")
    clash = _first_in(mcs, annihilator(sub))
    if clash is not None:
        raise DisjointnessFailure("ann(N)", module.ring.format(clash))
    for s in mcs:
        if _second_scan(sub, s):
            return Witness(WitnessKind.SINGLE_S, s=s)
    return None


def is_second_submodule(module: Module, sub: Submodule) -> bool:
    """
    N nonzero, with aN = 0 or aN = N for every a.
    """

    if sub.is_zero:
        return False
    return _second_scan(sub, module.ring.one)


def s_second_characterizations(module: Module, sub: Submodule, mcs: MCS) -> Verdicts:
    """
    Compares the definition of 'N is S-second' with its homothety
    form (zero or S-surjective on N) and its containment form
    (saN = 0 or sN inside aN).

    :raise DisjointnessFailure: If ann(N) meets S
    """

    ring = module.ring
    direct = is_s_second(module, sub, mcs) is not None

    homotheties = [morphism.homothety_on(sub, a) for a in ring.elements]
    homothety = any(
        all(morphism.s_zero_at(h, s) or morphism.s_epic_at(h, s) for h in homotheties)
        for s in mcs
    )

    a_images = [module.image_under(a, sub.elements) for a in ring.elements]
    containment = any(
        all(
            scaled(sub, ring.mul(s, a)).is_zero or scaled(sub, s).elements <= a_images[a]
            for a in ring.elements
        )
        for s in mcs
    )

    return Verdicts(("direct", "homothety", "containment"), (direct, homothety, containment))


# S-comultiplication:

@functools.lru_cache(maxsize=CACHE_SIZE)
def comultiplication_witnesses(module: Module, mcs: MCS) -> Tuple[Tuple[Submodule, Optional[Witness]], ...]:
    """
    For every submodule N, the first s with s (0 :_M ann(N)) inside N.

    (0 :_M ann(N)) is checked to contain N along the way.
    """

    out: List[Tuple[Submodule, Optional[Witness]]] = []
    for sub in submodule_lattice(module):
        closure = ann_closure(sub)
        if not sub.issubset(closure):
            raise InvariantBroken("N inside (0 :_M ann(N))", sub.format())
        members = np.array(closure.sorted)
        inside = np.array(sub.sorted)
        s = next((s for s in mcs if np.isin(module.act_table[s, members], inside).all()), None)
        out.append((sub, None if s is None else Witness(WitnessKind.S_AND_IDEAL, s=s, ideal=annihilator(sub))))
    return tuple(out)


def is_s_comultiplication(module: Module, mcs: MCS, caps: Caps = DEFAULT_CAPS) -> Optional[Dict[Submodule, Witness]]:
    """
    Decides whether M is an S-comultiplication module.

    :param module: Module M
    :type module: Module
    :param mcs: The set S
    :type mcs: MCS
    :param caps: Size caps
    :type caps: Caps
    :return: Witness per submodule, or None when some submodule has none
    :rtype: Optional[Dict[Submodule, Witness]]
    """

    _submodules(module, caps)
    found: Dict[Submodule, Witness] = {}
    for sub, witness in comultiplication_witnesses(module, mcs):
        if witness is None:
            return None
        found[sub] = witness
    return found


def comultiplication_failure(module: Module, mcs: MCS, caps: Caps = DEFAULT_CAPS) -> Tuple[bool, Optional[Submodule]]:
    """
    Verdict of is_s_comultiplication together with the first failing N.
    """

    _submodules(module, caps)
    for sub, witness in comultiplication_witnesses(module, mcs):
        if witness is None:
            return False, sub
    return True, None


def lemma_pair_witness(small: Submodule, big: Submodule, mcs: MCS) -> Optional[int]:
    """
    First s with s * big inside small.
    """

    return next((s for s in mcs if scaled(big, s).issubset(small)), None)


def lemma_equivalence_bundle(module: Module, mcs: MCS, caps: Caps = DEFAULT_CAPS) -> Verdicts:
    """
    Evaluates S-comultiplication three ways.

    definition: every N has s and an ideal I with s(0 :_M I) in N in (0 :_M I);
    annihilator: every N has s with s(0 :_M ann(N)) in N;
    pairs: ann(K) in ann(N) gives some s with sN in K.

    :raise SizeCap: When ideal or submodule enumeration is over its cap
    """

    subs = _submodules(module, caps)
    ideals = enumerate_ideals(module.ring, caps)

    def sandwiched(sub: Submodule) -> bool:
        for ideal in ideals:
            outer = zero_colon(module, ideal)
            if sub.issubset(outer) and any(scaled(outer, s).issubset(sub) for s in mcs):
                return True
        return False

    definition = all(sandwiched(sub) for sub in subs)
    by_annihilator = is_s_comultiplication(module, mcs, caps) is not None
    pairs = all(
        lemma_pair_witness(k, n, mcs) is not None
        for k in subs
        for n in subs
        if annihilator(k).issubset(annihilator(n))
    )
    return Verdicts(("definition", "annihilator", "pairs"), (definition, by_annihilator, pairs))


def is_comultiplication(module: Module, caps: Caps = DEFAULT_CAPS) -> bool:
    return all(sub == ann_closure(sub) for sub in _submodules(module, caps))


def is_multiplication(module: Module, caps: Caps = DEFAULT_CAPS) -> bool:
    return all(sub == ideal_times(residual(sub), whole(module)) for sub in _submodules(module, caps))


def is_s_multiplication(module: Module, mcs: MCS, caps: Caps = DEFAULT_CAPS) -> bool:
    """
    Every N has s with sN inside (N : M)M.
    """

    return all(
        any(scaled(sub, s).issubset(ideal_times(residual(sub), whole(module))) for s in mcs)
        for sub in _submodules(module, caps)
    )


def is_s_multiplication_general(module: Module, mcs: MCS, caps: Caps = DEFAULT_CAPS) -> bool:
    """
    Every N has s and an ideal I with sN inside IM inside N.
    """

    ideals = enumerate_ideals(module.ring, caps)
    everything = whole(module)

    def covered(sub: Submodule) -> bool:
        for ideal in ideals:
            middle = ideal_times(ideal, everything)
            if middle.issubset(sub) and any(scaled(sub, s).issubset(middle) for s in mcs):
                return True
        return False

    return all(covered(sub) for sub in _submodules(module, caps))


# S-cyclic, S-finite, S-torsion free:

def is_s_cyclic(module: Module, mcs: MCS) -> Optional[Witness]:
    """
    First (s, m) in canonical order with sM inside Rm.
    """

    for s in mcs:
        s_module = module.image_under(s, module.elements)
        for m in module.elements:
            if s_module <= frozenset(int(x) for x in module.act_table[:, m]):
                return Witness(WitnessKind.S_AND_ELEMENT, s=s, element=m)
    return None


def minimal_generators(sub: Submodule) -> Tuple[int, ...]:
    """
    A small generating set, picked greedily from the largest cyclic submodules down.
    """

    module = sub.module
    order = sorted(sub.elements, key=lambda m: (-len(set(module.act_table[:, m].tolist())), m))
    gens: List[int] = []
    span = frozenset({module.zero})
    for m in order:
        if span == sub.elements:
            break
        if m not in span:
            gens.append(m)
            span = submodule_closure(module, gens).elements
    return tuple(gens)


def is_s_finite(module: Module, sub: Submodule, mcs: MCS) -> Witness:
    """
    Always holds at finite scale with s = 1 and K = N.
    """

    return Witness(WitnessKind.SINGLE_S, s=module.ring.one, extra=minimal_generators(sub))


def is_s_torsion_free(module: Module, mcs: MCS) -> Optional[Witness]:
    """
    First s with: am = 0 gives sa = 0 or sm = 0.
    """

    ring = module.ring
    zero_products = module.act_table == module.zero
    for s in mcs:
        ok = ~zero_products | (ring.mul_row(s) == ring.zero)[:, None] | (module.act_table[s] == module.zero)[None, :]
        if ok.all():
            return Witness(WitnessKind.SINGLE_S, s=s)
    return None


# S-minimal and prime modules:

def is_s_minimal(module: Module, sub: Submodule, mcs: MCS, nonzero_only: bool = True,
                 caps: Caps = DEFAULT_CAPS) -> Optional[Witness]:
    """
    K is S-minimal when every submodule L inside K has s with sK inside L.

    :param module: Ambient module
    :type module: Module
    :param sub: The submodule K, nonzero
    :type sub: Submodule
    :param mcs: The set S
    :type mcs: MCS
    :param nonzero_only: Range over nonzero L only (False includes L = 0)
    :type nonzero_only: bool
    :return: Witness mapping each L to its s (in extra), or None
    :rtype: Optional[Witness]
    :raise PreconditionUnmet: If K is zero
    """

    if sub.is_zero:
        raise PreconditionUnmet("S-minimal submodules are nonzero")
    pairs = []
    for small in _submodules(module, caps):
        if not small.issubset(sub) or (nonzero_only and small.is_zero):
            continue
        s = lemma_pair_witness(small, sub, mcs)
        if s is None:
            return None
        pairs.append((small, s))
    return Witness(WitnessKind.NONE, extra=tuple(pairs))


def is_prime_module(module: Module, caps: Caps = DEFAULT_CAPS) -> bool:
    """
    ann(N) = ann(M) for every nonzero submodule N.
    """

    whole_ann = module_annihilator(module)
    return all(annihilator(sub) == whole_ann for sub in _submodules(module, caps) if not sub.is_zero)


# The annihilator side of S-second:

def annihilator_is_s_prime(sub: Submodule, mcs: MCS) -> bool:
    try:
        return is_s_prime_ideal(sub.module.ring, annihilator(sub), mcs) is not None
    except DisjointnessFailure:
        return False


def uniform_multiple_clause(sub: Submodule, mcs: MCS) -> Optional[int]:
    """
    First s with sN inside s'N for every s'.
    """

    images = {t: scaled(sub, t) for t in mcs}
    return next((s for s in mcs if all(images[s].issubset(images[t]) for t in mcs)), None)


def second_via_annihilator(module: Module, sub: Submodule, mcs: MCS) -> bool:
    """
    ann(N) is an S-prime ideal, and some s has sN inside s'N for all s'.
    """

    return annihilator_is_s_prime(sub, mcs) and uniform_multiple_clause(sub, mcs) is not None


def s_second_verdict(module: Module, sub: Submodule, mcs: MCS) -> bool:
    """
    is_s_second, with a disjointness failure read as 'not S-second'.
    """

    try:
        return is_s_second(module, sub, mcs) is not None
    except DisjointnessFailure:
        return False


def s_prime_verdict(module: Module, sub: Submodule, mcs: MCS) -> bool:
    try:
        return is_s_prime_submodule(module, sub, mcs) is not None
    except DisjointnessFailure:
        return False


def families(subs: Tuple[Submodule, ...], size: int):
    """
    Families of 1..size distinct submodules, in canonical order.
    """

    for k in range(1, size + 1):
        yield from itertools.combinations(subs, k)


def clear_caches() -> None:
    comultiplication_witnesses.cache_clear()

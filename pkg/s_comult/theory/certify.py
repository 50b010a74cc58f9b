"""
Independent re-validation of witnesses and failures

Each function re-evaluates a definition with plain loops over the carrier,
sharing nothing with the search that produced the witness
beyond the ring and module operations themselves.
A witness that fails to re-validate raises InvariantBroken.

The second half of the file answers whole properties from their definitions
(lattices, ideals and fraction modules rebuilt here),
so a reported statement failure can be confirmed without the predicates that found it.
"""

from __future__ import annotations

import dataclasses
import itertools
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from s_comult.algebra.errors import InvariantBroken
from s_comult.algebra.module import Module, Submodule
from s_comult.algebra.ring import MCS, Ring
from s_comult.algebra.struct import Witness, WitnessKind


def _expect(kind: WitnessKind, witness: Witness, name: str) -> int:
    if witness.kind is not kind:
        raise InvariantBroken(name, f"witness kind {witness.kind.value}")
    return witness.s


def _ann(module: Module, members: Iterable[int]) -> Set[int]:
    members = list(members)
    return {r for r in module.ring.elements if all(module.act(r, m) == module.zero for m in members)}


def _kill_set(module: Module, ideal: Iterable[int]) -> Set[int]:
    ideal = list(ideal)
    return {m for m in module.elements if all(module.act(a, m) == module.zero for a in ideal)}


def _times(module: Module, s: int, members: Iterable[int]) -> Set[int]:
    return {module.act(s, m) for m in members}


def certify_s_prime(module: Module, sub: Submodule, mcs: MCS, witness: Witness) -> None:
    """
    Re-checks (P : M) disjoint from S and the S-prime condition for witness.s.
    """

    s = _expect(WitnessKind.SINGLE_S, witness, "S-prime witness")
    ring = module.ring
    p = set(sub.elements)
    colon = {r for r in ring.elements if all(module.act(r, m) in p for m in module.elements)}
    if colon & set(mcs.elements):
        raise InvariantBroken("S-prime witness", "(P:M) meets S")
    for a in ring.elements:
        for m in module.elements:
            if module.act(a, m) in p and ring.mul(s, a) not in colon and module.act(s, m) not in p:
                raise InvariantBroken("S-prime witness", f"a={ring.format(a)} m={module.format(m)}")


def certify_s_second(module: Module, sub: Submodule, mcs: MCS, witness: Witness) -> None:
    """
    Re-checks ann(N) disjoint from S and saN in {0, sN} for witness.s.
    """

    s = _expect(WitnessKind.SINGLE_S, witness, "S-second witness")
    ring = module.ring
    if not sub.elements - {module.zero}:
        raise InvariantBroken("S-second witness", "N is zero")
    if _ann(module, sub.elements) & set(mcs.elements):
        raise InvariantBroken("S-second witness", "ann(N) meets S")
    s_n = _times(module, s, sub.elements)
    for a in ring.elements:
        san = _times(module, ring.mul(s, a), sub.elements)
        if san != {module.zero} and san != s_n:
            raise InvariantBroken("S-second witness", f"a={ring.format(a)}")


def certify_comultiplication(module: Module, mcs: MCS, witnesses: Dict[Submodule, Witness]) -> None:
    """
    Re-checks s (0 :_M I) inside N inside (0 :_M I) for every witnessed N.
    """

    for sub, witness in witnesses.items():
        s = _expect(WitnessKind.S_AND_IDEAL, witness, "S-comultiplication witness")
        if s not in mcs.elements:
            raise InvariantBroken("S-comultiplication witness", "s outside S")
        outer = _kill_set(module, witness.ideal.elements)
        if not sub.elements <= outer or not _times(module, s, outer) <= sub.elements:
            raise InvariantBroken("S-comultiplication witness", sub.format())


def certify_lemma_pair(small: Submodule, big: Submodule, s: int) -> None:
    module = big.module
    if not _times(module, s, big.elements) <= small.elements:
        raise InvariantBroken("sN inside K", f"s={module.ring.format(s)}")


def certify_s_cyclic(module: Module, mcs: MCS, witness: Witness) -> None:
    s = _expect(WitnessKind.S_AND_ELEMENT, witness, "S-cyclic witness")
    span = {module.act(r, witness.element) for r in module.ring.elements}
    if s not in mcs.elements or not _times(module, s, module.elements) <= span:
        raise InvariantBroken("S-cyclic witness", module.format(witness.element))


def certify_s_torsion_free(module: Module, mcs: MCS, witness: Witness) -> None:
    s = _expect(WitnessKind.SINGLE_S, witness, "S-torsion free witness")
    ring = module.ring
    for a in ring.elements:
        for m in module.elements:
            if module.act(a, m) == module.zero and ring.mul(s, a) != ring.zero and module.act(s, m) != module.zero:
                raise InvariantBroken("S-torsion free witness", f"a={ring.format(a)} m={module.format(m)}")


def certify_s_minimal(module: Module, sub: Submodule, mcs: MCS, witness: Witness) -> None:
    """
    Re-checks sK inside L for every (L, s) pair carried by the witness.
    """

    _expect(WitnessKind.NONE, witness, "S-minimal witness")
    for small, s in witness.extra:
        if s not in mcs.elements or not small.elements <= sub.elements:
            raise InvariantBroken("S-minimal witness", small.format())
        certify_lemma_pair(small, sub, s)


def certify_finite(module: Module, sub: Submodule, witness: Witness) -> None:
    """
    Re-checks that the generators carried in witness.extra span N.
    """

    span: FrozenSet[int] = frozenset({module.zero})
    for g in witness.extra:
        grown = set(span)
        frontier = set(span)
        while frontier:
            fresh = {module.add(x, module.act(r, g)) for x in frontier for r in module.ring.elements} - grown
            grown |= fresh
            frontier = fresh
        span = frozenset(grown)
    if span != sub.elements:
        raise InvariantBroken("S-finite witness", sub.format())


def certify_hom_witness(f, kind: str, witness: Optional[Witness]) -> None:
    """
    Re-checks an S-zero, S-monic or S-epic witness of a homomorphism.

    :param f: The homomorphism
    :type f: ModuleHom
    :param kind: One of 'zero', 'monic', 'epic'
    :type kind: str
    :param witness: Witness returned by the search
    :type witness: Optional[Witness]
    """

    if witness is None:
        return
    s = witness.s
    source, target = f.source, f.target
    values = [f(m) for m in source.elements]
    if kind == "zero":
        ok = all(target.act(s, y) == target.zero for y in values)
    elif kind == "monic":
        ok = all(source.act(s, m) == source.zero for m in source.elements if values[m] == target.zero)
    elif kind == "epic":
        ok = _times(target, s, target.elements) <= set(values)
    else:
        raise ValueError(f"unknown hom witness kind {kind}")
    if not ok:
        raise InvariantBroken(f"S-{kind} witness", f.name)


# Properties evaluated from their definitions:

Elements = FrozenSet[int]


@dataclasses.dataclass(frozen=True, slots=True)
class Carrier:
    """
    Carrier - an R-module seen only through its elements and two operations.

    Modules, the ring over itself and the fraction modules built below
    all go through the same evaluators this way.
    """

    ring: Ring
    elements: Tuple[int, ...]
    zero: int
    add: Callable[[int, int], int]
    act: Callable[[int, int], int]  # act(r, m) = rm


def carrier_of(module: Module) -> Carrier:
    return Carrier(module.ring, tuple(module.elements), module.zero, module.add, module.act)


def ring_carrier(ring: Ring) -> Carrier:
    return Carrier(ring, tuple(ring.elements), ring.zero, ring.add, ring.mul)


def span(c: Carrier, gens: Iterable[int]) -> Elements:
    """
    Every finite sum of multiples r g of the generators.
    """

    gens = list(gens)
    grown = {c.zero}
    frontier = {c.zero}
    while frontier:
        fresh = {c.add(x, c.act(r, g)) for x in frontier for g in gens for r in c.ring.elements} - grown
        grown |= fresh
        frontier = fresh
    return frozenset(grown)


def _sum(c: Carrier, left: Iterable[int], right: Iterable[int]) -> Elements:
    right = list(right)
    return frozenset(c.add(a, b) for a in left for b in right)


def _lattice(c: Carrier) -> List[Elements]:
    """
    Cyclic submodules, closed under sums until nothing new appears.
    """

    cyclic = {span(c, [m]) for m in c.elements}
    found = {frozenset({c.zero})} | cyclic
    while True:
        grown = {_sum(c, x, y) for x in found for y in cyclic} - found
        if not grown:
            break
        found |= grown
    return sorted(found, key=lambda n: (len(n), sorted(n)))


def submodule_sets(module: Module) -> List[Elements]:
    return _lattice(carrier_of(module))


def ideal_sets(ring: Ring) -> List[Elements]:
    return _lattice(ring_carrier(ring))


def maximal_ideal_sets(ring: Ring) -> List[Elements]:
    proper = [i for i in ideal_sets(ring) if len(i) < ring.order]
    return [i for i in proper if not any(i < j for j in proper)]


def prime_ideal_sets(ring: Ring) -> List[Elements]:
    return [i for i in ideal_sets(ring) if prime_ideal_holds(ring, i)]


def sum_of(module: Module, subs: Iterable[Iterable[int]]) -> Elements:
    c = carrier_of(module)
    total = frozenset({module.zero})
    for sub in subs:
        total = _sum(c, total, sub)
    return total


def _colon(c: Carrier, ideal: Iterable[int], within: Iterable[int], base: Elements) -> Elements:
    ideal = list(ideal)
    return frozenset(m for m in within if all(c.act(a, m) in base for a in ideal))


def zero_colon_set(module: Module, ideal: Iterable[int]) -> Elements:
    return frozenset(_kill_set(module, ideal))


def annihilator_set(module: Module, members: Iterable[int]) -> Elements:
    return frozenset(_ann(module, members))


def ideal_times(module: Module, ideal: Iterable[int]) -> Elements:
    """
    IM, the span of every am.
    """

    return span(carrier_of(module), {module.act(a, m) for a in ideal for m in module.elements})


def scaled_inside(module: Module, s: int, members: Iterable[int], target: Iterable[int]) -> bool:
    return _times(module, s, members) <= set(target)


def kills(module: Module, r: int) -> bool:
    return all(module.act(r, m) == module.zero for m in module.elements)


def saturation_set(ring: Ring, members: Iterable[int]) -> Elements:
    """
    S* = {x : rx in S for some r}.
    """

    members = set(members)
    return frozenset(x for x in ring.elements if any(ring.mul(r, x) in members for r in ring.elements))


# S-comultiplication:

def _sandwiched(c: Carrier, sub: Elements, mcs: Iterable[int], colons: List[Elements]) -> bool:
    mcs = list(mcs)
    return any(sub <= outer and any(_times(c, s, outer) <= sub for s in mcs) for outer in colons)


def _comultiplication_holds(c: Carrier, mcs: Iterable[int], within: Optional[Iterable[int]] = None,
                            base: Optional[Iterable[int]] = None) -> bool:
    within = frozenset(c.elements) if within is None else frozenset(within)
    base = frozenset({c.zero}) if base is None else frozenset(base)
    colons = [_colon(c, ideal, within, base) for ideal in ideal_sets(c.ring)]
    return all(_sandwiched(c, sub, mcs, colons) for sub in _lattice(c) if base <= sub <= within)


def s_comultiplication_holds(module: Module, mcs: Iterable[int], within: Optional[Iterable[int]] = None,
                             base: Optional[Iterable[int]] = None) -> bool:
    """
    Every submodule N has s in S and an ideal I with s(0 :_M I) in N in (0 :_M I).

    With within = K the question is asked of the module K,
    with base = L of the quotient M/L (submodules containing L,
    colons taken modulo L).

    :param module: Module M
    :type module: Module
    :param mcs: Elements of S
    :type mcs: Iterable[int]
    :param within: Carrier of a submodule to restrict to
    :type within: Optional[Iterable[int]]
    :param base: Submodule to divide out
    :type base: Optional[Iterable[int]]
    :return: Whether the definition holds
    :rtype: bool
    """

    return _comultiplication_holds(carrier_of(module), mcs, within, base)


def comultiplication_holds(module: Module) -> bool:
    return s_comultiplication_holds(module, [module.ring.one])


def submodule_sandwiched(module: Module, sub: Iterable[int], mcs: Iterable[int]) -> bool:
    c = carrier_of(module)
    colons = [_colon(c, ideal, c.elements, frozenset({c.zero})) for ideal in ideal_sets(module.ring)]
    return _sandwiched(c, frozenset(sub), mcs, colons)


def lemma_forms(module: Module, mcs: Iterable[int]) -> Dict[str, bool]:
    """
    The definition, the annihilator form and the pair form of S-comultiplication.
    """

    mcs = list(mcs)
    subs = submodule_sets(module)
    anns = {sub: annihilator_set(module, sub) for sub in subs}
    return {
        "definition": s_comultiplication_holds(module, mcs),
        "annihilator": all(
            any(_times(module, s, zero_colon_set(module, anns[sub])) <= sub for s in mcs) for sub in subs
        ),
        "pairs": all(
            any(_times(module, s, n) <= k for s in mcs)
            for k in subs
            for n in subs
            if anns[k] <= anns[n]
        ),
    }


# Fractions:

@dataclasses.dataclass(frozen=True, slots=True)
class Fractions:
    """
    Fractions - S^-1 M as classes of pairs (m, s),
    with (m, s) ~ (n, t) when u(tm - sn) = 0 for some u in S.
    """

    carrier: Carrier
    classes: Dict[Tuple[int, int], int]  # Class index of every pair (m, s)

    @property
    def order(self) -> int:
        return len(self.carrier.elements)


def fraction_module(module: Module, mcs: Iterable[int]) -> Fractions:
    """
    Builds S^-1 M as an R-module, r (m / s) = rm / s.

    Every s in S acts injectively on S^-1 M, hence bijectively on each finite
    submodule, so its R-submodules are exactly its S^-1 R-submodules.
    """

    ring = module.ring
    mcs = sorted(set(mcs))

    def same(p: Tuple[int, int], q: Tuple[int, int]) -> bool:
        (m, s), (n, t) = p, q
        diff = module.add(module.act(t, m), module.neg(module.act(s, n)))
        return any(module.act(u, diff) == module.zero for u in mcs)

    reps: List[Tuple[int, int]] = []
    classes: Dict[Tuple[int, int], int] = {}
    for pair in itertools.product(module.elements, mcs):
        found = next((i for i, rep in enumerate(reps) if same(pair, rep)), None)
        if found is None:
            found = len(reps)
            reps.append(pair)
        classes[pair] = found

    def add(x: int, y: int) -> int:
        (m, s), (n, t) = reps[x], reps[y]
        return classes[module.add(module.act(t, m), module.act(s, n)), ring.mul(s, t)]

    def act(r: int, x: int) -> int:
        m, s = reps[x]
        return classes[module.act(r, m), s]

    carrier = Carrier(ring, tuple(range(len(reps))), classes[module.zero, ring.one], add, act)
    return Fractions(carrier, classes)


def localized_comultiplication_holds(module: Module, mcs: Iterable[int]) -> bool:
    """
    S^-1 M is comultiplication over S^-1 R.

    Ideals of S^-1 R are the S^-1 I and a / s kills what a kills,
    so every submodule must be (0 : I) for an ideal I of R.
    """

    return _comultiplication_holds(fraction_module(module, mcs).carrier, [module.ring.one])


def localized_colon_holds(module: Module, mcs: Iterable[int], ideal: Iterable[int]) -> bool:
    """
    S^-1 (0 :_M I) equals (0 :_{S^-1 M} S^-1 I).
    """

    mcs = list(mcs)
    fractions = fraction_module(module, mcs)
    c = fractions.carrier
    left = {fractions.classes[m, s] for m in zero_colon_set(module, ideal) for s in mcs}
    return left == _colon(c, ideal, c.elements, frozenset({c.zero}))


def localized_submodules_reached(module: Module, mcs: Iterable[int]) -> bool:
    """
    Every submodule of S^-1 M is S^-1 N for a submodule N of M.
    """

    mcs = list(mcs)
    fractions = fraction_module(module, mcs)
    reached = {frozenset(fractions.classes[n, s] for n in sub for s in mcs) for sub in submodule_sets(module)}
    return all(sub in reached for sub in _lattice(fractions.carrier))


def locally_nonzero(module: Module, maximal: Iterable[int]) -> bool:
    """
    M localized at R - m is nonzero: some m / 1 survives every u outside m.
    """

    maximal = set(maximal)
    outside = [u for u in module.ring.elements if u not in maximal]
    return any(all(module.act(u, m) != module.zero for u in outside) for m in module.elements)


# S-prime and S-second:

def _s_prime_holds(c: Carrier, sub: Elements, mcs: Iterable[int]) -> bool:
    ring = c.ring
    mcs = list(mcs)
    colon = {r for r in ring.elements if all(c.act(r, m) in sub for m in c.elements)}
    if colon & set(mcs):
        return False
    return any(
        all(c.act(a, m) not in sub or ring.mul(s, a) in colon or c.act(s, m) in sub
            for a in ring.elements for m in c.elements)
        for s in mcs
    )


def s_prime_holds(module: Module, sub: Iterable[int], mcs: Iterable[int]) -> bool:
    """
    (P : M) misses S, and some s in S has: am in P gives sa in (P : M) or sm in P.
    """

    return _s_prime_holds(carrier_of(module), frozenset(sub), mcs)


def prime_holds(module: Module, sub: Iterable[int]) -> bool:
    return s_prime_holds(module, sub, [module.ring.one])


def s_prime_ideal_holds(ring: Ring, ideal: Iterable[int], mcs: Iterable[int]) -> bool:
    return _s_prime_holds(ring_carrier(ring), frozenset(ideal), mcs)


def prime_ideal_holds(ring: Ring, ideal: Iterable[int]) -> bool:
    return s_prime_ideal_holds(ring, ideal, [ring.one])


def s_prime_forms(module: Module, sub: Iterable[int], mcs: Iterable[int]) -> Dict[str, bool]:
    """
    The definition of S-prime, the (P :_M s) form and the homothety form on M/P.
    """

    ring = module.ring
    sub, mcs = frozenset(sub), list(mcs)
    colons = {s: frozenset(m for m in module.elements if module.act(s, m) in sub) for s in mcs}
    return {
        "direct": s_prime_holds(module, sub, mcs),
        "quotient_prime": any(
            prime_holds(module, colons[s]) and all(colons[t] <= colons[s] for t in mcs) for s in mcs
        ),
        "homothety": any(
            all(
                all(module.act(ring.mul(s, a), m) in sub for m in module.elements)
                or all(module.act(s, m) in sub for m in module.elements if module.act(a, m) in sub)
                for a in ring.elements
            )
            for s in mcs
        ),
    }


def _second_at(module: Module, sub: Elements, s: int, a: int) -> bool:
    san = _times(module, module.ring.mul(s, a), sub)
    return san == {module.zero} or _times(module, s, sub) <= _times(module, a, sub)


def s_second_holds(module: Module, sub: Iterable[int], mcs: Iterable[int]) -> bool:
    """
    N nonzero, ann(N) misses S, and some s has saN = 0 or saN = sN for every a.
    """

    sub, mcs = frozenset(sub), list(mcs)
    if sub == {module.zero} or annihilator_set(module, sub) & set(mcs):
        return False
    ring = module.ring
    return any(
        all(_times(module, ring.mul(s, a), sub) in ({module.zero}, _times(module, s, sub)) for a in ring.elements)
        for s in mcs
    )


def second_holds(module: Module, sub: Iterable[int]) -> bool:
    return s_second_holds(module, sub, [module.ring.one])


def s_second_forms(module: Module, sub: Iterable[int], mcs: Iterable[int]) -> Dict[str, bool]:
    """
    The definition of S-second, and its homothety and containment forms,
    which both read saN = 0 or sN inside aN.
    """

    sub, mcs = frozenset(sub), list(mcs)
    other = any(all(_second_at(module, sub, s, a) for a in module.ring.elements) for s in mcs)
    return {"direct": s_second_holds(module, sub, mcs), "homothety": other, "containment": other}


def second_annihilator_side(module: Module, sub: Iterable[int], mcs: Iterable[int]) -> bool:
    """
    ann(N) is an S-prime ideal and some s has sN inside s'N for every s'.
    """

    sub, mcs = frozenset(sub), list(mcs)
    images = {s: _times(module, s, sub) for s in mcs}
    return (s_prime_ideal_holds(module.ring, annihilator_set(module, sub), mcs)
            and any(all(images[s] <= images[t] for t in mcs) for s in mcs))


# S-cyclic, torsion, S-minimal:

def s_cyclic_holds(module: Module, mcs: Iterable[int]) -> bool:
    everything = list(module.elements)
    return any(
        _times(module, s, everything) <= {module.act(r, m) for r in module.ring.elements}
        for s in mcs
        for m in everything
    )


def torsion_holds(module: Module) -> bool:
    """
    Every m has a nonzero r with rm = 0.
    """

    ring = module.ring
    return all(any(module.act(r, m) == module.zero for r in ring.elements if r != ring.zero) for m in module.elements)


def s_minimal_holds(module: Module, sub: Iterable[int], mcs: Iterable[int]) -> bool:
    """
    Every nonzero submodule L inside K has s with sK inside L.
    """

    sub, mcs = frozenset(sub), list(mcs)
    return all(
        any(_times(module, s, sub) <= small for s in mcs)
        for small in submodule_sets(module)
        if small <= sub and small != {module.zero}
    )


def family_bound_exists(module: Module, sub: Iterable[int], bound: Iterable[int], size: int) -> bool:
    """
    Some family of at most size submodules with zero intersection
    has the N + M_i meeting exactly in bound.
    """

    c = carrier_of(module)
    sub, bound = frozenset(sub), frozenset(bound)
    subs = submodule_sets(module)
    for k in range(1, size + 1):
        for family in itertools.combinations(subs, k):
            if frozenset.intersection(*family) != {module.zero}:
                continue
            if frozenset.intersection(*(_sum(c, sub, m) for m in family)) == bound:
                return True
    return False


# Homomorphisms:

def hom_claims(f, mcs: Iterable[int]) -> Dict[str, Optional[bool]]:
    """
    Monic and epic against S-monic and S-epic, with the same claim names
    and the same None for a side condition that does not apply.

    :param f: The homomorphism
    :type f: ModuleHom
    :param mcs: Elements of S
    :type mcs: Iterable[int]
    """

    source, target = f.source, f.target
    ring = source.ring
    mcs = list(mcs)
    values = [f(m) for m in source.elements]
    image = set(values)
    injective = len(image) == len(values)
    surjective = image == set(target.elements)
    s_monic = any(
        all(source.act(s, m) == source.zero for m in source.elements if values[m] == target.zero) for s in mcs
    )
    s_epic = any(_times(target, s, target.elements) <= image for s in mcs)
    regular = not any(source.act(s, m) == source.zero for s in mcs for m in source.elements if m != source.zero)
    invertible = all(any(ring.mul(s, r) == ring.one for r in ring.elements) for s in mcs)
    return {
        "monic implies S-monic": (s_monic if injective else None),
        "epic implies S-epic": (s_epic if surjective else None),
        "S-monic implies monic when S avoids z(M)": (injective if regular and s_monic else None),
        "S-epic implies epic when S is in u(R)": (surjective if invertible and s_epic else None),
    }

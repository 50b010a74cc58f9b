"""
S-cyclic, torsion and S-minimal statements
"""

from __future__ import annotations

import functools
from typing import Any, Dict, Iterator, List, Optional, Tuple

from s_comult.algebra.module import (Module, Submodule, annihilator, is_torsion, scaled,
                                     self_of, submodule_intersection, submodule_lattice, submodule_sum, whole,
                                     zero_colon)
from s_comult.algebra.ring import Ideal, enumerate_ideals, ideal_sum, zero_divisors_on
from s_comult.algebra.struct import CACHE_SIZE
from s_comult.theory import certify, predicates
from s_comult.verifier.statements.base import BaseStatement, Case
from s_comult.verifier.statements.comultiplication import s_comultiplication


class _ComultiplicationCases(BaseStatement):

    def cases(self, catalog) -> Iterator[Case]:
        for _, module, mcs in catalog.instances():
            yield {"module": module, "mcs": mcs}

    def hypothesis(self, case: Case) -> bool:
        return s_comultiplication(case["module"], case["mcs"], self.caps)

    def s_cyclic(self, module: Module, mcs) -> bool:
        witness = predicates.is_s_cyclic(module, mcs)
        if witness is not None:
            certify.certify_s_cyclic(module, mcs, witness)
        return witness is not None

    def revalidate(self, case: Case, failure: Dict[str, Any]) -> bool:
        return (failure.get("part") == "not S-cyclic"
                and not certify.s_cyclic_holds(case["module"], case["mcs"].elements))


def minimal_nonzero_ideals(ideals: List[Ideal]) -> List[Ideal]:
    nonzero = [i for i in ideals if not i.is_zero]
    return [i for i in nonzero if not any(j.elements < i.elements for j in nonzero)]


class MinimalIdealCyclic(_ComultiplicationCases):
    """
    An S-comultiplication M with (0 :_M N) = 0 for a minimal ideal N is S-cyclic.

    Minimal is read as minimal among nonzero ideals.
    """

    def cases(self, catalog) -> Iterator[Case]:
        for _, module, mcs in catalog.instances():
            for ideal in minimal_nonzero_ideals(enumerate_ideals(module.ring, self.caps)):
                yield {"module": module, "mcs": mcs, "ideal": ideal}

    def hypothesis(self, case: Case) -> bool:
        return zero_colon(case["module"], case["ideal"]).is_zero and super().hypothesis(case)

    def conclusion(self, case: Case) -> Optional[Dict[str, Any]]:
        if self.s_cyclic(case["module"], case["mcs"]):
            return None
        return {"part": "not S-cyclic"}


@functools.lru_cache(maxsize=CACHE_SIZE)
def family_bounds(module: Module, size: int) -> Tuple[Tuple[Submodule, Submodule], ...]:
    """
    Every distinct (N, X) with X the intersection of N + M_i over a family
    of at most size submodules M_i with zero intersection.
    """

    subs = submodule_lattice(module)
    sums = {(n, m): submodule_sum(n, m) for n in subs for m in subs}
    found = set()
    for family in predicates.families(subs, size):
        meet = family[0]
        for m in family[1:]:
            meet = submodule_intersection(meet, m)
        if not meet.is_zero:
            continue
        for n in subs:
            bound = sums[n, family[0]]
            for m in family[1:]:
                bound = submodule_intersection(bound, sums[n, m])
            found.add((n, bound))
    return tuple(sorted(found, key=lambda p: (len(p[0]), p[0].sorted, len(p[1]), p[1].sorted)))


class FamilyIntersection(_ComultiplicationCases):
    """
    For a family M_i with zero intersection, every N has s with
    s X inside N inside X, where X is the intersection of the N + M_i.
    """

    family_size = 3

    def conclusion(self, case: Case) -> Optional[Dict[str, Any]]:
        module, mcs = case["module"], case["mcs"]
        for sub, bound in family_bounds(module, self.family_size):
            if not sub.issubset(bound):
                return {"submodule": sub, "bound": bound, "part": "N inside X"}
            if not any(scaled(bound, s).issubset(sub) for s in mcs):
                return {"submodule": sub, "bound": bound, "part": "sX inside N"}
        return None

    def revalidate(self, case: Case, failure: Dict[str, Any]) -> bool:
        module, mcs = case["module"], case["mcs"].elements
        sub, bound, part = failure.get("submodule"), failure.get("bound"), failure.get("part")
        if sub is None or bound is None:
            return False
        if not certify.family_bound_exists(module, sub.elements, bound.elements, self.family_size):
            return False
        if part == "N inside X":
            return not sub.elements <= bound.elements
        if part == "sX inside N":
            return not any(certify.scaled_inside(module, s, bound.elements, sub.elements) for s in mcs)
        return False

    def check(self, catalog):
        self.family_size = catalog.params.family_size
        return super().check(catalog)


class IdealExtension(_ComultiplicationCases):
    """
    N inside s(0 :_M I) gives an ideal J containing I with s(0 :_M J) inside N.

    J = I + ann(N) is tried first; how often it serves is tallied.
    """

    def cases(self, catalog) -> Iterator[Case]:
        for _, module, mcs in catalog.instances():
            for sub in submodule_lattice(module):
                for ideal in enumerate_ideals(module.ring, self.caps):
                    yield {"module": module, "mcs": mcs, "submodule": sub, "ideal": ideal}

    def hypothesis(self, case: Case) -> bool:
        module, mcs, sub, ideal = case["module"], case["mcs"], case["submodule"], case["ideal"]
        outer = zero_colon(module, ideal)
        return any(sub.issubset(scaled(outer, s)) for s in mcs) and super().hypothesis(case)

    def conclusion(self, case: Case) -> Optional[Dict[str, Any]]:
        module, mcs, sub, ideal = case["module"], case["mcs"], case["submodule"], case["ideal"]
        ideals = enumerate_ideals(module.ring, self.caps)
        for s in mcs:
            if not sub.issubset(scaled(zero_colon(module, ideal), s)):
                continue
            extended = ideal_sum(ideal, annihilator(sub))
            if scaled(zero_colon(module, extended), s).issubset(sub):
                self.tally("sum_with_annihilator")
                continue
            if not any(ideal.issubset(j) and scaled(zero_colon(module, j), s).issubset(sub) for j in ideals):
                return {"s": module.ring.format(s), "part": "no J"}
        return None

    def revalidate(self, case: Case, failure: Dict[str, Any]) -> bool:
        module, mcs, sub, ideal = case["module"], case["mcs"], case["submodule"], case["ideal"]
        s = next((s for s in mcs if module.ring.format(s) == failure.get("s")), None)
        if s is None or failure.get("part") != "no J":
            return False
        return not any(
            ideal.elements <= j and certify.scaled_inside(module, s, certify.zero_colon_set(module, j), sub.elements)
            for j in certify.ideal_sets(module.ring)
        )


class TorsionOrCyclic(_ComultiplicationCases):
    """
    An S-comultiplication module is S-cyclic or torsion.
    """

    def conclusion(self, case: Case) -> Optional[Dict[str, Any]]:
        module, mcs = case["module"], case["mcs"]
        if self.s_cyclic(module, mcs) or is_torsion(module):
            return None
        return {"part": "neither S-cyclic nor torsion"}

    def revalidate(self, case: Case, failure: Dict[str, Any]) -> bool:
        module = case["module"]
        return (failure.get("part") == "neither S-cyclic nor torsion"
                and not certify.s_cyclic_holds(module, case["mcs"].elements)
                and not certify.torsion_holds(module))


def is_domain(module: Module) -> bool:
    ring = module.ring
    return zero_divisors_on(ring, self_of(ring)) == frozenset({ring.zero})


class FaithfulMultiplesCyclic(_ComultiplicationCases):
    """
    Over a domain, an S-finite S-comultiplication M with every sM faithful is S-cyclic.
    """

    def hypothesis(self, case: Case) -> bool:
        module, mcs = case["module"], case["mcs"]
        if not is_domain(module):
            return False
        everything = whole(module)
        certify.certify_finite(module, everything, predicates.is_s_finite(module, everything, mcs))
        if not all(annihilator(scaled(everything, s)).is_zero for s in mcs):
            return False
        return super().hypothesis(case)

    def conclusion(self, case: Case) -> Optional[Dict[str, Any]]:
        module, mcs = case["module"], case["mcs"]
        if not any(set(module.act_table[:, m].tolist()) == set(module.elements) for m in module.elements):
            self.tally("not_cyclic")
        if self.s_cyclic(module, mcs):
            return None
        return {"part": "not S-cyclic"}


class TorsionFreeCyclic(_ComultiplicationCases):
    """
    An S-comultiplication S-torsion free module is S-cyclic.
    """

    def hypothesis(self, case: Case) -> bool:
        module, mcs = case["module"], case["mcs"]
        witness = predicates.is_s_torsion_free(module, mcs)
        if witness is None:
            return False
        certify.certify_s_torsion_free(module, mcs, witness)
        return super().hypothesis(case)

    def conclusion(self, case: Case) -> Optional[Dict[str, Any]]:
        if self.s_cyclic(case["module"], case["mcs"]):
            return None
        return {"part": "not S-cyclic"}


class PrimeMinimal(_ComultiplicationCases):
    """
    An S-comultiplication prime module is S-minimal.

    Checked over nonzero submodules L; the reading that also takes L = 0 is tallied.
    """

    def hypothesis(self, case: Case) -> bool:
        return predicates.is_prime_module(case["module"], self.caps) and super().hypothesis(case)

    def conclusion(self, case: Case) -> Optional[Dict[str, Any]]:
        module, mcs = case["module"], case["mcs"]
        everything = whole(module)

        strict = predicates.is_s_minimal(module, everything, mcs, nonzero_only=False, caps=self.caps)
        self.tally("with_zero_holds" if strict is not None else "with_zero_fails")

        witness = predicates.is_s_minimal(module, everything, mcs, nonzero_only=True, caps=self.caps)
        if witness is None:
            return {"part": "not S-minimal"}
        certify.certify_s_minimal(module, everything, mcs, witness)
        return None

    def revalidate(self, case: Case, failure: Dict[str, Any]) -> bool:
        module = case["module"]
        return (failure.get("part") == "not S-minimal"
                and not certify.s_minimal_holds(module, module.elements, case["mcs"].elements))


"""
S-monic and S-epic maps, S-prime and S-second submodules
"""

from __future__ import annotations

import functools
from typing import Any, Dict, Iterator, Optional, Tuple

from s_comult.algebra import morphism
from s_comult.algebra.module import Module, Submodule, annihilator, submodule_lattice, submodule_sum
from s_comult.algebra.ring import is_prime_ideal
from s_comult.algebra.struct import CACHE_SIZE
from s_comult.theory import certify, predicates
from s_comult.verifier.statements.base import BaseStatement, Case, confirms_disagreement
from s_comult.verifier.statements.comultiplication import s_comultiplication


class MonicEpicBridge(BaseStatement):
    """
    Monic maps are S-monic and epic maps S-epic;
    the converses hold for S avoiding z(M) and for S inside u(R).
    """

    def cases(self, catalog) -> Iterator[Case]:
        for entry in catalog.entries:
            for f in entry.homs:
                for mcs in entry.mcs:
                    yield {"hom": f, "mcs": mcs}

    def conclusion(self, case: Case) -> Optional[Dict[str, Any]]:
        f, mcs = case["hom"], case["mcs"]
        certify.certify_hom_witness(f, "zero", morphism.is_s_zero(f, mcs))
        certify.certify_hom_witness(f, "monic", morphism.is_s_monic(f, mcs))
        certify.certify_hom_witness(f, "epic", morphism.is_s_epic(f, mcs))
        claims = morphism.monic_epic_bridge(f, mcs)
        broken = [claim for claim, verdict in claims.items() if verdict is False]
        return {"broken": broken} if broken else None

    def revalidate(self, case: Case, failure: Dict[str, Any]) -> bool:
        broken = failure.get("broken")
        claims = certify.hom_claims(case["hom"], case["mcs"].elements)
        return bool(broken) and all(claims.get(claim) is False for claim in broken)


class _SubmoduleCases(BaseStatement):

    def cases(self, catalog) -> Iterator[Case]:
        for _, module, mcs in catalog.instances():
            for sub in submodule_lattice(module):
                yield {"module": module, "mcs": mcs, "submodule": sub}


class PrimeHomothety(_SubmoduleCases):
    """
    With (P : M) disjoint from S, the definition of S-prime,
    the (P :_M s) form, and the homothety form agree.
    """

    def hypothesis(self, case: Case) -> bool:
        return not (predicates.residual(case["submodule"]).elements & case["mcs"].elements)

    def conclusion(self, case: Case) -> Optional[Dict[str, Any]]:
        module, mcs, sub = case["module"], case["mcs"], case["submodule"]
        verdicts = predicates.s_prime_characterizations(module, sub, mcs)
        if not verdicts.agree:
            return {"verdicts": verdicts.as_dict()}
        witness = predicates.is_s_prime_submodule(module, sub, mcs)
        if witness is not None:
            certify.certify_s_prime(module, sub, mcs, witness)
        return None

    def revalidate(self, case: Case, failure: Dict[str, Any]) -> bool:
        module, mcs, sub = case["module"], case["mcs"], case["submodule"]
        return confirms_disagreement(failure.get("verdicts"), certify.s_prime_forms(module, sub.elements, mcs.elements))


class SecondCharacterizations(_SubmoduleCases):
    """
    With ann(N) disjoint from S, the definition of S-second,
    the homothety form and the containment form agree.
    """

    def hypothesis(self, case: Case) -> bool:
        sub = case["submodule"]
        return not sub.is_zero and not (annihilator(sub).elements & case["mcs"].elements)

    def conclusion(self, case: Case) -> Optional[Dict[str, Any]]:
        module, mcs, sub = case["module"], case["mcs"], case["submodule"]
        verdicts = predicates.s_second_characterizations(module, sub, mcs)
        if not verdicts.agree:
            return {"verdicts": verdicts.as_dict()}
        witness = predicates.is_s_second(module, sub, mcs)
        if witness is not None:
            certify.certify_s_second(module, sub, mcs, witness)
        return None

    def revalidate(self, case: Case, failure: Dict[str, Any]) -> bool:
        module, mcs, sub = case["module"], case["mcs"], case["submodule"]
        return confirms_disagreement(failure.get("verdicts"), certify.s_second_forms(module, sub.elements, mcs.elements))


class SecondViaAnnihilator(_SubmoduleCases):
    """
    In an S-comultiplication module, N is S-second exactly when ann(N) is
    an S-prime ideal and some s has sN inside s'N for every s' in S.
    """

    def hypothesis(self, case: Case) -> bool:
        return not case["submodule"].is_zero and s_comultiplication(case["module"], case["mcs"], self.caps)

    def conclusion(self, case: Case) -> Optional[Dict[str, Any]]:
        module, mcs, sub = case["module"], case["mcs"], case["submodule"]
        second = predicates.s_second_verdict(module, sub, mcs)
        via = predicates.second_via_annihilator(module, sub, mcs)
        if second != via:
            return {"s_second": second, "annihilator_side": via}
        return None

    def revalidate(self, case: Case, failure: Dict[str, Any]) -> bool:
        module, mcs, sub = case["module"], case["mcs"].elements, case["submodule"].elements
        return confirms_disagreement(failure, {
            "s_second": certify.s_second_holds(module, sub, mcs),
            "annihilator_side": certify.second_annihilator_side(module, sub, mcs),
        })


class SecondPrimeAnnihilator(BaseStatement):
    """
    In a comultiplication module, N is second exactly when ann(N) is prime.
    """

    def cases(self, catalog) -> Iterator[Case]:
        for entry in catalog.entries:
            for module in entry.modules:
                for sub in submodule_lattice(module):
                    yield {"module": module, "submodule": sub}

    def hypothesis(self, case: Case) -> bool:
        return not case["submodule"].is_zero and predicates.is_comultiplication(case["module"], self.caps)

    def conclusion(self, case: Case) -> Optional[Dict[str, Any]]:
        module, sub = case["module"], case["submodule"]
        second = predicates.is_second_submodule(module, sub)
        prime = is_prime_ideal(module.ring, annihilator(sub))
        if second != prime:
            return {"second": second, "prime_annihilator": prime}
        return None

    def revalidate(self, case: Case, failure: Dict[str, Any]) -> bool:
        module, sub = case["module"], case["submodule"].elements
        return confirms_disagreement(failure, {
            "second": certify.second_holds(module, sub),
            "prime_annihilator": certify.prime_ideal_holds(module.ring, certify.annihilator_set(module, sub)),
        })


@functools.lru_cache(maxsize=CACHE_SIZE)
def sum_families(module: Module, size: int) -> Tuple[Tuple[Tuple[Submodule, ...], Submodule], ...]:
    """
    Families of at most size distinct submodules, each with its sum.
    """

    out = []
    for family in predicates.families(submodule_lattice(module), size):
        total = family[0]
        for n in family[1:]:
            total = submodule_sum(total, n)
        out.append((family, total))
    return tuple(out)


class SecondInsideSum(_SubmoduleCases):
    """
    An S-second N of an S-comultiplication module inside N_1 + ... + N_m
    has sN inside some N_i.
    """

    sum_size = 3

    def check(self, catalog):
        self.sum_size = catalog.params.sum_size
        return super().check(catalog)

    def hypothesis(self, case: Case) -> bool:
        module, mcs, sub = case["module"], case["mcs"], case["submodule"]
        if sub.is_zero or not s_comultiplication(module, mcs, self.caps):
            return False
        return predicates.s_second_verdict(module, sub, mcs)

    def conclusion(self, case: Case) -> Optional[Dict[str, Any]]:
        module, mcs, sub = case["module"], case["mcs"], case["submodule"]
        scaled_images = {s: module.image_under(s, sub.elements) for s in mcs}
        for family, total in sum_families(module, self.sum_size):
            if not sub.issubset(total):
                continue
            if not any(scaled_images[s] <= n.elements for s in mcs for n in family):
                return {"family": list(family)}
        return None

    def revalidate(self, case: Case, failure: Dict[str, Any]) -> bool:
        module, mcs, sub = case["module"], case["mcs"].elements, case["submodule"].elements
        family = failure.get("family")
        if not family:
            return False
        total = certify.sum_of(module, [n.elements for n in family])
        return sub <= total and not any(
            certify.scaled_inside(module, s, sub, n.elements) for s in mcs for n in family)

"""
Statements that pass through localization:
S^-1 M of an S-comultiplication module, the maximal multiple criterion,
and the local characterization of comultiplication modules.
"""

from __future__ import annotations

from typing import Any, Dict, Iterator, Optional

from s_comult.algebra import localization
from s_comult.algebra import ring as ring_core
from s_comult.algebra.module import submodule_lattice
from s_comult.algebra.ring import complement_mcs, enumerate_ideals
from s_comult.theory import certify, predicates
from s_comult.verifier.statements.base import BaseStatement, Case, confirms_disagreement
from s_comult.verifier.statements.comultiplication import s_comultiplication


class LocalizationComultiplication(BaseStatement):
    """
    S^-1 M is a comultiplication module whenever M is S-comultiplication.

    Along the way the canonical kernel and the localized colon identity
    S^-1 (0 :_M I) = (0 :_{S^-1 M} S^-1 I) are checked for every ideal I.
    """

    def cases(self, catalog) -> Iterator[Case]:
        for _, module, mcs in catalog.instances():
            yield {"module": module, "mcs": mcs}

    def hypothesis(self, case: Case) -> bool:
        module, mcs = case["module"], case["mcs"]
        return ring_core.is_s_noetherian(module.ring, mcs)[0] and s_comultiplication(module, mcs, self.caps)

    def conclusion(self, case: Case) -> Optional[Dict[str, Any]]:
        module, mcs = case["module"], case["mcs"]
        localized = localization.localize_module(module, mcs, self.caps)
        localized.canonical_kernel()
        for ideal in enumerate_ideals(module.ring, self.caps):
            if not localization.localized_colon_identity_check(module, mcs, ideal, self.caps):
                return {"ideal": ideal, "part": "colon identity"}
        if not predicates.is_comultiplication(localized.as_module, self.caps):
            return {"localized_order": localized.order}
        return None

    def revalidate(self, case: Case, failure: Dict[str, Any]) -> bool:
        module, mcs = case["module"], case["mcs"].elements
        if failure.get("part") == "colon identity":
            return not certify.localized_colon_holds(module, mcs, failure["ideal"].elements)
        if "localized_order" in failure:
            fractions = certify.fraction_module(module, mcs)
            return (failure["localized_order"] == fractions.order
                    and not certify.localized_comultiplication_holds(module, mcs))
        return False


class MaximalMultiple(BaseStatement):
    """
    Under the maximal multiple condition, M is S-comultiplication
    exactly when S^-1 M is comultiplication.

    Every submodule of S^-1 M is also checked to be some S^-1 N.
    """

    def cases(self, catalog) -> Iterator[Case]:
        for _, module, mcs in catalog.instances():
            yield {"module": module, "mcs": mcs}

    def hypothesis(self, case: Case) -> bool:
        if ring_core.has_maximal_multiple(case["mcs"]) is None:
            self.tally("without_maximal_multiple")
            return False
        return True

    def conclusion(self, case: Case) -> Optional[Dict[str, Any]]:
        module, mcs = case["module"], case["mcs"]
        localized = localization.localize_module(module, mcs, self.caps)

        reached = {localized.localize_submodule(sub).elements for sub in submodule_lattice(module)}
        missing = [w for w in submodule_lattice(localized.as_module) if w.elements not in reached]
        if missing:
            return {"unreached_submodule": missing[0]}

        left = s_comultiplication(module, mcs, self.caps)
        right = predicates.is_comultiplication(localized.as_module, self.caps)
        if left != right:
            return {"s_comultiplication": left, "localized_comultiplication": right}
        return None

    def revalidate(self, case: Case, failure: Dict[str, Any]) -> bool:
        module, mcs = case["module"], case["mcs"].elements
        if "unreached_submodule" in failure:
            return not certify.localized_submodules_reached(module, mcs)
        return confirms_disagreement(failure, {
            "s_comultiplication": certify.s_comultiplication_holds(module, mcs),
            "localized_comultiplication": certify.localized_comultiplication_holds(module, mcs),
        })


class LocalCharacterization(BaseStatement):
    """
    Comultiplication, P-comultiplication for every prime P,
    m-comultiplication for every maximal m, and the same for the
    maximal m with M_m nonzero, all agree.

    Prime and maximal ideals coincide in a finite ring; that is checked per ring too.
    """

    def cases(self, catalog) -> Iterator[Case]:
        for entry in catalog.entries:
            for module in entry.modules:
                yield {"module": module}

    def conclusion(self, case: Case) -> Optional[Dict[str, Any]]:
        module = case["module"]
        ring = module.ring
        primes = ring_core.prime_ideals(ring, self.caps)
        maximals = ring_core.maximal_ideals(ring, self.caps)
        if set(primes) != set(maximals):
            return {"primes": primes, "maximals": maximals}

        def local(ideal) -> bool:
            return s_comultiplication(module, complement_mcs(ring, ideal), self.caps)

        supported = [m for m in maximals if localization.mm_locally_nonzero(module, m, self.caps)]
        verdicts = {
            "comultiplication": predicates.is_comultiplication(module, self.caps),
            "every_prime": all(local(p) for p in primes),
            "every_maximal": all(local(m) for m in maximals),
            "every_supported_maximal": all(local(m) for m in supported),
        }
        if len(set(verdicts.values())) > 1:
            return {"verdicts": verdicts}
        return None

    def revalidate(self, case: Case, failure: Dict[str, Any]) -> bool:
        module = case["module"]
        ring = module.ring
        primes = certify.prime_ideal_sets(ring)
        maximals = certify.maximal_ideal_sets(ring)
        if "primes" in failure:
            return ({p.elements for p in failure["primes"]} == set(primes)
                    and {m.elements for m in failure["maximals"]} == set(maximals)
                    and set(primes) != set(maximals))

        def local(ideal) -> bool:
            return certify.s_comultiplication_holds(module, set(ring.elements) - ideal)

        supported = [m for m in maximals if certify.locally_nonzero(module, m)]
        return confirms_disagreement(failure.get("verdicts"), {
            "comultiplication": certify.comultiplication_holds(module),
            "every_prime": all(local(p) for p in primes),
            "every_maximal": all(local(m) for m in maximals),
            "every_supported_maximal": all(local(m) for m in supported),
        })

"""
Ideals with (0 :_M I) = 0, and the dual Nakayama statements built on them
"""

from __future__ import annotations

from typing import Any, Dict, Iterator, Optional

from s_comult.algebra import ring as ring_core
from s_comult.algebra.module import ideal_times, scaled, whole, zero_colon
from s_comult.algebra.ring import enumerate_ideals, scaled_ideal
from s_comult.theory import certify, predicates
from s_comult.verifier.statements.base import BaseStatement, Case
from s_comult.verifier.statements.comultiplication import s_comultiplication


class _IdealCases(BaseStatement):

    with_zero = False

    def cases(self, catalog) -> Iterator[Case]:
        for _, module, mcs in catalog.instances(with_zero=self.with_zero):
            for ideal in enumerate_ideals(module.ring, self.caps):
                yield {"module": module, "mcs": mcs, "ideal": ideal}


class FaithfulIdeal(_IdealCases):
    """
    For an S-comultiplication M and I with (0 :_M I) = 0:
    some s has sM inside IM; every m has s and a in I with sm = am;
    and some s and a in I give (s + a)M = 0.
    """

    def hypothesis(self, case: Case) -> bool:
        module, mcs, ideal = case["module"], case["mcs"], case["ideal"]
        return zero_colon(module, ideal).is_zero and s_comultiplication(module, mcs, self.caps)

    def conclusion(self, case: Case) -> Optional[Dict[str, Any]]:
        module, mcs, ideal = case["module"], case["mcs"], case["ideal"]
        ring = module.ring
        everything = whole(module)

        im = ideal_times(ideal, everything)
        if not any(scaled(everything, s).issubset(im) for s in mcs):
            return {"part": "sM inside IM"}

        for m in module.elements:
            if not any(module.act(s, m) == module.act(a, m) for s in mcs for a in ideal):
                return {"part": "sm = am", "element": module.format(m)}

        if not any(scaled(everything, ring.add(s, a)).is_zero for s in mcs for a in ideal):
            return {"part": "(s + a)M = 0"}
        return None

    def revalidate(self, case: Case, failure: Dict[str, Any]) -> bool:
        module, mcs, ideal = case["module"], case["mcs"].elements, case["ideal"].elements
        ring = module.ring
        part = failure.get("part")
        if part == "sM inside IM":
            im = certify.ideal_times(module, ideal)
            return not any(certify.scaled_inside(module, s, module.elements, im) for s in mcs)
        if part == "sm = am":
            m = next((m for m in module.elements if module.format(m) == failure.get("element")), None)
            return m is not None and not any(module.act(s, m) == module.act(a, m) for s in mcs for a in ideal)
        if part == "(s + a)M = 0":
            return not any(certify.kills(module, ring.add(s, a)) for s in mcs for a in ideal)
        return False


class DualNakayama(_IdealCases):
    """
    S-comultiplication M, S with a maximal multiple, tI inside Jac(R)
    and (0 :_M tI) = 0 give sM = 0 for some s in S.
    """

    with_zero = True

    def hypothesis(self, case: Case) -> bool:
        module, mcs, ideal = case["module"], case["mcs"], case["ideal"]
        if ring_core.has_maximal_multiple(mcs) is None:
            return False
        jac = ring_core.jacobson_radical(module.ring, self.caps)
        t = next(
            (t for t in mcs
             if scaled_ideal(ideal, t).elements <= jac.elements and zero_colon(module, scaled_ideal(ideal, t)).is_zero),
            None,
        )
        if t is None:
            return False
        if not s_comultiplication(module, mcs, self.caps):
            return False
        if module.degenerate:
            self.tally("zero_module")
        return True

    def conclusion(self, case: Case) -> Optional[Dict[str, Any]]:
        everything = whole(case["module"])
        if any(scaled(everything, s).is_zero for s in case["mcs"]):
            return None
        return {"part": "no s in S kills M"}

    def revalidate(self, case: Case, failure: Dict[str, Any]) -> bool:
        module = case["module"]
        return (failure.get("part") == "no s in S kills M"
                and not any(certify.kills(module, s) for s in case["mcs"].elements))


class ClassicalDualNakayama(BaseStatement):
    """
    A comultiplication M with (0 :_M I) = 0 for some I inside Jac(R) is zero.
    """

    def cases(self, catalog) -> Iterator[Case]:
        for entry in catalog.entries:
            for module in entry.modules + [entry.zero]:
                for ideal in enumerate_ideals(entry.ring, self.caps):
                    yield {"module": module, "ideal": ideal}

    def hypothesis(self, case: Case) -> bool:
        module, ideal = case["module"], case["ideal"]
        jac = ring_core.jacobson_radical(module.ring, self.caps)
        return (
            ideal.elements <= jac.elements
            and zero_colon(module, ideal).is_zero
            and predicates.is_comultiplication(module, self.caps)
        )

    def conclusion(self, case: Case) -> Optional[Dict[str, Any]]:
        if case["module"].degenerate:
            return None
        return {"order": case["module"].order}

    def revalidate(self, case: Case, failure: Dict[str, Any]) -> bool:
        module = case["module"]
        return failure.get("order") == len(module.elements) and any(m != module.zero for m in module.elements)

"""
Statements about S-comultiplication modules as such:
the lemma equivalences, monotonicity and saturation in S,
products, submodules and quotients, and transfer along homomorphisms.
"""

from __future__ import annotations

import itertools
import math
from typing import Any, Dict, Iterator, Optional

from s_comult.algebra import morphism
from s_comult.algebra.module import quotient_of, restriction_of, scaled, submodule_lattice, whole
from s_comult.algebra.ring import saturation
from s_comult.theory import certify, predicates
from s_comult.verifier.statements.base import BaseStatement, Case, confirms_disagreement


def s_comultiplication(module, mcs, caps) -> bool:
    return predicates.comultiplication_failure(module, mcs, caps)[0]


class LemmaEquivalence(BaseStatement):
    """
    The definition, the annihilator form and the pair form agree.
    """

    def cases(self, catalog) -> Iterator[Case]:
        for _, module, mcs in catalog.instances():
            yield {"module": module, "mcs": mcs}

    def conclusion(self, case: Case) -> Optional[Dict[str, Any]]:
        module, mcs = case["module"], case["mcs"]
        bundle = predicates.lemma_equivalence_bundle(module, mcs, self.caps)
        if not bundle.agree:
            return {"verdicts": bundle.as_dict()}
        witnesses = predicates.is_s_comultiplication(module, mcs, self.caps)
        if witnesses is not None:
            certify.certify_comultiplication(module, mcs, witnesses)
        return None

    def revalidate(self, case: Case, failure: Dict[str, Any]) -> bool:
        return confirms_disagreement(failure.get("verdicts"), certify.lemma_forms(case["module"], case["mcs"].elements))


class Monotonicity(BaseStatement):
    """
    S1 inside S2 and M S1-comultiplication give M S2-comultiplication.
    """

    def cases(self, catalog) -> Iterator[Case]:
        for entry in catalog.entries:
            pairs = [(a, b) for a, b in itertools.permutations(entry.mcs, 2) if a.elements < b.elements]
            for module in entry.modules:
                for smaller, larger in pairs:
                    yield {"module": module, "mcs": smaller, "larger": larger}

    def hypothesis(self, case: Case) -> bool:
        return s_comultiplication(case["module"], case["mcs"], self.caps)

    def conclusion(self, case: Case) -> Optional[Dict[str, Any]]:
        ok, failing = predicates.comultiplication_failure(case["module"], case["larger"], self.caps)
        return None if ok else {"failing_submodule": failing}

    def revalidate(self, case: Case, failure: Dict[str, Any]) -> bool:
        failing = failure.get("failing_submodule")
        return failing is not None and not certify.submodule_sandwiched(
            case["module"], failing.elements, case["larger"].elements)


class Saturation(BaseStatement):
    """
    M is S-comultiplication exactly when it is S*-comultiplication.
    """

    def cases(self, catalog) -> Iterator[Case]:
        for _, module, mcs in catalog.instances():
            yield {"module": module, "mcs": mcs}

    def conclusion(self, case: Case) -> Optional[Dict[str, Any]]:
        module, mcs = case["module"], case["mcs"]
        saturated = saturation(mcs)
        plain = s_comultiplication(module, mcs, self.caps)
        star = s_comultiplication(module, saturated, self.caps)
        if plain != star:
            return {"saturation": saturated, "with_S": plain, "with_saturation": star}
        return None

    def revalidate(self, case: Case, failure: Dict[str, Any]) -> bool:
        module, mcs = case["module"], case["mcs"]
        star = certify.saturation_set(module.ring, mcs.elements)
        reported = failure.get("saturation")
        verdicts = {key: failure.get(key) for key in ("with_S", "with_saturation")}
        return reported is not None and reported.elements == star and confirms_disagreement(verdicts, {
            "with_S": certify.s_comultiplication_holds(module, mcs.elements),
            "with_saturation": certify.s_comultiplication_holds(module, star),
        })


class _Products(BaseStatement):

    attribute = "products"

    def cases(self, catalog) -> Iterator[Case]:
        for product in getattr(catalog, self.attribute):
            yield {"module": product.module, "mcs": product.mcs, "factors": list(product.factors)}

    def conclusion(self, case: Case) -> Optional[Dict[str, Any]]:
        module, mcs, factors = case["module"], case["mcs"], case["factors"]

        expected = 1
        for factor, _ in factors:
            expected *= len(submodule_lattice(factor))
        if len(submodule_lattice(module)) != expected:
            return {"submodules": len(submodule_lattice(module)), "expected": expected}

        product = s_comultiplication(module, mcs, self.caps)
        parts = [s_comultiplication(factor, factor_mcs, self.caps) for factor, factor_mcs in factors]
        if product != all(parts):
            return {"product": product, "factors_verdicts": parts}
        return None

    def revalidate(self, case: Case, failure: Dict[str, Any]) -> bool:
        module, mcs, factors = case["module"], case["mcs"], case["factors"]
        if "submodules" in failure:
            return confirms_disagreement(failure, {
                "submodules": len(certify.submodule_sets(module)),
                "expected": math.prod(len(certify.submodule_sets(factor)) for factor, _ in factors),
            })
        product = certify.s_comultiplication_holds(module, mcs.elements)
        parts = [certify.s_comultiplication_holds(factor, factor_mcs.elements) for factor, factor_mcs in factors]
        return (failure.get("product") == product and failure.get("factors_verdicts") == parts
                and product != all(parts))


class ProductPair(_Products):
    """
    M1 x M2 is S1 x S2-comultiplication exactly when both factors are.
    """


class ProductTriple(_Products):
    """
    The same for three factors, built as nested products.
    """

    attribute = "triples"


class SubmoduleQuotient(BaseStatement):
    """
    Submodules of an S-comultiplication module are S-comultiplication,
    and so is M/N when tM lies in N for some t in S.
    """

    def cases(self, catalog) -> Iterator[Case]:
        for _, module, mcs in catalog.instances():
            yield {"module": module, "mcs": mcs}

    def hypothesis(self, case: Case) -> bool:
        return s_comultiplication(case["module"], case["mcs"], self.caps)

    def conclusion(self, case: Case) -> Optional[Dict[str, Any]]:
        module, mcs = case["module"], case["mcs"]
        everything = whole(module)
        for sub in submodule_lattice(module):
            if not sub.is_zero and not s_comultiplication(restriction_of(sub), mcs, self.caps):
                return {"submodule": sub, "part": "submodule"}
            if any(scaled(everything, t).issubset(sub) for t in mcs):
                if not s_comultiplication(quotient_of(module, sub), mcs, self.caps):
                    return {"submodule": sub, "part": "quotient"}
        return None

    def revalidate(self, case: Case, failure: Dict[str, Any]) -> bool:
        module, mcs, sub = case["module"], case["mcs"].elements, failure.get("submodule")
        if sub is None:
            return False
        if failure.get("part") == "submodule":
            return not certify.s_comultiplication_holds(module, mcs, within=sub.elements)
        if failure.get("part") == "quotient":
            return (any(certify.scaled_inside(module, t, module.elements, sub.elements) for t in mcs)
                    and not certify.s_comultiplication_holds(module, mcs, base=sub.elements))
        return False


class HomTransfer(BaseStatement):
    """
    With t Ker(f) = 0: a S-comultiplication target gives an S-comultiplication source,
    and an onto f carries S-comultiplication from source to target.
    """

    def cases(self, catalog) -> Iterator[Case]:
        for entry in catalog.entries:
            for f in entry.homs:
                for mcs in entry.mcs:
                    yield {"hom": f, "mcs": mcs}

    def hypothesis(self, case: Case) -> bool:
        ker = morphism.kernel(case["hom"])
        return any(scaled(ker, t).is_zero for t in case["mcs"])

    def conclusion(self, case: Case) -> Optional[Dict[str, Any]]:
        report = morphism.transfer_theorem_check(case["hom"], case["mcs"], self.caps)
        if report.pullback_holds and report.pushforward_holds is not False:
            return None
        return {"t": report.t, "pullback": report.pullback_holds, "pushforward": report.pushforward_holds,
                "failing_submodule": report.counterexample}

    def revalidate(self, case: Case, failure: Dict[str, Any]) -> bool:
        f, mcs = case["hom"], case["mcs"].elements
        source = certify.s_comultiplication_holds(f.source, mcs)
        target = certify.s_comultiplication_holds(f.target, mcs)
        onto = {f(m) for m in f.source.elements} == set(f.target.elements)
        if failure.get("pullback") is False:
            return target and not source
        if failure.get("pushforward") is False:
            return onto and source and not target
        return False

"""
Base statement class

A statement walks the catalog, keeps the cases that meet its hypotheses,
and checks its conclusion on each of them.
The first case whose conclusion fails becomes the counterexample,
once the failure re-validates from the definitions.
"""

from __future__ import annotations

import logging
from typing import Any, Dict, Iterator, Optional

from s_comult.algebra.errors import InvariantBroken, PreconditionUnmet, SizeCap
from s_comult.algebra.module import Module, Submodule
from s_comult.algebra.morphism import ModuleHom
from s_comult.algebra.ring import MCS, Ideal, Ring
from s_comult.algebra.struct import DEFAULT_CAPS, Caps, Stopwatch, Witness
from s_comult.verifier.report import FAIL, PASS, VACUOUS, StatementReport

logger = logging.getLogger(__name__)

Case = Dict[str, Any]


def serialize(value: Any) -> Any:
    """
    Printable form of a case value, as it appears in reports.
    """

    if isinstance(value, (Ring, Module)):
        return value.name if isinstance(value, Ring) else f"{value.name} over {value.ring.name}"
    if isinstance(value, (MCS, Ideal, Submodule)):
        return value.format()
    if isinstance(value, ModuleHom):
        return {"name": value.name, "source": value.source.name, "target": value.target.name,
                "table": [value.target.format(int(y)) for y in value.table]}
    if isinstance(value, Witness):
        return value.kind.value if value.s is None else {"kind": value.kind.value, "s": value.s}
    if isinstance(value, (list, tuple)):
        return [serialize(v) for v in value]
    if isinstance(value, dict):
        return {str(k): serialize(v) for k, v in value.items()}
    return value


def confirms(reported: Optional[Dict[str, Any]], recomputed: Dict[str, Any]) -> bool:
    """
    True when reported is non-empty and every value in it is recomputed to the same value.
    """

    return bool(reported) and all(key in recomputed and recomputed[key] == value for key, value in reported.items())


def confirms_disagreement(reported: Optional[Dict[str, Any]], recomputed: Dict[str, Any]) -> bool:
    """
    As confirms(), for failures made of verdicts that should have agreed.
    """

    return confirms(reported, recomputed) and len(set(reported.values())) > 1


class BaseStatement:
    """
    BaseStatement - Class all statements MUST inherit!

    Subclasses provide cases(), hypothesis(), conclusion() and revalidate().
    conclusion() returns None when the statement holds on the case,
    and a dictionary describing the failure otherwise;
    revalidate() confirms such a dictionary from the definitions.

    :param id: Statement id
    :type id: str
    :param anchor: The phrase the statement checks
    :type anchor: str
    """

    def __init__(self, id: str, anchor: str = "") -> None:

        self.id = id
        self.anchor = anchor
        self.notes: Dict[str, Any] = {}  # Tallies reported next to the verdict
        self.caps: Caps = DEFAULT_CAPS  # Caps of the catalog being checked

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.id})"

    def cases(self, catalog) -> Iterator[Case]:
        """
        Every candidate case of the catalog, in catalog order.

        :param catalog: Catalog to walk
        :type catalog: Catalog
        """

        raise NotImplementedError("Must be implemented in child class!")

    def hypothesis(self, case: Case) -> bool:
        """
        Whether the case meets the hypotheses of the statement.
        """

        return True

    def conclusion(self, case: Case) -> Optional[Dict[str, Any]]:
        raise NotImplementedError("Must be implemented in child class!")

    def revalidate(self, case: Case, failure: Dict[str, Any]) -> bool:
        """
        Whether the failure reported by conclusion() holds when the violated
        conclusion is evaluated again from its definition (see theory.certify).

        :param case: The case conclusion() failed on
        :type case: Case
        :param failure: What conclusion() returned
        :type failure: Dict[str, Any]
        """

        raise NotImplementedError("Must be implemented in child class!")

    def tally(self, key: str, amount: int = 1) -> None:
        self.notes[key] = self.notes.get(key, 0) + amount

    def check(self, catalog) -> StatementReport:
        """
        Runs the statement over the catalog.

        A failed witness check (InvariantBroken) is recorded as the counterexample
        with the error text. Cases whose checks hit a precondition or a size cap
        are skipped. Any other error propagates.

        :param catalog: Catalog to check against
        :type catalog: Catalog
        :return: Report of the run
        :rtype: StatementReport
        :raise InvariantBroken: If a reported failure does not re-validate
        """

        self.notes = {}
        self.caps = catalog.params.caps
        watch = Stopwatch()
        checked = 0

        for case in self.cases(catalog):
            try:
                if not self.hypothesis(case):
                    continue
                failure = self.conclusion(case)
            except (PreconditionUnmet, SizeCap) as e:
                logger.debug("%s skipped a case: %s", self.id, e)
                continue
            except InvariantBroken as e:
                failure = {"error": f"{type(e).__name__}: {e}"}
            else:
                if failure is not None and not self.revalidate(case, failure):
                    logger.warning("%s reported a failure that does not re-validate", self.id)
                    raise InvariantBroken(f"{self.id} counterexample", f"{serialize(failure)} does not re-validate")

            checked += 1
            if failure is not None:
                counterexample = serialize({**case, **failure})
                logger.info("%s failed after %d instances", self.id, checked)
                return StatementReport(self.id, FAIL, checked, counterexample, watch.elapsed_ms(), dict(self.notes))

        verdict = PASS if checked else VACUOUS
        logger.info("%s %s on %d instances", self.id, verdict, checked)
        return StatementReport(self.id, verdict, checked, None, watch.elapsed_ms(), dict(self.notes))

"""
Mutation harness

Each mutant swaps one predicate for a deliberately broken variant,
reruns the statements, and records whether any of them failed.
A mutant that no statement notices survives; mutants known to be
equivalent at finite scale are flagged as such.

Mutants patch module attributes, so they run one at a time.
"""

from __future__ import annotations

import contextlib
import dataclasses
import logging
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional
from unittest import mock

import numpy as np

from s_comult.algebra import localization
from s_comult.algebra import module as module_core
from s_comult.algebra import ring as ring_core
from s_comult.algebra.errors import DisjointnessFailure
from s_comult.algebra.module import scaled
from s_comult.algebra.ring import Ideal
from s_comult.algebra.struct import DEFAULT_CAPS, Witness, WitnessKind
from s_comult.theory import predicates
from s_comult.verifier.catalog import Catalog
from s_comult.verifier.engine import Verifier
from s_comult.verifier.report import FAIL, StatementReport

logger = logging.getLogger(__name__)


def _universal_prime_witness(module, sub, mcs):
    colon = predicates.residual(sub)
    if colon.elements & mcs.elements:
        raise DisjointnessFailure("(P:M)", module.ring.format(min(colon.elements & mcs.elements)))
    if all(predicates._prime_condition_holds(sub, colon, s) for s in mcs):
        return Witness(WitnessKind.SINGLE_S, s=module.ring.one)
    return None


def _second_without_disjointness(module, sub, mcs):
    for s in mcs:
        if predicates._second_scan(sub, s):
            return Witness(WitnessKind.SINGLE_S, s=s)
    return None


def _torsion_without_unit_factor(module, mcs):
    return np.arange(module.order) == module.zero


def _flipped_pair_witness(small, big, mcs):
    return next((s for s in mcs if scaled(small, s).issubset(big)), None)


def _any_uniform_multiple(sub, mcs):
    return next(iter(mcs), None)


def _radical_as_union(ring, caps=DEFAULT_CAPS):
    elements = frozenset()
    for maximal in ring_core.maximal_ideals(ring, caps):
        elements |= maximal.elements
    return Ideal(ring, elements)


@dataclasses.dataclass(frozen=True, slots=True)
class Mutant:
    name: str
    target: Any  # Module object holding the attribute
    attribute: str
    replacement: Callable[..., Any]
    equivalent: bool = False  # Provably indistinguishable on finite instances
    description: str = ""


MUTANTS: List[Mutant] = [
    Mutant("universal-s-prime", predicates, "is_s_prime_submodule", _universal_prime_witness,
           description="S-prime witness must work for every s, not some s"),
    Mutant("no-second-disjointness", predicates, "is_s_second", _second_without_disjointness,
           description="S-second skips the ann(N) disjointness check"),
    Mutant("no-unit-factor", localization, "s_torsion_mask", _torsion_without_unit_factor,
           description="pair relation of S^-1 M drops the u in u(s'm - sm') = 0"),
    Mutant("flipped-pair", predicates, "lemma_pair_witness", _flipped_pair_witness,
           description="pair form asks for sK inside N instead of sN inside K"),
    Mutant("no-uniform-multiple", predicates, "uniform_multiple_clause", _any_uniform_multiple,
           equivalent=True, description="drops the sN inside s'N clause of the annihilator side"),
    Mutant("radical-as-union", ring_core, "jacobson_radical", _radical_as_union,
           description="Jacobson radical taken as the union of maximal ideals"),
]


@dataclasses.dataclass(slots=True)
class MutantReport:
    mutant: Mutant
    reports: List[StatementReport]

    @property
    def failing(self) -> List[str]:
        return [r.id for r in self.reports if r.verdict == FAIL]

    @property
    def killed(self) -> bool:
        return bool(self.failing)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "mutant": self.mutant.name,
            "description": self.mutant.description,
            "equivalent": self.mutant.equivalent,
            "killed": self.killed,
            "failing": self.failing,
        }


def clear_caches() -> None:
    """
    Drops every cache whose content could depend on a patched function.
    """

    module_core.clear_caches()
    localization.clear_caches()
    predicates.clear_caches()


@contextlib.contextmanager
def activate(mutant: Mutant) -> Iterator[Mutant]:
    """
    Installs a mutant for the duration of the block.

    :param mutant: Mutant to install
    :type mutant: Mutant
    """

    logger.info("Activating mutant %s", mutant.name)
    clear_caches()
    try:
        with mock.patch.object(mutant.target, mutant.attribute, mutant.replacement):
            yield mutant
    finally:
        clear_caches()


def run_mutants(catalog: Catalog, statement_ids: Optional[Iterable[str]] = None,
                mutants: Optional[List[Mutant]] = None) -> List[MutantReport]:
    """
    Runs the statements once per mutant.

    :param catalog: Catalog to check
    :type catalog: Catalog
    :param statement_ids: Statements to run, all by default
    :type statement_ids: Optional[Iterable[str]]
    :param mutants: Mutants to try, all shipped ones by default
    :type mutants: Optional[List[Mutant]]
    :return: One report per mutant, in the given order
    :rtype: List[MutantReport]
    """

    ids = None if statement_ids is None else list(statement_ids)
    results = []
    for mutant in mutants if mutants is not None else MUTANTS:
        with activate(mutant):
            reports = Verifier(catalog, jobs=1).verify_all(ids)
        result = MutantReport(mutant, reports)
        if result.killed:
            logger.info("Mutant %s killed by %s", mutant.name, ", ".join(result.failing))
        else:
            logger.warning("Mutant %s survived%s", mutant.name, " (equivalent)" if mutant.equivalent else "")
        results.append(result)
    return results

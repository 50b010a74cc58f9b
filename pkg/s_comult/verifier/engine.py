"""
Verification engine

Runs registered statements over a catalog and collects their reports.
Statements share the catalog read-only, so they may run in parallel;
reports always come back ordered by statement id.
"""

from __future__ import annotations

import concurrent.futures
import logging
from typing import Iterable, List, Optional

from s_comult.algebra.struct import Stopwatch
from s_comult.verifier import registry
from s_comult.verifier.catalog import Catalog
from s_comult.verifier.report import FAIL, VACUOUS, StatementReport

logger = logging.getLogger(__name__)


class Verifier:
    """
    Verifier - checks statements against one catalog.

    :param catalog: Catalog every statement is checked over
    :type catalog: Catalog
    :param jobs: Number of statements checked at once
    :type jobs: int
    """

    def __init__(self, catalog: Catalog, jobs: int = 1) -> None:

        self.catalog = catalog
        self.jobs: int = max(1, jobs)

    def verify(self, statement_id: str) -> StatementReport:
        """
        Checks one statement.

        A statement that raises is reported as failed,
        with the error as its counterexample.

        :param statement_id: Registered statement id
        :type statement_id: str
        :return: Report for the statement
        :rtype: StatementReport
        :raise UnknownStatement: If the id is not registered
        """

        statement = registry.make(statement_id)
        watch = Stopwatch()

        try:

            return statement.check(self.catalog)

        except Exception as e:

            logger.exception("%s raised while checking", statement_id)
            return StatementReport(statement_id, FAIL, 0, {"error": f"{type(e).__name__}: {e}"}, watch.elapsed_ms())

    def verify_all(self, statement_ids: Optional[Iterable[str]] = None) -> List[StatementReport]:
        """
        Checks every requested statement (all registered ones by default).

        :param statement_ids: Ids to check
        :type statement_ids: Optional[Iterable[str]]
        :return: Reports ordered by statement id
        :rtype: List[StatementReport]
        """

        ids = sorted(set(statement_ids)) if statement_ids is not None else registry.registered()
        for statement_id in ids:
            registry.spec(statement_id)

        if self.jobs == 1:
            reports = [self.verify(i) for i in ids]
        else:
            with concurrent.futures.ThreadPoolExecutor(max_workers=self.jobs) as pool:
                reports = list(pool.map(self.verify, ids))

        return sorted(reports, key=lambda r: r.id)


def passed(reports: List[StatementReport]) -> bool:
    """
    True when nothing failed and at least one statement was not vacuous.
    """

    return not any(r.verdict == FAIL for r in reports) and any(r.verdict != VACUOUS for r in reports)


def verify(statement_id: str, catalog: Catalog) -> StatementReport:
    return Verifier(catalog).verify(statement_id)


def verify_all(catalog: Catalog, statement_ids: Optional[Iterable[str]] = None, jobs: int = 1) -> List[StatementReport]:
    return Verifier(catalog, jobs).verify_all(statement_ids)

"""
Statement reports and the JSON run document
"""

from __future__ import annotations

import dataclasses
import datetime
import json
from pathlib import Path
from typing import Any, Dict, List, Optional

PASS = "pass"
FAIL = "fail"
VACUOUS = "vacuous"


@dataclasses.dataclass(slots=True)
class StatementReport:
    """
    StatementReport - outcome of checking one statement over a catalog
    """

    id: str
    verdict: str  # pass, fail or vacuous
    instances: int  # Instances that met the hypotheses
    counterexample: Optional[Dict[str, Any]] = None  # Present exactly when the verdict is fail
    ms: int = 0
    notes: Dict[str, Any] = dataclasses.field(default_factory=dict)  # Tallies a statement records besides its verdict

    @property
    def failed(self) -> bool:
        return self.verdict == FAIL

    def as_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"id": self.id, "verdict": self.verdict, "instances": self.instances, "ms": self.ms}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.notes:
            out["notes"] = self.notes
        return out


def run_document(reports: List[StatementReport], params: Dict[str, Any],
                 mutants: Optional[List[Dict[str, Any]]] = None) -> Dict[str, Any]:
    """
    Builds the report document of one run.

    :param reports: Reports ordered by statement id
    :type reports: List[StatementReport]
    :param params: Catalog parameters (and any run flags)
    :type params: Dict[str, Any]
    :param mutants: Per-mutant outcomes, for mutation runs
    :type mutants: Optional[List[Dict[str, Any]]]
    :return: {run: {params, timestamp}, statements: [...]}
    :rtype: Dict[str, Any]
    """

    document = {
        "run": {
            "params": params,
            "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds"),
        },
        "statements": [r.as_dict() for r in reports],
    }
    if mutants is not None:
        document["mutants"] = mutants
    return document


def write_report(path: Path, reports: List[StatementReport], params: Dict[str, Any],
                 mutants: Optional[List[Dict[str, Any]]] = None) -> None:
    document = run_document(reports, params, mutants)
    Path(path).write_text(json.dumps(document, indent=2, default=str) + "\n")


def summary_line(report: StatementReport) -> str:
    line = f"{report.id:8} {report.verdict:8} {report.instances:6d} instances {report.ms:7d} ms"
    if report.counterexample is not None:
        line += f"  {report.counterexample}"
    return line

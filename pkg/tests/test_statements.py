"""
Tests for the statements, the registry and the verification engine.

Each statement is first tried on a few hand-built cases,
one that meets its hypotheses and one that does not,
then the whole suite is run over the small catalog.
"""

import json
from unittest import mock

import pytest

from s_comult.algebra import morphism
from s_comult.algebra.errors import AxiomViolation, InvariantBroken, UnknownStatement
from s_comult.algebra.module import parse_submodule, self_of, zero_module, zero_submodule, zn_over_zk
from s_comult.algebra.ring import parse_ideal, zero_ideal, zn
from s_comult.verifier import registry
from s_comult.verifier.engine import Verifier, passed, verify_all
from s_comult.verifier.report import FAIL, PASS, VACUOUS, StatementReport, run_document, summary_line, write_report
from s_comult.verifier.statements.base import confirms, confirms_disagreement
from s_comult.verifier.statements.comultiplication import LemmaEquivalence
from tests.strategies import mcs

IDS = [
    "C-DU", "C-M3", "C-SUB", "L-EQ", "P-CY1", "P-EXT", "P-FAM", "P-HOMS", "P-LOC", "P-MONO", "P-PF", "P-PROD",
    "P-SAT", "P-SPR", "T-COM", "T-CY2", "T-CY3", "T-DU", "T-HOM", "T-LOC", "T-M3", "T-MIN", "T-PRODN", "T-SEC",
    "T-SSUM", "T-TOR",
]


class TestRegistry:

    def test_registered(self):
        assert registry.registered() == IDS

    def test_make(self):
        statement = registry.make("L-EQ")
        assert isinstance(statement, LemmaEquivalence)
        assert statement.id == "L-EQ"
        assert statement.anchor

    def test_unknown(self):
        with pytest.raises(UnknownStatement):
            registry.make("X-NOPE")

    def test_register_twice(self):
        with pytest.raises(ValueError):
            registry.register(id="L-EQ", entry_point="s_comult.verifier.statements.comultiplication:LemmaEquivalence")


class TestComultiplicationStatements:
    """
    Hand-built cases for the statements about S-comultiplication as such.
    """

    def test_lemma_equivalence(self, z6, z6_self, v2, z2):
        statement = registry.make("L-EQ")
        assert statement.conclusion({"module": z6_self, "mcs": mcs(z6, 1, 3)}) is None
        assert statement.conclusion({"module": v2, "mcs": mcs(z2, 1)}) is None

    def test_monotonicity(self, z6, z6_self, v2, z2):
        statement = registry.make("P-MONO")
        case = {"module": z6_self, "mcs": mcs(z6, 1), "larger": mcs(z6, 1, 3)}
        assert statement.hypothesis(case)
        assert statement.conclusion(case) is None
        assert not statement.hypothesis({"module": v2, "mcs": mcs(z2, 1), "larger": mcs(z2, 1)})

    def test_saturation(self, v2, z2, z6, z6_self):
        statement = registry.make("P-SAT")
        assert statement.conclusion({"module": v2, "mcs": mcs(z2, 1)}) is None
        assert statement.conclusion({"module": z6_self, "mcs": mcs(z6, 1, 3)}) is None

    def test_submodule_quotient(self, z6, z6_self, v2, z2):
        statement = registry.make("C-SUB")
        case = {"module": z6_self, "mcs": mcs(z6, 1)}
        assert statement.hypothesis(case)
        assert statement.conclusion(case) is None
        assert not statement.hypothesis({"module": v2, "mcs": mcs(z2, 1)})

    def test_products(self, small_catalog):
        statement = registry.make("P-PROD")
        product = small_catalog.products[0]
        case = {"module": product.module, "mcs": product.mcs, "factors": list(product.factors)}
        assert statement.conclusion(case) is None

    def test_hom_transfer(self, z6, z6_self):
        statement = registry.make("T-HOM")
        f = morphism.projection(z6_self, parse_submodule(z6_self, [3]))
        assert not statement.hypothesis({"hom": f, "mcs": mcs(z6, 1)})
        case = {"hom": f, "mcs": mcs(z6, 1, 2, 4)}
        assert statement.hypothesis(case)
        assert statement.conclusion(case) is None


class TestLocalityStatements:

    def test_localization(self, z6, z6_self, v2, z2):
        statement = registry.make("P-LOC")
        case = {"module": z6_self, "mcs": mcs(z6, 1, 3)}
        assert statement.hypothesis(case)
        assert statement.conclusion(case) is None
        assert not statement.hypothesis({"module": v2, "mcs": mcs(z2, 1)})

    def test_maximal_multiple(self, z6, z6_self, v2, z2):
        statement = registry.make("T-LOC")
        assert statement.hypothesis({"module": z6_self, "mcs": mcs(z6, 1, 3)})
        assert statement.conclusion({"module": z6_self, "mcs": mcs(z6, 1, 3)}) is None
        assert statement.conclusion({"module": v2, "mcs": mcs(z2, 1)}) is None
        assert "without_maximal_multiple" not in statement.notes

    def test_local_characterization(self, z6_self, v2):
        statement = registry.make("T-COM")
        assert statement.conclusion({"module": z6_self}) is None
        assert statement.conclusion({"module": v2}) is None


class TestNakayamaStatements:

    def test_faithful_ideal(self, z6, z6_self):
        statement = registry.make("P-PF")
        case = {"module": z6_self, "mcs": mcs(z6, 1), "ideal": parse_ideal(z6, [1])}
        assert statement.hypothesis(case)
        assert statement.conclusion(case) is None
        assert not statement.hypothesis({"module": z6_self, "mcs": mcs(z6, 1), "ideal": parse_ideal(z6, [3])})

    def test_dual_nakayama_zero_module(self, z6):
        statement = registry.make("T-DU")
        case = {"module": zero_module(z6), "mcs": mcs(z6, 1), "ideal": zero_ideal(z6)}
        assert statement.hypothesis(case)
        assert statement.notes == {"zero_module": 1}
        assert statement.conclusion(case) is None

    def test_dual_nakayama_outside_radical(self, z6):
        statement = registry.make("T-DU")
        case = {"module": zn_over_zk(z6, 2), "mcs": mcs(z6, 1), "ideal": parse_ideal(z6, [3])}
        assert not statement.hypothesis(case)

    def test_dual_nakayama_faithful_radical(self):
        z4 = zn(4)
        statement = registry.make("T-DU")
        case = {"module": self_of(z4), "mcs": mcs(z4, 1), "ideal": parse_ideal(z4, [2])}
        assert not statement.hypothesis(case)

    def test_classical_dual_nakayama(self, z6, z6_self):
        statement = registry.make("C-DU")
        case = {"module": zero_module(z6), "ideal": zero_ideal(z6)}
        assert statement.hypothesis(case)
        assert statement.conclusion(case) is None
        assert not statement.hypothesis({"module": z6_self, "ideal": zero_ideal(z6)})


class TestCyclicStatements:

    def test_minimal_ideal(self, z6, z6_self):
        statement = registry.make("P-CY1")
        minimal = parse_ideal(z6, [3])
        assert not statement.hypothesis({"module": z6_self, "mcs": mcs(z6, 1), "ideal": minimal})
        case = {"module": zn_over_zk(z6, 2), "mcs": mcs(z6, 1), "ideal": minimal}
        assert statement.hypothesis(case)
        assert statement.conclusion(case) is None

    def test_family_intersection(self, z6, z6_self):
        statement = registry.make("P-FAM")
        assert statement.conclusion({"module": z6_self, "mcs": mcs(z6, 1)}) is None

    def test_ideal_extension(self, z6, z6_self):
        statement = registry.make("P-EXT")
        case = {"module": z6_self, "mcs": mcs(z6, 1), "submodule": parse_submodule(z6_self, [3]),
                "ideal": parse_ideal(z6, [2])}
        assert statement.hypothesis(case)
        assert statement.conclusion(case) is None
        assert statement.notes == {"sum_with_annihilator": 1}

    def test_torsion_or_cyclic(self, z6, z6_self):
        assert registry.make("T-TOR").conclusion({"module": z6_self, "mcs": mcs(z6, 1)}) is None

    def test_faithful_multiples(self, z6, z6_self):
        statement = registry.make("T-CY2")
        z5 = zn(5)
        case = {"module": self_of(z5), "mcs": mcs(z5, 1)}
        assert statement.hypothesis(case)
        assert statement.conclusion(case) is None
        assert not statement.hypothesis({"module": z6_self, "mcs": mcs(z6, 1)})

    def test_torsion_free(self, z6, z6_self):
        statement = registry.make("T-CY3")
        case = {"module": z6_self, "mcs": mcs(z6, 1, 3)}
        assert statement.hypothesis(case)
        assert statement.conclusion(case) is None
        assert not statement.hypothesis({"module": z6_self, "mcs": mcs(z6, 1)})

    def test_prime_minimal(self, z6, z6_self):
        statement = registry.make("T-MIN")
        case = {"module": zn_over_zk(z6, 2), "mcs": mcs(z6, 1)}
        assert statement.hypothesis(case)
        assert statement.conclusion(case) is None
        assert statement.notes == {"with_zero_fails": 1}
        assert not statement.hypothesis({"module": z6_self, "mcs": mcs(z6, 1)})


class TestSecondStatements:

    def test_bridge(self, z6, z6_self):
        case = {"hom": morphism.identity(z6_self), "mcs": mcs(z6, 1, 3)}
        assert registry.make("P-HOMS").conclusion(case) is None

    def test_prime_homothety(self, z6, z6_self):
        statement = registry.make("P-SPR")
        case = {"module": z6_self, "mcs": mcs(z6, 1, 3), "submodule": zero_submodule(z6_self)}
        assert statement.hypothesis(case)
        assert statement.conclusion(case) is None
        assert not statement.hypothesis({**case, "submodule": parse_submodule(z6_self, [3])})

    def test_second_characterizations(self, z6, z6_self):
        statement = registry.make("T-SEC")
        case = {"module": z6_self, "mcs": mcs(z6, 1, 5), "submodule": parse_submodule(z6_self, [2])}
        assert statement.hypothesis(case)
        assert statement.conclusion(case) is None
        assert not statement.hypothesis({**case, "submodule": zero_submodule(z6_self)})

    def test_second_via_annihilator(self, z6, z6_self):
        statement = registry.make("T-M3")
        case = {"module": z6_self, "mcs": mcs(z6, 1, 3), "submodule": parse_submodule(z6_self, [2])}
        assert statement.hypothesis(case)
        assert statement.conclusion(case) is None

    def test_second_prime_annihilator(self, z6_self, v2):
        statement = registry.make("C-M3")
        case = {"module": z6_self, "submodule": parse_submodule(z6_self, [3])}
        assert statement.hypothesis(case)
        assert statement.conclusion(case) is None
        assert not statement.hypothesis({"module": v2, "submodule": parse_submodule(v2, [(0, 1)])})

    def test_second_inside_sum(self, z6, z6_self):
        statement = registry.make("T-SSUM")
        case = {"module": z6_self, "mcs": mcs(z6, 1, 5), "submodule": parse_submodule(z6_self, [2])}
        assert statement.hypothesis(case)
        assert statement.conclusion(case) is None


class TestEngine:
    """
    Running statements over a catalog.
    """

    def test_small_catalog(self, small_catalog):
        reports = verify_all(small_catalog)
        assert [r.id for r in reports] == IDS
        assert not [r.as_dict() for r in reports if r.failed]
        assert passed(reports)
        for report in reports:
            assert (report.counterexample is None) == (report.verdict != FAIL)

    def test_parallel_matches_serial(self, small_catalog):
        ids = ["L-EQ", "P-SAT", "T-DU", "C-M3"]
        serial = Verifier(small_catalog, jobs=1).verify_all(ids)
        parallel = Verifier(small_catalog, jobs=2).verify_all(reversed(ids))
        assert [(r.id, r.verdict, r.instances) for r in serial] == [(r.id, r.verdict, r.instances) for r in parallel]

    def test_unknown_id(self, small_catalog):
        with pytest.raises(UnknownStatement):
            Verifier(small_catalog).verify_all(["L-EQ", "X-NOPE"])

    def test_raising_statement_fails(self, small_catalog):
        with mock.patch.object(LemmaEquivalence, "conclusion", side_effect=RuntimeError("boom")):
            report = Verifier(small_catalog).verify("L-EQ")
        assert report.verdict == FAIL
        assert report.counterexample == {"error": "RuntimeError: boom"}

    def test_algebra_error_is_counterexample(self, small_catalog):
        with mock.patch.object(LemmaEquivalence, "conclusion", side_effect=InvariantBroken("forged")):
            report = Verifier(small_catalog).verify("L-EQ")
        assert report.verdict == FAIL
        assert report.instances == 1
        assert report.counterexample["error"].startswith("InvariantBroken")
        assert report.counterexample["module"] == "Z2 over Z2"

    def test_passed(self):
        assert passed([StatementReport("A", PASS, 3), StatementReport("B", VACUOUS, 0)])
        assert not passed([StatementReport("A", VACUOUS, 0)])
        assert not passed([StatementReport("A", PASS, 3), StatementReport("B", FAIL, 1, {"part": "x"})])

    @pytest.mark.slow
    def test_default_catalog(self):
        from s_comult.verifier.catalog import generate_catalog

        reports = verify_all(generate_catalog(), jobs=2)
        assert len(reports) == 26
        assert not [r.id for r in reports if r.failed]


class TestRevalidation:
    """
    A reported failure stands only when the definitions confirm it.
    """

    def test_made_up_part_is_rejected(self, small_catalog):
        statement = registry.make("L-EQ")
        with mock.patch.object(LemmaEquivalence, "conclusion", return_value={"part": "made up"}):
            with pytest.raises(InvariantBroken, match="does not re-validate"):
                statement.check(small_catalog)

    def test_lying_verdicts_are_rejected(self, small_catalog):
        lie = {"verdicts": {"definition": True, "annihilator": True, "pairs": False}}
        with mock.patch.object(LemmaEquivalence, "conclusion", return_value=lie):
            report = Verifier(small_catalog).verify("L-EQ")
        assert report.verdict == FAIL
        assert report.instances == 0
        assert report.counterexample["error"].startswith("InvariantBroken: L-EQ counterexample")

    def test_agreeing_verdicts_are_rejected(self, small_catalog):
        agreeing = {"verdicts": {"definition": True, "annihilator": True, "pairs": True}}
        with mock.patch.object(LemmaEquivalence, "conclusion", return_value=agreeing):
            with pytest.raises(InvariantBroken):
                registry.make("L-EQ").check(small_catalog)

    def test_other_algebra_errors_propagate(self, small_catalog):
        with mock.patch.object(LemmaEquivalence, "conclusion", side_effect=AxiomViolation("made up")):
            with pytest.raises(AxiomViolation):
                registry.make("L-EQ").check(small_catalog)
            report = Verifier(small_catalog).verify("L-EQ")
        assert report.verdict == FAIL
        assert report.instances == 0
        assert report.counterexample["error"].startswith("AxiomViolation")

    def test_confirms(self):
        recomputed = {"definition": True, "annihilator": True, "pairs": True}
        assert confirms({"pairs": True}, recomputed)
        assert not confirms({}, recomputed)
        assert not confirms({"other": True}, recomputed)
        assert not confirms_disagreement({"pairs": True, "definition": True}, recomputed)
        assert confirms_disagreement({"a": True, "b": False}, {"a": True, "b": False})

    def test_true_failure_is_accepted(self):
        ring = zn(3)
        statement = registry.make("T-DU")
        case = {"module": self_of(ring), "mcs": mcs(ring, 1), "ideal": zero_ideal(ring)}
        assert statement.conclusion(case) == {"part": "no s in S kills M"}
        assert statement.revalidate(case, {"part": "no s in S kills M"})
        assert not statement.revalidate(case, {"part": "made up"})


class TestReport:

    def test_as_dict(self):
        report = StatementReport("T-DU", PASS, 4, ms=12, notes={"zero_module": 2})
        assert report.as_dict() == {"id": "T-DU", "verdict": "pass", "instances": 4, "ms": 12,
                                    "notes": {"zero_module": 2}}
        assert summary_line(report).startswith("T-DU     pass")

    def test_run_document(self, tmp_path):
        reports = [StatementReport("L-EQ", PASS, 10), StatementReport("P-SAT", FAIL, 2, {"part": "x"})]
        document = run_document(reports, {"max_ring": 6})
        assert set(document) == {"run", "statements"}
        assert document["run"]["params"] == {"max_ring": 6}
        assert document["statements"][1]["counterexample"] == {"part": "x"}
        assert "mutants" in run_document(reports, {}, mutants=[])

        path = tmp_path / "report.json"
        write_report(path, reports, {"max_ring": 6})
        assert json.loads(path.read_text())["statements"][0]["id"] == "L-EQ"

"""
Tests for the mutation harness: every non-equivalent mutant is
killed by the statement it breaks, and patches never leak.
"""

import pytest

from s_comult.algebra import ring as ring_core
from s_comult.theory import predicates
from s_comult.verifier import mutation


def by_name(name):
    return next(m for m in mutation.MUTANTS if m.name == name)


class TestActivate:

    def test_patch_is_restored(self):
        mutant = by_name("flipped-pair")
        original = predicates.lemma_pair_witness
        with mutation.activate(mutant):
            assert predicates.lemma_pair_witness is mutant.replacement
        assert predicates.lemma_pair_witness is original

    def test_restored_after_error(self):
        original = ring_core.jacobson_radical
        with pytest.raises(RuntimeError):
            with mutation.activate(by_name("radical-as-union")):
                raise RuntimeError("stop")
        assert ring_core.jacobson_radical is original

    def test_names_unique(self):
        names = [m.name for m in mutation.MUTANTS]
        assert len(names) == len(set(names))
        assert [m.name for m in mutation.MUTANTS if m.equivalent] == ["no-uniform-multiple"]


class TestKills:
    """
    Each mutant against the statements it should trip.
    """

    @pytest.mark.parametrize("name, statements, killer", [
        ("universal-s-prime", ["P-SPR"], "P-SPR"),
        ("no-second-disjointness", ["T-M3"], "T-M3"),
        ("no-unit-factor", ["P-LOC", "T-LOC"], None),
        ("flipped-pair", ["L-EQ"], "L-EQ"),
        ("radical-as-union", ["T-DU"], "T-DU"),
    ])
    def test_killed(self, small_catalog, name, statements, killer):
        [result] = mutation.run_mutants(small_catalog, statements, [by_name(name)])
        assert result.killed
        if killer is not None:
            assert killer in result.failing
        assert result.as_dict()["killed"] is True

    def test_true_counterexample_is_kept(self, small_catalog):
        [result] = mutation.run_mutants(small_catalog, ["T-DU"], [by_name("radical-as-union")])
        [report] = result.reports
        assert report.counterexample["part"] == "no s in S kills M"
        assert "error" not in report.counterexample
        assert report.instances > 0

    def test_false_counterexample_is_rejected(self, small_catalog):
        [result] = mutation.run_mutants(small_catalog, ["L-EQ"], [by_name("flipped-pair")])
        [report] = result.reports
        assert report.counterexample["error"].startswith("InvariantBroken: L-EQ counterexample")
        assert report.instances == 0

    def test_equivalent_survives(self, small_catalog):
        [result] = mutation.run_mutants(small_catalog, ["T-M3"], [by_name("no-uniform-multiple")])
        assert not result.killed
        assert result.as_dict() == {
            "mutant": "no-uniform-multiple",
            "description": by_name("no-uniform-multiple").description,
            "equivalent": True,
            "killed": False,
            "failing": [],
        }

    def test_clean_run_after_mutants(self, small_catalog):
        mutation.run_mutants(small_catalog, ["L-EQ"], [by_name("flipped-pair")])
        from s_comult.verifier.engine import verify_all

        assert not [r.id for r in verify_all(small_catalog, ["L-EQ", "T-DU"]) if r.failed]

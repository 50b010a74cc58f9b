"""
Tests for the command line, driven through main() with its exit codes.
"""

import json
import shutil
from pathlib import Path

import pytest

from s_comult.cli.instance import load_instance
from s_comult.cli.main import EXIT_FALSE, EXIT_INPUT, EXIT_PRECONDITION, EXIT_TRUE, main

DOCS = Path(__file__).resolve().parent.parent / "docs"


@pytest.fixture
def z6_file(tmp_path):
    path = tmp_path / "z6.inst"
    shutil.copy(DOCS / "z6.inst", path)
    return str(path)


@pytest.fixture
def v2_file(tmp_path):
    path = tmp_path / "v2.inst"
    shutil.copy(DOCS / "v2_over_f2.inst", path)
    return str(path)


class TestCheck:

    def test_s_comultiplication(self, z6_file, capsys):
        assert main(["check", z6_file, "s-comultiplication"]) == EXIT_TRUE
        out = capsys.readouterr().out
        assert out.startswith("s-comultiplication: true")

    def test_vector_space(self, v2_file, capsys):
        assert main(["check", v2_file, "comultiplication"]) == EXIT_FALSE
        assert "failing submodule" in capsys.readouterr().out
        assert main(["check", v2_file, "multiplication"]) == EXIT_FALSE

    def test_s_prime(self, z6_file, capsys):
        assert main(["check", z6_file, "s-prime", "--submodule", "K"]) == EXIT_TRUE
        assert "s=" in capsys.readouterr().out

    def test_s_epic(self, z6_file):
        assert main(["check", z6_file, "s-epic", "--hom", "f", "--mcs", "U"]) == EXIT_TRUE

    def test_mcs_labels(self, z6_file):
        assert main(["check", z6_file, "s-torsion-free", "--mcs", "{1,3}"]) == EXIT_TRUE
        assert main(["check", z6_file, "s-torsion-free", "--mcs", "{1,5}"]) == EXIT_FALSE

    def test_other_module(self, z6_file):
        assert main(["check", z6_file, "prime-module", "--module", "N"]) == EXIT_TRUE


class TestExitCodes:
    """
    Preconditions exit 2, bad input exits 3.
    """

    def test_zero_submodule(self, z6_file, capsys):
        assert main(["check", z6_file, "s-second", "--submodule", "0"]) == EXIT_PRECONDITION
        assert capsys.readouterr().err.startswith("precondition:")

    def test_disjointness(self, z6_file):
        assert main(["check", z6_file, "s-prime", "--submodule", "3", "--mcs", "{1,3}"]) == EXIT_PRECONDITION

    def test_bad_file(self, tmp_path, capsys):
        path = tmp_path / "bad.inst"
        path.write_text("ring zn 6\nmodul M self\n")
        assert main(["check", str(path), "s-cyclic"]) == EXIT_INPUT
        assert "line 2" in capsys.readouterr().err

    def test_missing_file(self, tmp_path):
        assert main(["check", str(tmp_path / "nope.inst"), "s-cyclic"]) == EXIT_INPUT

    @pytest.mark.parametrize("flags", [
        ["--mcs", "T"],
        ["--mcs", "{2,3}"],
        ["--module", "X"],
        ["--hom", "g"],
    ])
    def test_bad_flags(self, z6_file, flags):
        assert main(["check", z6_file, "s-cyclic", *flags]) == EXIT_INPUT

    def test_unknown_predicate(self, z6_file):
        assert main(["check", z6_file, "s-wonderful"]) == EXIT_INPUT

    def test_missing_hom(self, z6_file):
        assert main(["check", z6_file, "s-epic"]) == EXIT_INPUT


class TestVerify:

    def test_selected(self, capsys):
        assert main(["verify", "--statements", "T-DU,L-EQ", "--max-ring", "6"]) == EXIT_TRUE
        lines = capsys.readouterr().out.splitlines()
        assert [line.split()[0] for line in lines] == ["L-EQ", "T-DU"]
        assert all(line.split()[1] == "pass" for line in lines)

    def test_report(self, tmp_path):
        path = tmp_path / "report.json"
        assert main(["verify", "--statements", "P-SAT", "--max-ring", "4", "--report", str(path)]) == EXIT_TRUE
        document = json.loads(path.read_text())
        assert document["run"]["params"]["max_ring"] == 4
        assert [s["id"] for s in document["statements"]] == ["P-SAT"]

    def test_unknown_statement(self):
        assert main(["verify", "--statements", "X-NOPE", "--max-ring", "4"]) == EXIT_INPUT

    def test_mutation(self, tmp_path, capsys):
        path = tmp_path / "mutants.json"
        assert main(["verify", "--mutation", "--statements", "L-EQ", "--max-ring", "6",
                     "--report", str(path)]) == EXIT_FALSE
        out = capsys.readouterr().out
        assert "flipped-pair" in out and "killed by L-EQ" in out
        mutants = json.loads(path.read_text())["mutants"]
        assert {m["mutant"]: m["killed"] for m in mutants}["flipped-pair"] is True


class TestEnumerateAndDump:

    def test_ideals(self, z6_file, capsys):
        assert main(["enumerate", z6_file, "ideals"]) == EXIT_TRUE
        assert len(capsys.readouterr().out.splitlines()) == 4

    def test_maximal(self, z6_file, capsys):
        assert main(["enumerate", z6_file, "maximal"]) == EXIT_TRUE
        assert set(capsys.readouterr().out.splitlines()) == {"{0,3}", "{0,2,4}"}

    def test_submodules(self, v2_file, capsys):
        assert main(["enumerate", v2_file, "submodules"]) == EXIT_TRUE
        assert len(capsys.readouterr().out.splitlines()) == 5

    def test_mcs(self, z6_file, capsys):
        assert main(["enumerate", z6_file, "mcs"]) == EXIT_TRUE
        assert capsys.readouterr().out.splitlines()[0] == "{1}"

    def test_dump(self, tmp_path, capsys):
        assert main(["dump", "Z6", "--max-ring", "6"]) == EXIT_TRUE
        assert capsys.readouterr().out.startswith("ring zn 6\n")

        path = tmp_path / "z6.inst"
        assert main(["dump", "Z6", "--max-ring", "6", "-o", str(path)]) == EXIT_TRUE
        instance = load_instance(path)
        assert len(instance.modules) == 10
        assert len(instance.mcs) == 7

    def test_dump_unknown(self):
        assert main(["dump", "Z99", "--max-ring", "6"]) == EXIT_INPUT

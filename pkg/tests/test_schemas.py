import pytest
from pydantic import ValidationError

from src.errors import InvalidStructure, NotFullRank
from src.finlat import boolean, m3
from src.germ import klein_germ
from src.latmod import BeamParams, frozen
from src.schemas import (
    CaseFailure,
    CycleSetFile,
    GermFile,
    LatticeFile,
    PLatticeFile,
    SolutionFile,
    SuiteReport,
)
from src.utils.json_utils import load_json_file
from src.ybe import permutation_solution


def test_lattice_file(data_dir):
    """Test loading a lattice file and writing it back"""
    lattice = LatticeFile.model_validate(load_json_file(data_dir / "m3.json")).to_lattice()
    assert lattice == m3()
    assert LatticeFile.from_lattice(boolean(2)).to_lattice() == boolean(2)


def test_plattice_file_rejects_bad_matrices():
    with pytest.raises(ValidationError):
        PLatticeFile.model_validate({"p": 2, "delta": 2, "H": [[1, 0], [0]]})
    with pytest.raises(NotFullRank):
        PLatticeFile.model_validate({"p": 2, "delta": 3, "H": [[1, 0], [0, 1]]}).to_plattice()


def test_plattice_file_keeps_the_lattice():
    a = frozen(BeamParams(3, 2), 2)
    assert PLatticeFile.from_plattice(a).to_plattice() == a


def test_germ_file_fills_identity_products(data_dir):
    table = GermFile.model_validate(load_json_file(data_dir / "klein.json")).to_table()
    assert table.mul("e", "x") == "x"
    assert table.mul("x", "x") == "D"
    assert GermFile.from_table(klein_germ()).to_table().to_dict() == klein_germ().to_dict()


def test_solution_file(data_dir):
    r = SolutionFile.model_validate(load_json_file(data_dir / "swap_solution.json")).to_solution()
    assert r == permutation_solution(2, [1, 0])
    assert SolutionFile.from_solution(r).to_solution() == r
    assert "R" in SolutionFile.from_solution(r).dump()


def test_incomplete_solution_is_rejected():
    with pytest.raises(InvalidStructure):
        SolutionFile.model_validate({"n": 2, "R": [[[0, 0], [0, 0]]]}).to_solution()


def test_cycle_set_file_shape():
    with pytest.raises(InvalidStructure):
        CycleSetFile.model_validate({"n": 2, "op": [[0, 1]]}).to_cycle_set()


def test_suite_report_passed_is_computed():
    report = SuiteReport(suite="demo", cases=3)
    assert report.passed
    assert report.model_dump()["passed"] is True
    report.failures.append(CaseFailure(case="x=1", expected="1", got="2"))
    assert not report.passed

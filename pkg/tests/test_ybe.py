import pytest

from src.errors import InvalidStructure, TooLarge
from src.germ import Germ, validate_germ
from src.ybe import (
    brute_force_solutions,
    convert,
    cycle_set_from_solution,
    duality_well_defined,
    enumerate_solutions,
    enumerate_with_classes,
    l_algebra_from_germ,
    permutation_solution,
    relations,
    square_map,
    structure_generators,
    structure_germ,
    trivial_solution,
    validate,
)


@pytest.mark.parametrize("n, classes", [(1, 1), (2, 2), (3, 5)])
def test_class_counts(n, classes):
    assert enumerate_with_classes(n).class_count == classes


@pytest.mark.slow
def test_class_count_on_four_points():
    assert enumerate_with_classes(4).class_count == 23


def test_enumeration_guard():
    with pytest.raises(TooLarge):
        enumerate_solutions(5)


@pytest.mark.parametrize("n", [2, 3])
def test_enumeration_matches_brute_force(n):
    assert enumerate_solutions(n) == brute_force_solutions(n)


def test_trivial_solution():
    r = trivial_solution(2)
    assert validate(r).valid
    c = cycle_set_from_solution(r)
    assert square_map(c) == (0, 1)
    assert relations(c, ["x", "y"]) == ["xy = yx"]


def test_trivial_solution_gives_free_abelian_germ():
    table = structure_germ(cycle_set_from_solution(trivial_solution(2)))
    assert validate_germ(table).valid
    assert sorted(table.elements) == ["D", "e", "x", "y"]
    assert table.mul("x", "y") == "D"
    assert table.mul("y", "x") == "D"
    assert table.mul("x", "x") is None


def test_swap_solution_gives_klein_germ():
    c = cycle_set_from_solution(permutation_solution(2, [1, 0]))
    assert square_map(c) == (1, 0)
    germ = Germ(structure_germ(c))
    assert germ.right_normal_form(["x", "x"]) == ("D",)
    assert germ.right_normal_form(["y", "y"]) == ("D",)
    assert germ.central_dual_atoms == ["x", "y"]
    assert germ.duality["x"] == "y"


def test_l_algebra_is_recovered_from_the_germ():
    c = cycle_set_from_solution(permutation_solution(2, [1, 0]))
    germ = Germ(structure_germ(c))
    recovered = l_algebra_from_germ(germ, structure_generators(c.n))
    assert recovered == convert(c).l_algebra


def test_conversions_agree():
    r = permutation_solution(3, [1, 0, 2])
    forms = convert(r)
    assert convert(forms.cycle_set).solution == r
    assert convert(forms.l_algebra).cycle_set == forms.cycle_set


def test_non_involutive_solution():
    r = permutation_solution(3, [1, 2, 0])
    report = validate(r)
    assert report.braid and report.nondegenerate
    assert not report.involutive
    assert not duality_well_defined(r)
    with pytest.raises(InvalidStructure):
        convert(r)


def test_structure_germ_guard():
    c = cycle_set_from_solution(trivial_solution(3))
    with pytest.raises(TooLarge):
        structure_germ(c, max_n=2)

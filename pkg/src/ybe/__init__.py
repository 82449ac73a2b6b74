from .search import (
    Enumeration,
    brute_force_solutions,
    canonical_form,
    enumerate_cycle_sets,
    enumerate_solutions,
    enumerate_with_classes,
    isomorphism_classes,
    relabel,
)
from .solutions import (
    E,
    CycleSet,
    CycleSetReport,
    LAlgebra,
    Presentations,
    RMap,
    SolutionReport,
    convert,
    cycle_set_from_l_algebra,
    cycle_set_from_solution,
    duality_well_defined,
    l_algebra_from_cycle_set,
    permutation_solution,
    relations,
    solution_from_cycle_set,
    square_map,
    trivial_solution,
    validate,
    validate_cycle_set,
    validate_l_algebra,
)
from .structure import l_algebra_from_germ, structure_generators, structure_germ

__all__ = [
    "E",
    "CycleSet",
    "CycleSetReport",
    "Enumeration",
    "LAlgebra",
    "Presentations",
    "RMap",
    "SolutionReport",
    "brute_force_solutions",
    "canonical_form",
    "convert",
    "cycle_set_from_l_algebra",
    "cycle_set_from_solution",
    "duality_well_defined",
    "enumerate_cycle_sets",
    "enumerate_solutions",
    "enumerate_with_classes",
    "isomorphism_classes",
    "l_algebra_from_cycle_set",
    "l_algebra_from_germ",
    "permutation_solution",
    "relabel",
    "relations",
    "solution_from_cycle_set",
    "square_map",
    "structure_generators",
    "structure_germ",
    "trivial_solution",
    "validate",
    "validate_cycle_set",
    "validate_l_algebra",
]

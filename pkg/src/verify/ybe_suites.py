"""Suites on set-theoretic solutions and on the file formats."""

import logging

from src.finlat import boolean, m3, n5
from src.latmod import BeamParams, random_plattice
from src.schemas import CycleSetFile, GermFile, LatticeFile, PLatticeFile, SolutionFile
from src.verify.context import SuiteContext
from src.verify.corpus import builtin_germ, solutions_up_to
from src.verify.registry import register_suite
from src.ybe import (
    brute_force_solutions,
    convert,
    cycle_set_from_solution,
    duality_well_defined,
    enumerate_solutions,
    enumerate_with_classes,
    l_algebra_from_cycle_set,
    permutation_solution,
    validate,
)

logger = logging.getLogger(__name__)

# isomorphism classes of involutive non-degenerate solutions on 1, 2, 3 points
CLASS_COUNTS = {1: 1, 2: 2, 3: 5}


@register_suite("ybe_braid")
def ybe_braid(ctx: SuiteContext) -> None:
    """Enumerated solutions satisfy the braid relation; involutivity matches the duality."""
    ctx.cover("every solution on at most 3 points, plus a non-involutive permutation map")
    for r in solutions_up_to(3):
        report = validate(r)
        ctx.holds(f"{r.to_dict()} braid", report.braid)
        ctx.holds(f"{r.to_dict()} involutive", report.involutive)
        ctx.holds(f"{r.to_dict()} duality", duality_well_defined(r))

    cyclic = permutation_solution(3, [1, 2, 0])
    report = validate(cyclic)
    ctx.holds("3-cycle braid", report.braid)
    ctx.check("3-cycle involutive", False, report.involutive)
    ctx.check("3-cycle duality", report.involutive, duality_well_defined(cyclic))


@register_suite("enumeration_agreement")
def enumeration_agreement(ctx: SuiteContext) -> None:
    """Backtracking over cycle sets and brute force over permutation families agree."""
    for n in (2, 3):
        ctx.cover(f"n={n}")
        ctx.check(f"n={n} solutions", enumerate_solutions(n), brute_force_solutions(n))
    for n, expected in CLASS_COUNTS.items():
        ctx.check(f"n={n} classes", expected, enumerate_with_classes(n).class_count)


@register_suite("round_trip")
def round_trip(ctx: SuiteContext) -> None:
    """File formats and presentations convert back to what they came from."""
    ctx.cover("lattice, R-lattice, germ, solution and cycle set files")
    for name, lattice in (("boolean(2)", boolean(2)), ("M3", m3()), ("N5", n5())):
        back = LatticeFile.from_lattice(lattice).to_lattice()
        ctx.check(f"{name} lattice file", lattice.to_dict(), back.to_dict())

    samples = max(1, ctx.config.random_cases // 10)
    params = BeamParams(3, 3)
    for _ in range(samples):
        a = random_plattice(ctx.rng, params)
        ctx.check(f"{a} lattice file", a, PLatticeFile.from_plattice(a).to_plattice())

    for name in ("klein", "z_times_klein"):
        table = builtin_germ(name).table
        back = GermFile.from_table(table).to_table()
        ctx.check(f"{name} germ file", table.to_dict(), back.to_dict())

    ctx.cover("solution, cycle set and L-algebra presentations on at most 3 points")
    for r in solutions_up_to(3):
        c = cycle_set_from_solution(r)
        ctx.check(f"{r.to_dict()} solution file", r, SolutionFile.from_solution(r).to_solution())
        ctx.check(f"{r.to_dict()} cycle set file", c, CycleSetFile.from_cycle_set(c).to_cycle_set())
        for obj in (r, c, l_algebra_from_cycle_set(c)):
            p = convert(obj)
            ctx.check(f"{r.to_dict()} from {type(obj).__name__}", (r, c), (p.solution, p.cycle_set))

"""Suites checked in the coordinatized model ``Lat(R, delta)``."""

import logging

from src.finlat import classify, is_primary, subspace_lattice
from src.finlat import center as lattice_center
from src.latmod import (
    BeamParams,
    PLattice,
    ProductElement,
    check_dual_basis,
    cone_elements,
    conjugate_partition,
    direct_limit_check,
    frozen_frame_ok,
    iota_by_joins,
    join,
    leq,
    meet,
    product_decompose,
    random_plattice,
    s_join_atoms,
    snf_exponents,
    snf_profile,
    strong_interval,
    type_representatives,
)
from src.verify.context import SuiteContext
from src.verify.registry import register_suite

logger = logging.getLogger(__name__)

# (p, delta, degree bound) for the exhaustive index-sequence grid
IOTA_GRID = ((2, 2, 6), (3, 2, 6), (2, 3, 6))

# Too many lattices to list: every SNF type plus seeded random ones
IOTA_SAMPLED = ((3, 3, 6),)

RANDOM_PARAMS = (BeamParams(2, 2), BeamParams(3, 2), BeamParams(2, 3))

FRAME_LAYOUTS = (
    (BeamParams(2, 1), BeamParams(3, 2)),
    (BeamParams(3, 1), BeamParams(2, 2)),
    (BeamParams(2, 2), BeamParams(3, 1), BeamParams(2, 1)),
)


@register_suite("iota_nonincreasing")
def iota_nonincreasing(ctx: SuiteContext) -> None:
    """Index sequences from joins equal the conjugate SNF partition and never increase."""
    for p, delta, bound in IOTA_GRID:
        params = BeamParams(p, delta)
        bound = min(bound, ctx.config.max_degree)
        ctx.cover(f"all A ⊆ R^{delta} over p={p} with deg <= {bound}")
        for a in cone_elements(params, bound, ctx.config.max_enum):
            _check_iota(ctx, a)

    samples = max(1, ctx.config.random_cases // 5)
    for p, delta, bound in IOTA_SAMPLED:
        params = BeamParams(p, delta)
        bound = min(bound, ctx.config.max_degree)
        max_exp = bound // delta
        ctx.cover(
            f"every SNF type of A ⊆ R^{delta} over p={p} with deg <= {bound}"
            f" and {samples} random ones with exponents <= {max_exp}"
        )
        for a in type_representatives(ctx.rng, params, bound):
            _check_iota(ctx, a)
        for _ in range(samples):
            _check_iota(ctx, random_plattice(ctx.rng, params, max_exp=max_exp, cone=True))


def _check_iota(ctx: SuiteContext, a: PLattice) -> None:
    exps = snf_exponents(a)
    iota = iota_by_joins(a, exps[0] if exps else 0)
    ctx.check(f"{a.params} {a} iota", conjugate_partition(exps), iota)
    ctx.holds(
        f"{a.params} {a} nonincreasing",
        all(iota[i] >= iota[i + 1] for i in range(len(iota) - 1)),
    )


@register_suite("meet_irred_equiv")
def meet_irred_equiv(ctx: SuiteContext) -> None:
    """Meet-irreducible, 1-homogeneous and dual chain coincide below e."""
    for params, n in ((BeamParams(2, 2), 3), (BeamParams(2, 3), 2)):
        si = strong_interval(params, n, ctx.config.max_enum)
        ctx.cover(f"[p^{n}R^{params.delta}, R^{params.delta}] over p={params.p}")
        top = si.lattice.top
        for i, a in enumerate(si.elements):
            if i == top:
                continue
            profile = snf_profile(a)
            by_covers = len(si.lattice.upper_covers(i)) == 1
            ctx.check(f"{params} {a} meet irreducible", by_covers, profile.meet_irreducible)
            ctx.check(f"{params} {a} 1-homogeneous", by_covers, profile.one_homogeneous)
            ctx.check(f"{params} {a} dual chain", by_covers, profile.dual_chain)


@register_suite("parallelogram")
def parallelogram(ctx: SuiteContext) -> None:
    """``deg(A) + deg(B) = deg(A ∨ B) + deg(A ∧ B)`` on random pairs."""
    ctx.cover(f"{ctx.config.random_cases} random pairs, seed {ctx.config.seed}")
    for k in range(ctx.config.random_cases):
        params = RANDOM_PARAMS[k % len(RANDOM_PARAMS)]
        a = random_plattice(ctx.rng, params)
        b = random_plattice(ctx.rng, params)
        m, j = meet(a, b), join(a, b)
        ctx.check(f"pair {k}: {a}, {b}", a.deg + b.deg, m.deg + j.deg)
        ctx.holds(f"pair {k}: bounds", leq(m, a) and leq(m, b) and leq(a, j) and leq(b, j))


@register_suite("frozen_frame")
def frozen_frame(ctx: SuiteContext) -> None:
    """The frozen powers form a dual frame and recover every element by meets."""
    samples = max(1, ctx.config.random_cases // 20)
    for layout in FRAME_LAYOUTS:
        names = ", ".join(str(p) for p in layout)
        ctx.cover(f"layout {names}: n <= 4, {samples} random elements")
        for n in range(1, 5):
            ctx.holds(f"layout {names} n={n} dual frame", frozen_frame_ok(layout, n))
        for k in range(samples):
            x = ProductElement(
                tuple(random_plattice(ctx.rng, params, max_exp=2, cone=True) for params in layout)
            )
            dec = product_decompose(x)
            ctx.holds(f"layout {names} {x} meet", dec.meet_ok)
            ctx.holds(f"layout {names} {x} degree", dec.degree_ok)


@register_suite("strong_geometric")
def strong_geometric(ctx: SuiteContext) -> None:
    """``[pR^delta, R^delta]`` is modular, geometric and primary with trivial center."""
    for delta in (2, 3, 4):
        params = BeamParams(2, delta)
        si = strong_interval(params, 1, ctx.config.max_enum)
        ctx.cover(f"[2R^{delta}, R^{delta}]")
        c = classify(si.lattice)
        expected, _ = subspace_lattice(2, delta)
        ctx.check(f"delta={delta} size", expected.n, si.lattice.n)
        ctx.holds(f"delta={delta} modular", c.modular)
        ctx.holds(f"delta={delta} geometric", c.geometric)
        ctx.holds(f"delta={delta} primary", is_primary(si.lattice))
        ctx.check(f"delta={delta} center size", 2, len(lattice_center(si.lattice)))


@register_suite("primary")
def primary(ctx: SuiteContext) -> None:
    """Strong intervals of a single beam are primary lattices."""
    for params, n in ((BeamParams(2, 2), 2), (BeamParams(3, 2), 1), (BeamParams(2, 3), 1)):
        ctx.cover(f"[p^{n}R^{params.delta}, R^{params.delta}] over p={params.p}")
        si = strong_interval(params, n, ctx.config.max_enum)
        ctx.holds(f"{params} n={n} primary", is_primary(si.lattice))


@register_suite("dual_basis")
def dual_basis(ctx: SuiteContext) -> None:
    """``y_i = {x : x_i ≡ 0 mod p^n}`` is a dual basis of ``[p^n R^delta, R^delta]``."""
    for params, n in ((BeamParams(2, 4), 2), (BeamParams(3, 4), 1)):
        ctx.cover(f"dual basis over {params} at n={n}")
        check = check_dual_basis(params, n)
        for name, value in check.model_dump().items():
            ctx.holds(f"{params} n={n} {name}", value)


@register_suite("direct_limit")
def direct_limit(ctx: SuiteContext) -> None:
    """Truncated intervals embed compatibly and exhaust the bounded lattices."""
    for params in (BeamParams(2, 2), BeamParams(3, 2)):
        depth = 2 if params.p == 2 else 1
        ctx.cover(f"{params} up to depth {depth}")
        report = direct_limit_check(
            params, depth, ctx.config.max_enum, ctx.rng, samples=50
        )
        ctx.cases += report.cases - len(report.failures)
        for failure in report.failures:
            ctx.check(f"{params} depth {depth}", "ok", failure)


@register_suite("s_join_atoms")
def s_join_atoms_suite(ctx: SuiteContext) -> None:
    """The join of the atoms above ``R^delta`` is ``p^(-1) R^delta``."""
    for params in (BeamParams(2, 1), BeamParams(2, 2), BeamParams(3, 2), BeamParams(2, 3)):
        ctx.cover(str(params))
        ctx.holds(f"{params} join of atoms", s_join_atoms(params))

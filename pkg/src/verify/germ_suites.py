"""Suites checked on germs: built-ins and structure germs of small solutions."""

import logging
from functools import lru_cache
from typing import List

from src.errors import GermError
from src.germ import (
    Germ,
    GermFraction,
    IntervalAnalysis,
    Word,
    beam_decompose,
    conjugation_is_automorphism,
    embed,
    fraction_deg,
    fraction_inverse,
    fraction_leq,
    fraction_meet,
    fraction_mul,
    frozen_power,
    interval_analysis,
    permutation_under_right_mult,
    rigidity_map,
    scaffold,
    semibeam_decompose,
    semibeam_unique,
)
from src.latmod import (
    BeamParams,
    conjugation_is_identity,
    frozen,
    join_all,
    lower_cover_rad,
    rad,
    random_plattice,
    soc,
    upper_covers,
)
from src.verify.context import SuiteContext
from src.verify.corpus import (
    builtin_germ,
    generator_words,
    germ_corpus,
    random_fraction,
    random_word,
)
from src.verify.registry import register_suite
from src.ybe import (
    convert,
    l_algebra_from_cycle_set,
    l_algebra_from_germ,
    structure_generators,
)

logger = logging.getLogger(__name__)

# germ name -> degree bound for the semibeam uniqueness search
SEMIBEAM_BOUNDS = {"klein": 4, "free_abelian_2": 4, "z_times_klein": 3}

RIGIDITY_GERMS = ("klein", "free_abelian_2")
ARITHMETIC_GERMS = ("klein", "free_abelian_2", "z_times_klein")

# Longest word of simples fed to the normal form suites
WORD_LENGTH = 4

# Degree bound for meets recomputed from common lower bounds
GLB_DEGREE = 4


def _structure_n(ctx: SuiteContext) -> int:
    return min(3, ctx.config.max_structure_n)


@lru_cache(maxsize=None)
def _analysis(germ: Germ) -> IntervalAnalysis:
    return interval_analysis(germ)


@register_suite("center_arrow")
def center_arrow(ctx: SuiteContext) -> None:
    """The center of ``[Δ, e]`` is closed under the germ arrow."""
    n = _structure_n(ctx)
    ctx.cover(f"built-in germs and structure germs with n <= {n}")
    for name, germ, _ in germ_corpus(n):
        ctx.holds(f"{name} arrow closed", _analysis(germ).checks["arrow_closed"])


@register_suite("ULM")
def ulm(ctx: SuiteContext) -> None:
    """``M(a) = 0`` exactly on the center and ``U(∂a) = L(a)``."""
    n = _structure_n(ctx)
    ctx.cover(f"built-in germs and structure germs with n <= {n}")
    for name, germ, _ in germ_corpus(n):
        checks = _analysis(germ).checks
        ctx.holds(f"{name} central iff M = 0", checks["central_iff_m_zero"])
        ctx.holds(f"{name} U of complement", checks["u_of_complement"])


@register_suite("duality")
def duality(ctx: SuiteContext) -> None:
    """``D`` is a duality of the L-algebra of central dual atoms and matches ``x·x``."""
    n = _structure_n(ctx)
    ctx.cover(f"built-in germs and every solution with n <= {n}")
    entries = germ_corpus(n, representatives_only=False)
    for name, germ, c in entries:
        checks = _analysis(germ).checks
        for check in (
            "duality_permutes_generators",
            "duality_preserves_degree",
            "duality_preserves_u",
            "duality_axiom",
        ):
            ctx.holds(f"{name} {check}", checks[check])
        for z in germ.central_dual_atoms:
            try:
                frozen_power(germ, z, 3)
                ok = True
            except GermError as e:
                logger.debug(f"{name}: {e}")
                ok = False
            ctx.holds(f"{name} frozen power of {z}", ok)
        if c is None:
            continue
        recovered = l_algebra_from_germ(germ, structure_generators(c.n))
        ctx.check(f"{name} L-algebra", l_algebra_from_cycle_set(c), recovered)
        ctx.check(f"{name} cycle set round trip", c, convert(recovered).cycle_set)


@register_suite("scaffold")
def scaffold_suite(ctx: SuiteContext) -> None:
    """The scaffold generated by the central dual atoms is distributive."""
    depth = min(3, ctx.config.max_degree)
    for name in ("free_abelian_2", "klein", "z_times_klein"):
        germ = builtin_germ(name)
        ctx.cover(f"{name} up to degree {depth}")
        sc = scaffold(germ, depth, ctx.config.max_enum)
        ctx.holds(f"{name} distributive", sc.distributive)
    ctx.check(
        "z_times_klein generators", 3, len(builtin_germ("z_times_klein").central_dual_atoms)
    )


@register_suite("semibeam_product")
def semibeam_product(ctx: SuiteContext) -> None:
    """Cone elements decompose uniquely along the semibeams; fractions along the beams."""
    for name, bound in SEMIBEAM_BOUNDS.items():
        germ = builtin_germ(name)
        bound = min(bound, ctx.config.max_degree)
        ctx.cover(f"{name} cone up to degree {bound}")
        for g in germ.elements_up_to(bound, ctx.config.max_enum):
            ctx.holds(f"{name} {g} meet", semibeam_decompose(germ, g).meet_ok)
            ctx.check(f"{name} {g} unique", [], semibeam_unique(germ, g, ctx.config.max_enum))

    samples = max(1, ctx.config.random_cases // 10)
    for name in RIGIDITY_GERMS:
        germ = builtin_germ(name)
        ctx.cover(f"{name}: {samples} random fractions")
        for _ in range(samples):
            f = random_fraction(ctx.rng, germ)
            dec = beam_decompose(germ, f)
            ctx.holds(f"{name} {f} meet", dec.meet_ok)
            ctx.holds(f"{name} {f} consistent across shifts", dec.consistent)


@register_suite("rigidity")
def rigidity(ctx: SuiteContext) -> None:
    """Right multiplication permutes the semibeams by order isomorphisms."""
    bound = min(3, ctx.config.max_degree)
    for name in RIGIDITY_GERMS:
        germ = builtin_germ(name)
        ctx.cover(f"{name} cone up to degree {bound}")
        for g in germ.elements_up_to(bound, ctx.config.max_enum):
            try:
                perm = permutation_under_right_mult(germ, g)
            except GermError as e:
                ctx.check(f"{name} {g} permutation", "permutation", str(e))
                continue
            ctx.check(f"{name} {g} permutation", sorted(perm), sorted(perm.values()))
            for z in germ.central_dual_atoms:
                rm = rigidity_map(germ, g, z)
                ctx.check(f"{name} {g} {z} target", perm[z], rm.target)
                ctx.holds(f"{name} {g} {z} injective", rm.injective)
                ctx.holds(f"{name} {g} {z} order preserving", rm.order_preserving)


@register_suite("soc_rad")
def soc_rad(ctx: SuiteContext) -> None:
    """``Rad(A) = pA`` and ``Soc(A) = p^(-1)A``; in germs ``Soc(Φ_n(z)) = Φ_(n-1)(z)``
    and ``Rad_[g,e](e)`` is the last right normal factor of ``g``.
    """
    samples = max(1, ctx.config.random_cases // 10)
    for params in (BeamParams(2, 2), BeamParams(3, 2), BeamParams(2, 3)):
        ctx.cover(f"{params}: {samples} random lattices")
        for _ in range(samples):
            a = random_plattice(ctx.rng, params, max_exp=2)
            ctx.check(f"{params} {a} rad", rad(a), lower_cover_rad(a))
            ctx.check(f"{params} {a} soc", soc(a), join_all(upper_covers(a)))
        for n in range(1, 5):
            ctx.check(f"{params} Soc(Φ_{n})", frozen(params, n - 1), soc(frozen(params, n)))

    for name in ARITHMETIC_GERMS:
        germ = builtin_germ(name)
        ctx.cover(f"{name}: frozen powers up to 4")
        for z in germ.central_dual_atoms:
            for n in range(1, 5):
                word = frozen_power(germ, z, n)
                ctx.check(f"{name} Soc(Φ_{n}({z}))", frozen_power(germ, z, n - 1), germ.soc(word))
        for g in germ.elements_up_to(min(3, ctx.config.max_degree)):
            covers = germ.upper_covers(g)
            if covers:
                ctx.check(f"{name} {g} soc", germ.join_all(covers), germ.soc(g))
            ctx.check(f"{name} {g} rad", germ.interval_rad(g), germ.rad_top(g))


def _normal_form_germs(ctx: SuiteContext):
    n = _structure_n(ctx)
    ctx.cover(f"built-in germs and every solution with n <= {n}")
    return germ_corpus(n, representatives_only=False)


@register_suite("normal_form")
def normal_form(ctx: SuiteContext) -> None:
    """Right normal forms are right-maximal, associative and given by the closed formula."""
    for name, germ, _ in _normal_form_germs(ctx):
        for word in generator_words(germ, WORD_LENGTH):
            nf = germ.right_normal_form(word)
            ctx.holds(
                f"{name} {word} right maximal",
                all(germ.gjoin(a, germ.complement(b)) == germ.e for a, b in zip(nf, nf[1:])),
            )
            ctx.check(f"{name} {word} closed formula", nf, germ.closed_formula_normal_form(nf))
            for i in range(1, len(word)):
                split = germ.mul(germ.right_normal_form(word[:i]), germ.right_normal_form(word[i:]))
                ctx.check(f"{name} {word} split at {i}", nf, split)


@register_suite("left_right")
def left_right(ctx: SuiteContext) -> None:
    """Left and right normal forms have mirrored degree sequences."""
    for name, germ, _ in _normal_form_germs(ctx):
        for word in generator_words(germ, WORD_LENGTH):
            rnf = germ.right_normal_form(word)
            lnf = germ.left_normal_form(word)
            ctx.check(
                f"{name} {word} degrees",
                [germ.degree(x) for x in reversed(rnf)],
                [germ.degree(x) for x in lnf],
            )


@register_suite("homog_left")
def homog_left(ctx: SuiteContext) -> None:
    """A homogeneous right normal form is left normal as well."""
    for name, germ, _ in _normal_form_germs(ctx):
        for word in generator_words(germ, WORD_LENGTH):
            rnf = germ.right_normal_form(word)
            if len({germ.degree(x) for x in rnf}) == 1:
                ctx.check(f"{name} {word} left normal", rnf, germ.left_normal_form(word))


@register_suite("fractions")
def fractions(ctx: SuiteContext) -> None:
    """Left fractions form a group whose meet is right invariant."""
    samples = max(1, ctx.config.random_cases // 10)
    one = GermFraction()
    for name in ARITHMETIC_GERMS:
        germ = builtin_germ(name)
        ctx.cover(f"{name}: {samples} random triples")
        for _ in range(samples):
            f1, f2, f3 = (random_fraction(ctx.rng, germ) for _ in range(3))
            ctx.check(f"{name} {f1} inverse", one, fraction_mul(germ, f1, fraction_inverse(f1)))
            ctx.check(
                f"{name} {f1}, {f2}, {f3} associative",
                fraction_mul(germ, fraction_mul(germ, f1, f2), f3),
                fraction_mul(germ, f1, fraction_mul(germ, f2, f3)),
            )
            ctx.check(
                f"{name} {f1}, {f2}, {f3} right invariant meet",
                fraction_mul(germ, fraction_meet(germ, f1, f2), f3),
                fraction_meet(germ, fraction_mul(germ, f1, f3), fraction_mul(germ, f2, f3)),
            )
            g = random_word(ctx.rng, germ)
            ctx.holds(f"{name} {g} in cone", fraction_leq(germ, embed(germ, g), one))


@register_suite("conj_auto")
def conj_auto(ctx: SuiteContext) -> None:
    """Conjugation by the strong unit is an automorphism of the interval."""
    samples = max(1, ctx.config.random_cases // 10)
    for params in (BeamParams(2, 2), BeamParams(3, 3)):
        ctx.cover(f"{params}: {samples} random lattices")
        for _ in range(samples):
            a = random_plattice(ctx.rng, params)
            ctx.holds(f"{params} {a} conjugation", conjugation_is_identity(a))
    n = _structure_n(ctx)
    ctx.cover(f"built-in germs and structure germs with n <= {n}")
    for name, germ, _ in germ_corpus(n):
        ctx.holds(f"{name} conjugation", conjugation_is_automorphism(germ))


def _glb_by_enumeration(germ: Germ, cone: List[Word], x: Word, y: Word) -> List[Word]:
    """Common lower bounds ``c·x = c'·y`` of least degree.

    ``deg(x ∧ y) ≤ deg(x) + deg(y)``, so the left factors come from ``cone`` cut at
    ``deg(y)`` and ``deg(x)``. A lattice has exactly one such element.
    """
    below_x = {germ.mul(c, x) for c in cone if germ.deg(c) <= germ.deg(y)}
    below_y = {germ.mul(c, y) for c in cone if germ.deg(c) <= germ.deg(x)}
    common = below_x & below_y
    least = min(germ.deg(w) for w in common)
    return sorted(w for w in common if germ.deg(w) == least)


def _triples(ctx: SuiteContext, germ: Germ) -> List:
    return [
        tuple(random_word(ctx.rng, germ) for _ in range(3))
        for _ in range(ctx.config.random_cases)
    ]


@register_suite("arrow_identities")
def arrow_identities(ctx: SuiteContext) -> None:
    """The arrow identities of a right ℓ-group on random cone triples.

    Meets are also compared with the greatest common lower bound found by
    enumerating left multiples, for the first pairs of degree at most
    ``GLB_DEGREE``.
    """
    glb_pairs = max(1, ctx.config.random_cases // 10)
    for name in ARITHMETIC_GERMS:
        germ = builtin_germ(name)
        ctx.cover(f"{name}: {ctx.config.random_cases} random triples")
        cone = germ.elements_up_to(GLB_DEGREE, ctx.config.max_enum)
        compared = 0
        for k, (x, y, z) in enumerate(_triples(ctx, germ)):
            case = f"{name} #{k} x={x} y={y} z={z}"
            arrow, meet, mul = germ.arrow, germ.meet, germ.mul
            x_meet_y = meet(x, y)
            if compared < glb_pairs and max(germ.deg(x), germ.deg(y)) <= GLB_DEGREE:
                compared += 1
                glb = _glb_by_enumeration(germ, cone, x, y)
                ctx.check(f"{case} meet by enumeration", [x_meet_y], glb)
            ctx.check(f"{case} x → x", (), arrow(x, x))
            ctx.check(f"{case} x → e", (), arrow(x, ()))
            ctx.check(f"{case} e → x", x, arrow((), x))
            ctx.holds(
                f"{case} meet is a lower bound",
                germ.join(x_meet_y, x) == x and germ.join(x_meet_y, y) == y,
            )
            ctx.check(
                f"{case} meet on the left",
                arrow(arrow(x, y), arrow(x, z)),
                arrow(x_meet_y, z),
            )
            ctx.check(
                f"{case} meet on the right",
                meet(arrow(x, y), arrow(x, z)),
                arrow(x, meet(y, z)),
            )
            ctx.check(f"{case} product on the left", arrow(x, arrow(y, z)), arrow(mul(x, y), z))
            ctx.check(
                f"{case} product on the right",
                mul(arrow(arrow(z, x), y), arrow(x, z)),
                arrow(x, mul(y, z)),
            )
            ctx.check(
                f"{case} order", germ.join(x, y) == germ.right_normal_form(y), arrow(x, y) == ()
            )


@register_suite("deg_homomorphism")
def deg_homomorphism(ctx: SuiteContext) -> None:
    """``deg`` is a group homomorphism on fractions."""
    pairs = max(1, ctx.config.random_cases // 2)
    for name in RIGIDITY_GERMS:
        germ = builtin_germ(name)
        ctx.cover(f"{name}: {pairs} random pairs")
        for _ in range(pairs):
            f1, f2 = random_fraction(ctx.rng, germ), random_fraction(ctx.rng, germ)
            d1, d2 = fraction_deg(germ, f1), fraction_deg(germ, f2)
            product = fraction_mul(germ, f1, f2)
            ctx.check(f"{name} deg({f1}·{f2})", d1 + d2, fraction_deg(germ, product))
            ctx.check(f"{name} deg({f1}⁻¹)", -d1, fraction_deg(germ, fraction_inverse(f1)))


@register_suite("germ_meet_irred")
def germ_meet_irred(ctx: SuiteContext) -> None:
    """Below ``e`` in a germ cone, meet irreducible elements are the 1-homogeneous dual chains."""
    for name in ("free_abelian_2", "klein"):
        germ = builtin_germ(name)
        bound = min(4, ctx.config.max_degree)
        ctx.cover(f"{name} cone up to degree {bound}")
        for g in germ.elements_up_to(bound, ctx.config.max_enum)[1:]:
            data = germ.degree_data(g)
            ctx.check(f"{name} {g} 1-homogeneous", data.meet_irreducible, data.one_homogeneous)
            ctx.check(f"{name} {g} dual chain", data.meet_irreducible, data.dual_chain)

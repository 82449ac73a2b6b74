"""Center of the germ interval, the duality ``D``, frozen powers and the scaffold."""

import itertools
import logging
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from src.errors import GermError, NotCentralDualAtom, TooLarge
from src.finlat import FiniteLattice
from src.germ.cone import Germ, Word

logger = logging.getLogger(__name__)


class IntervalAnalysis(BaseModel):
    """Result of :func:`interval_analysis`.

    Attributes:
        lattice: ``[Δ, e]`` with element labels.
        center: Central elements.
        dual_atoms: ``X(Cent)``, the generators ``z_1, ..., z_k`` of the beams.
        ulm: Element mapped to ``(U, L, M)``.
        duality: ``D`` on the center.
        checks: Name of each structural check mapped to its outcome.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, populate_by_name=True)

    lattice: FiniteLattice
    center: List[str]
    dual_atoms: List[str] = Field(alias="dualAtoms")
    ulm: Dict[str, Tuple[int, int, int]]
    duality: Dict[str, str]
    checks: Dict[str, bool] = Field(default_factory=dict)

    @property
    def duality_ok(self) -> bool:
        return all(self.checks.values())


def ulm_counts(germ: Germ, a: str) -> Tuple[int, int, int]:
    """``U(a) = #{i : a ∨ z_i = e}``, ``L(a) = #{i : a ∨ z_i = z_i}`` and ``M = k − U − L``."""
    zs = germ.central_dual_atoms
    u = sum(1 for z in zs if germ.gjoin(a, z) == germ.e)
    lower = sum(1 for z in zs if germ.gjoin(a, z) == z)
    return u, lower, len(zs) - u - lower


def conjugation(germ: Germ) -> Dict[str, str]:
    """``a ↦ a″`` with ``aΔ = Δa″``."""
    return {a: germ.conjugate(a) for a in germ.names}


def conjugation_is_automorphism(germ: Germ) -> bool:
    conj = conjugation(germ)
    if sorted(conj.values()) != sorted(germ.names):
        return False
    return all(
        germ.gleq(a, b) == germ.gleq(conj[a], conj[b]) for a in germ.names for b in germ.names
    )


def interval_analysis(germ: Germ) -> IntervalAnalysis:
    """Center, ``U/L/M`` counts and the duality of ``[Δ, e]``, with their checks.

    The checks are: ``M(a) = 0`` exactly on the center, ``U(∂a) = L(a)``, ``D``
    permutes ``X(Cent)`` preserving degree and ``U``, the duality axiom
    ``D(x → y) = (y → x) → D(y)`` on distinct generators, the center is closed
    under the germ arrow, and ``a ↦ a″`` is a lattice automorphism.
    """
    central = germ.center
    central_set = set(central)
    zs = germ.central_dual_atoms
    ulm = {a: ulm_counts(germ, a) for a in germ.names}
    duality = germ.duality

    checks = {
        "central_iff_m_zero": all((ulm[a][2] == 0) == (a in central_set) for a in germ.names),
        "u_of_complement": all(
            ulm[germ.complement(a)][0] == ulm[a][1] for a in germ.names
        ),
        "duality_permutes_generators": sorted(duality[z] for z in zs) == sorted(zs),
        "duality_preserves_degree": all(
            germ.degree(duality[z]) == germ.degree(z) for z in zs
        ),
        "duality_preserves_u": all(ulm[duality[a]][0] == ulm[a][0] for a in central),
        "duality_axiom": all(
            duality[germ.garrow(x, y)] == germ.garrow(germ.garrow(y, x), duality[y])
            for x in zs
            for y in zs
            if x != y
        ),
        "arrow_closed": all(
            germ.garrow(a, b) in central_set for a in central for b in central
        ),
        "conjugation_automorphism": conjugation_is_automorphism(germ),
    }
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        logger.warning(f"Interval analysis checks failed: {', '.join(failed)}")
    return IntervalAnalysis(
        lattice=germ.lattice,
        center=central,
        dual_atoms=zs,
        ulm=ulm,
        duality=duality,
        checks=checks,
    )


def frozen_power(germ: Germ, z: str, n: int) -> Word:
    """``Φ_n(z) = D^(n−1)(z) ⋯ D(z) z``, verified right normal.

    Raises:
        NotCentralDualAtom: If ``z`` is not in ``X(Cent)``.
        GermError: If the word is not right normal, has the wrong degree or its
            socle is not ``Φ_(n−1)(z)``.
    """
    if z not in germ.central_dual_atoms:
        raise NotCentralDualAtom(f"{z} is not a central dual atom")
    if n < 0:
        raise GermError(f"frozen power exponent must be non-negative, got {n}")
    factors = [z]
    while len(factors) < n:
        factors.insert(0, germ.duality[factors[0]])
    word = tuple(factors[:n])

    if germ.right_normal_form(word) != word:
        raise GermError(f"Φ_{n}({z}) = {word} is not right normal")
    if germ.deg(word) != n * germ.degree(z):
        raise GermError(f"Φ_{n}({z}) has degree {germ.deg(word)}, expected {n * germ.degree(z)}")
    if n >= 1 and germ.soc(word) != word[1:]:
        raise GermError(f"Soc(Φ_{n}({z})) = {germ.soc(word)} is not Φ_{n - 1}({z})")
    return word


class Scaffold(BaseModel):
    elements: List[Word]
    generators: List[str]
    distributive: bool


def scaffold(germ: Germ, depth_bound: int, max_enum: int = 200_000) -> Scaffold:
    """Close ``{e} ∪ X(Cent)`` under products, meets and joins up to ``depth_bound``.

    Returns:
        Scaffold: The generated elements and whether meet distributes over join on
        them (triple check with the cone operations).
    """
    gens = germ.central_dual_atoms
    elements = {()} | {(z,) for z in gens if germ.degree(z) <= depth_bound}
    changed = True
    while changed:
        changed = False
        current = sorted(elements)
        for a, b in itertools.product(current, repeat=2):
            for c in (germ.mul(a, b), germ.meet(a, b), germ.join(a, b)):
                if germ.deg(c) <= depth_bound and c not in elements:
                    elements.add(c)
                    changed = True
                    if len(elements) > max_enum:
                        raise TooLarge(f"scaffold exceeds {max_enum} elements")

    ordered = sorted(elements, key=lambda w: (germ.deg(w), w))
    distributive = all(
        germ.meet(a, germ.join(b, c)) == germ.join(germ.meet(a, b), germ.meet(a, c))
        for a, b, c in itertools.product(ordered, repeat=3)
    )
    logger.info(f"Scaffold up to degree {depth_bound} has {len(ordered)} elements")
    return Scaffold(elements=ordered, generators=gens, distributive=distributive)


def frozen_table(germ: Germ, n: int) -> Dict[str, Word]:
    """``Φ_n(z)`` for every generator ``z``."""
    return {z: frozen_power(germ, z, n) for z in germ.central_dual_atoms}


def analysis_summary(analysis: IntervalAnalysis, germ: Optional[Germ] = None) -> Dict[str, object]:
    """JSON-ready view of an :class:`IntervalAnalysis`."""
    data: Dict[str, object] = {
        "center": analysis.center,
        "dualAtoms": analysis.dual_atoms,
        "ULM": {a: list(v) for a, v in analysis.ulm.items()},
        "D": analysis.duality,
        "checks": analysis.checks,
        "dualityOK": analysis.duality_ok,
    }
    if germ is not None:
        data["conjugation"] = conjugation(germ)
    return data

"""Decomposition of cone and group elements along the beams ``z_1, ..., z_k``.

For ``g`` in the cone, ``g = ⋀_i (g ∨ Φ_m(z_i))`` with ``m = max(λ(g), 1)``;
each component lies in the semibeam of ``z_i``. Right multiplication by ``h``
permutes the semibeams, and a group element ``f`` is decomposed after shifting
it into the cone with ``Δ^n``.
"""

import itertools
import logging
from collections import deque
from typing import Dict, List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field
from sympy.combinatorics import Permutation

from src.errors import GermError, TooLarge
from src.germ.center import frozen_power
from src.germ.cone import Germ, Word, format_word
from src.germ.fraction import (
    GermFraction,
    embed,
    fraction_meet,
    fraction_mul,
    reduce_fraction,
    s_power,
)

logger = logging.getLogger(__name__)


class SemibeamDecomposition(BaseModel):
    level: int
    generators: List[str]
    components: List[Word]
    meet_ok: bool


def _level(germ: Germ, *words: Sequence[str]) -> int:
    return max([1] + [len(germ.right_normal_form(w)) for w in words])


def components_at(germ: Germ, g: Sequence[str], m: int) -> List[Word]:
    """``g ∨ Φ_m(z_i)`` for every generator ``z_i``."""
    return [germ.join(g, frozen_power(germ, z, m)) for z in germ.central_dual_atoms]


def semibeam_decompose(germ: Germ, g: Sequence[str]) -> SemibeamDecomposition:
    """Components ``c_i = g ∨ Φ_m(z_i)`` with ``m = max(λ(g), 1)``, and ``⋀ c_i = g``."""
    g = germ.right_normal_form(g)
    m = _level(germ, g)
    components = components_at(germ, g, m)
    meet_ok = germ.meet_all(components) == g
    if not meet_ok:
        logger.error(f"Semibeam components of {g} do not meet back to it")
    return SemibeamDecomposition(
        level=m,
        generators=germ.central_dual_atoms,
        components=components,
        meet_ok=meet_ok,
    )


def _differing_slots(germ: Germ, lower: Word, upper: Word) -> List[int]:
    m = _level(germ, lower, upper)
    a = components_at(germ, lower, m)
    b = components_at(germ, upper, m)
    return [i for i in range(len(a)) if a[i] != b[i]]


def permutation_under_right_mult(germ: Germ, h: Sequence[str]) -> Dict[str, str]:
    """The permutation ``π_h`` of the generators induced by right multiplication.

    Slot ``i`` goes to the unique slot in which ``z_i·h`` and ``h`` differ.

    Raises:
        GermError: If some ``z_i·h`` differs from ``h`` in more or fewer than one
            slot, or the slots do not form a permutation.
    """
    h = germ.right_normal_form(h)
    zs = germ.central_dual_atoms
    image: List[int] = []
    for z in zs:
        slots = _differing_slots(germ, germ.mul((z,), h), h)
        if len(slots) != 1:
            raise GermError(
                f"{z}·h differs from h = {h} in slots {slots}, expected exactly one"
            )
        image.append(slots[0])
    if sorted(image) != list(range(len(zs))):
        raise GermError(f"right multiplication by {h} does not permute the beams: {image}")
    perm = Permutation(image)
    logger.debug(f"Right multiplication by {h} permutes the beams by {perm.cyclic_form}")
    return {zs[i]: zs[perm(i)] for i in range(len(zs))}


def semibeam_elements(germ: Germ, z: str, depth: int, max_enum: int = 200_000) -> List[Word]:
    """The truncated semibeam ``[Φ_depth(z), e]``."""
    return _upset(germ, frozen_power(germ, z, depth), max_enum)


class RigidityMap(BaseModel):
    source: str
    target: str
    mapping: Dict[str, str] = Field(default_factory=dict)
    order_preserving: bool
    injective: bool


def rigidity_map(germ: Germ, g: Sequence[str], z: str, depth: int = 2) -> RigidityMap:
    """``c ↦ (c·g) ∨ Φ_M(z_π(i))`` on the truncated semibeam of ``z``.

    The map must be injective and reflect the order in both directions.
    """
    g = germ.right_normal_form(g)
    target = permutation_under_right_mult(germ, g)[z]
    source_elements = semibeam_elements(germ, z, depth)
    products = {c: germ.mul(c, g) for c in source_elements}
    m = _level(germ, *products.values())
    phi = frozen_power(germ, target, m)
    image = {c: germ.join(products[c], phi) for c in source_elements}

    injective = len(set(image.values())) == len(image)
    order_preserving = all(
        germ.leq(a, b) == germ.leq(image[a], image[b])
        for a in source_elements
        for b in source_elements
    )
    return RigidityMap(
        source=z,
        target=target,
        mapping={format_word(c): format_word(v) for c, v in image.items()},
        order_preserving=order_preserving,
        injective=injective,
    )


def semibeam_unique(germ: Germ, g: Sequence[str], max_enum: int = 100_000) -> List[List[Word]]:
    """Other tuples ``(c'_i)`` with ``c'_i`` in the semibeam of ``z_i`` and ``⋀ c'_i = g``.

    Any such ``c'_i`` lies above ``c_i = g ∨ Φ_m(z_i)``, so the search runs over
    ``[c_1, e] × ... × [c_k, e]``. An empty result means the decomposition is unique.
    """
    dec = semibeam_decompose(germ, g)
    g = germ.right_normal_form(g)
    ranges = []
    total = 1
    for c in dec.components:
        up = _upset(germ, c, max_enum)
        ranges.append(up)
        total *= len(up)
        if total > max_enum:
            raise TooLarge(f"semibeam search for {g} exceeds {max_enum} tuples")
    alternatives = []
    for combo in itertools.product(*ranges):
        if list(combo) != dec.components and germ.meet_all(combo) == g:
            alternatives.append(list(combo))
    return alternatives


def _upset(germ: Germ, c: Word, max_enum: int) -> List[Word]:
    seen = {c}
    queue = deque([c])
    while queue:
        x = queue.popleft()
        for y in germ.upper_covers(x):
            if y not in seen:
                seen.add(y)
                if len(seen) > max_enum:
                    raise TooLarge(f"upper interval of {c} exceeds {max_enum} elements")
                queue.append(y)
    return sorted(seen, key=lambda w: (germ.deg(w), w))


class BeamDecomposition(BaseModel):
    """Result of :func:`beam_decompose`.

    Attributes:
        shift: Least ``n`` with ``f·Δ^n`` in the cone.
        internal: ``(g ∨ Φ_m(z_i))·s^n``; their meet is ``f``.
        coordinates: ``((g ∨ Φ_m(z_i)) ∧ ⋀_(j≠i) Φ_n(z_j))·s^n``, independent of ``n``.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    shift: int
    generators: List[str]
    internal: List[GermFraction]
    coordinates: List[GermFraction]
    meet_ok: bool
    consistent: bool


def minimal_shift(germ: Germ, f: GermFraction) -> int:
    for n in range(len(f.den) + 1):
        if not fraction_mul(germ, f, s_power(germ, -n)).den:
            return n
    raise GermError(f"{f} is not below s^{len(f.den)}")


def _decompose_at(
    germ: Germ, f: GermFraction, n: int
) -> Tuple[List[GermFraction], List[GermFraction]]:
    g = fraction_mul(germ, f, s_power(germ, -n)).num
    m = _level(germ, g)
    zs = germ.central_dual_atoms
    comps = components_at(germ, g, m)
    back = s_power(germ, n)
    internal = [fraction_mul(germ, embed(germ, c), back) for c in comps]
    coordinates = []
    for i, c in enumerate(comps):
        others = [frozen_power(germ, zs[j], n) for j in range(len(zs)) if j != i]
        coordinate = germ.meet_all([c] + others)
        coordinates.append(fraction_mul(germ, embed(germ, coordinate), back))
    return internal, coordinates


def beam_decompose(germ: Germ, f: GermFraction) -> BeamDecomposition:
    """Beam components of a group element ``f``.

    ``f`` is shifted into the cone with the least ``n`` such that ``f·Δ^n`` is
    negative; the coordinates are recomputed at ``n + 1`` and must agree.
    """
    f = reduce_fraction(germ, f.den, f.num)
    n = minimal_shift(germ, f)
    internal, coordinates = _decompose_at(germ, f, n)
    _, coordinates_next = _decompose_at(germ, f, n + 1)

    meet = internal[0]
    for item in internal[1:]:
        meet = fraction_meet(germ, meet, item)
    meet_ok = meet == f
    consistent = coordinates == coordinates_next
    if not (meet_ok and consistent):
        logger.warning(f"Beam decomposition of {f} failed its checks")
    return BeamDecomposition(
        shift=n,
        generators=germ.central_dual_atoms,
        internal=internal,
        coordinates=coordinates,
        meet_ok=meet_ok,
        consistent=consistent,
    )

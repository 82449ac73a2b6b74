"""Lattice-theoretic predicates and constructions on :class:`FiniteLattice`.

Everything here is exhaustive over the finite lattice: modularity and
distributivity by the defining identities, the center by brute force over
element/complement pairs, primarity by searching perspectivities in every
interval.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field

from src.errors import LatticeError, NotModular, TooLarge
from src.finlat.lattice import FiniteLattice, iter_bits

logger = logging.getLogger(__name__)


class Classification(BaseModel):
    """Result of :func:`classify`."""

    modular: bool
    distributive: bool
    geometric: bool
    length: int
    atoms: List[int] = Field(default_factory=list)
    dual_atoms: List[int] = Field(default_factory=list, alias="dualAtoms")
    meet_irreducibles: List[int] = Field(default_factory=list, alias="meetIrreducibles")

    model_config = {"populate_by_name": True}


class Decomposition(BaseModel):
    """A factorization of a lattice into sublattices.

    Attributes:
        factors: Sorted id sets, one per factor.
        witness: Element id mapped to its tuple of factor components.
        generators: The central dual atoms ``z`` with factor ``z↑`` (internal case).
        internal: True when every element is the meet of its components.
        irreducible: Per factor, whether it has trivial center on its own.
    """

    factors: List[List[int]]
    witness: Dict[int, Tuple[int, ...]]
    generators: List[int] = Field(default_factory=list)
    internal: bool = True
    irreducible: List[bool] = Field(default_factory=list)


class FrameCheck(BaseModel):
    """Result of :func:`dual_frame_check`."""

    independent: bool
    spanning: bool
    reflected: List[int] = Field(default_factory=list)
    reflection_ok: Optional[bool] = Field(default=None, alias="reflectionOK")

    model_config = {"populate_by_name": True}


def is_geometric(lattice: FiniteLattice) -> bool:
    """Modular and atomistic; non-modular lattices are reported as not geometric."""
    if not lattice.is_modular:
        return False
    atoms = lattice.atoms
    for x in lattice.elements:
        below = [a for a in atoms if lattice.leq(a, x)]
        if lattice.join_all(below) != x:
            return False
    return True


def meet_irreducibles(lattice: FiniteLattice) -> List[int]:
    return [x for x in lattice.elements if len(lattice.upper_covers(x)) == 1]


def classify(lattice: FiniteLattice) -> Classification:
    """Classify a lattice: modular, distributive, geometric, length and special elements."""
    return Classification(
        modular=lattice.is_modular,
        distributive=lattice.is_distributive,
        geometric=is_geometric(lattice),
        length=lattice.length,
        atoms=lattice.atoms,
        dual_atoms=lattice.dual_atoms,
        meet_irreducibles=meet_irreducibles(lattice),
    )


def is_modular_by_diamonds(lattice: FiniteLattice) -> bool:
    """Diamond criterion: ``y ↦ y ∧ b`` and ``x ↦ x ∨ a`` are inverse bijections
    between ``[a, a ∨ b]`` and ``[a ∧ b, b]`` for every pair ``(a, b)``."""
    for a in lattice.elements:
        for b in lattice.elements:
            lo, hi = lattice.meet(a, b), lattice.join(a, b)
            for y in lattice.between(a, hi):
                if lattice.join(lattice.meet(y, b), a) != y:
                    return False
            for x in lattice.between(lo, b):
                if lattice.meet(lattice.join(x, a), b) != x:
                    return False
    return True


def _splits(lattice: FiniteLattice, z: int, zc: int) -> bool:
    """Whether ``x ↦ (x ∨ z, x ∨ z')`` is a bijection onto ``[z,1] × [z',1]`` with
    inverse ``(u, v) ↦ u ∧ v``."""
    meet, join = lattice.meet, lattice.join
    for x in lattice.elements:
        if meet(join(x, z), join(x, zc)) != x:
            return False
    for u in lattice.upset(z):
        for v in lattice.upset(zc):
            w = meet(u, v)
            if join(w, z) != u or join(w, zc) != v:
                return False
    return True


def center(lattice: FiniteLattice) -> List[int]:
    """The center: elements inducing a direct decomposition, as a sorted id list."""
    result = []
    for z in lattice.elements:
        complements = [
            zc
            for zc in lattice.elements
            if lattice.meet(z, zc) == lattice.bottom and lattice.join(z, zc) == lattice.top
        ]
        if any(_splits(lattice, z, zc) for zc in complements):
            result.append(z)
    _assert_boolean(lattice, result)
    return result


def _assert_boolean(lattice: FiniteLattice, members: Sequence[int]) -> None:
    member_set = set(members)
    for a in members:
        for b in members:
            if lattice.meet(a, b) not in member_set or lattice.join(a, b) not in member_set:
                raise LatticeError(f"center not closed under meet/join at {a}, {b}")
        if not any(
            lattice.meet(a, c) == lattice.bottom and lattice.join(a, c) == lattice.top
            for c in members
        ):
            raise LatticeError(f"central element {a} has no central complement")
    for a in members:
        for b in members:
            for c in members:
                lhs = lattice.meet(a, lattice.join(b, c))
                rhs = lattice.join(lattice.meet(a, b), lattice.meet(a, c))
                if lhs != rhs:
                    raise LatticeError(f"center is not distributive at {a}, {b}, {c}")


def center_dual_atoms(lattice: FiniteLattice, central: Optional[Sequence[int]] = None) -> List[int]:
    """``X(Cent(L))``: the maximal central elements below the top."""
    central = list(center(lattice) if central is None else central)
    below_top = [z for z in central if z != lattice.top]
    return sorted(
        z for z in below_top if not any(lattice.lt(z, w) for w in below_top)
    )


def decompose(lattice: FiniteLattice) -> Decomposition:
    """Internal decomposition into the factors ``z↑`` for ``z`` in ``X(Cent(L))``."""
    zs = center_dual_atoms(lattice)
    if not zs:
        every = list(lattice.elements)
        return Decomposition(
            factors=[every],
            witness={x: (x,) for x in every},
            irreducible=[True],
        )

    factors = [lattice.upset(z) for z in zs]
    witness = {x: tuple(lattice.join(x, z) for z in zs) for x in lattice.elements}
    for x, parts in witness.items():
        if lattice.meet_all(parts) != x:
            raise LatticeError(f"element {x} is not the meet of its components {parts}")
    size = 1
    for factor in factors:
        size *= len(factor)
    if size != lattice.n or len(set(witness.values())) != lattice.n:
        raise LatticeError("component map is not a bijection onto the product of factors")

    irreducible = []
    for z in zs:
        sub, _ = lattice.interval(z, lattice.top)
        irreducible.append(len(center(sub)) <= 2)
    logger.debug(f"Decomposed {lattice} into {len(zs)} factors")
    return Decomposition(factors=factors, witness=witness, generators=zs, irreducible=irreducible)


def dual_frame_check(
    lattice: FiniteLattice, xs: Sequence[int], max_size: int = 12
) -> FrameCheck:
    """Dual independence and spanning of ``xs``, plus the reflected frame.

    ``xs`` is dually independent when ``(⋀A) ∨ (⋀B) = ⋀(A ∩ B)`` for all subsets
    ``A, B``; it spans when ``⋀xs`` is the bottom. For a dual frame the reflected
    family is ``x_i' = ⋀_{j≠i} x_j``, and ``[0, x_i] ≅ [x_i', 1]`` is checked
    through the map ``y ↦ y ∨ x_i'``.

    Raises:
        NotModular: If the lattice is not modular.
        TooLarge: If ``xs`` has more than ``max_size`` elements.
    """
    if not lattice.is_modular:
        raise NotModular("dual frames are only defined here for modular lattices")
    family = sorted(set(xs))
    k = len(family)
    if k > max_size:
        raise TooLarge(f"frame of size {k} exceeds the subset-check guard {max_size}")

    subset_meet = [lattice.top] * (1 << k)
    for mask in range(1, 1 << k):
        low = (mask & -mask).bit_length() - 1
        subset_meet[mask] = lattice.meet(subset_meet[mask & (mask - 1)], family[low])

    independent = all(
        lattice.join(subset_meet[a], subset_meet[b]) == subset_meet[a & b]
        for a in range(1 << k)
        for b in range(1 << k)
    )
    spanning = subset_meet[(1 << k) - 1] == lattice.bottom
    if not (independent and spanning):
        return FrameCheck(independent=independent, spanning=spanning)

    full = (1 << k) - 1
    reflected = [subset_meet[full & ~(1 << i)] for i in range(k)]
    ok = all(
        _diamond_iso(lattice, x, xr) for x, xr in zip(family, reflected)
    )
    return FrameCheck(
        independent=True, spanning=True, reflected=reflected, reflection_ok=ok
    )


def _diamond_iso(lattice: FiniteLattice, x: int, xr: int) -> bool:
    """``y ↦ y ∨ xr`` maps ``[0, x]`` order-isomorphically onto ``[xr, 1]``."""
    source = lattice.between(lattice.bottom, x)
    target = set(lattice.between(xr, lattice.top))
    image = {y: lattice.join(y, xr) for y in source}
    if set(image.values()) != target or len(target) != len(source):
        return False
    return all(
        lattice.leq(a, b) == lattice.leq(image[a], image[b]) for a in source for b in source
    )


def is_primary(lattice: FiniteLattice) -> bool:
    """Any two atoms of any interval ``[x, y]`` are perspective inside it.

    Raises:
        NotModular: If the lattice is not modular.
    """
    if not lattice.is_modular:
        raise NotModular("primarity is only defined here for modular lattices")
    for x in lattice.elements:
        covers = lattice.upper_covers(x)
        if len(covers) < 2:
            continue
        for y in iter_bits(lattice.up_mask(x)):
            atoms = [a for a in covers if lattice.leq(a, y)]
            if len(atoms) < 2:
                continue
            members = lattice.between(x, y)
            for i, a in enumerate(atoms):
                for b in atoms[i + 1 :]:
                    if not _perspective(lattice, x, a, b, members):
                        logger.debug(f"Atoms {a}, {b} of [{x}, {y}] are not perspective")
                        return False
    return True


def _perspective(
    lattice: FiniteLattice, x: int, a: int, b: int, members: Sequence[int]
) -> bool:
    return any(
        lattice.meet(a, z) == x
        and lattice.meet(b, z) == x
        and lattice.join(a, z) == lattice.join(b, z)
        for z in members
    )

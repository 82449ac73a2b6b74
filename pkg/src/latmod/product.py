"""Finite products of coordinatized beams, one :class:`PLattice` per slot."""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from src.errors import ParamMismatch
from src.latmod.params import BeamParams
from src.latmod.plattice import PLattice, frozen, join, leq, meet, unit
from src.latmod.profile import snf_exponents

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProductElement:
    slots: Tuple[PLattice, ...]

    @property
    def layout(self) -> Tuple[BeamParams, ...]:
        return tuple(s.params for s in self.slots)

    def _check(self, other: "ProductElement") -> None:
        if self.layout != other.layout:
            raise ParamMismatch(
                f"product layouts differ: {self.layout} and {other.layout}"
            )

    def meet(self, other: "ProductElement") -> "ProductElement":
        self._check(other)
        return ProductElement(tuple(meet(a, b) for a, b in zip(self.slots, other.slots)))

    def join(self, other: "ProductElement") -> "ProductElement":
        self._check(other)
        return ProductElement(tuple(join(a, b) for a, b in zip(self.slots, other.slots)))

    def leq(self, other: "ProductElement") -> bool:
        self._check(other)
        return all(leq(a, b) for a, b in zip(self.slots, other.slots))

    @property
    def deg(self) -> int:
        return sum(s.deg for s in self.slots)

    def to_dict(self) -> dict:
        return {"slots": [s.to_dict() for s in self.slots]}

    def __str__(self) -> str:
        return "(" + ", ".join(str(s) for s in self.slots) + ")"


def beam_unit(layout: Sequence[BeamParams]) -> ProductElement:
    return ProductElement(tuple(unit(params) for params in layout))


def frozen_product(layout: Sequence[BeamParams], n: int) -> ProductElement:
    """``s^(-n)``: every slot frozen at ``n``."""
    return ProductElement(tuple(frozen(params, n) for params in layout))


def beam_frozen(layout: Sequence[BeamParams], i: int, n: int) -> ProductElement:
    """``Φ_n(z_i)``: slot ``i`` frozen at ``n``, the other slots ``e``."""
    return ProductElement(
        tuple(frozen(params, n) if j == i else unit(params) for j, params in enumerate(layout))
    )


def meet_product(items: Sequence[ProductElement]) -> ProductElement:
    result = items[0]
    for item in items[1:]:
        result = result.meet(item)
    return result


class ProductDecomposition(BaseModel):
    """Result of :func:`product_decompose`."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    n: int
    components: List[ProductElement]
    meet_ok: bool
    degree_ok: bool
    dual_frame_ok: bool


def frozen_frame_ok(layout: Sequence[BeamParams], n: int) -> bool:
    """``⋀ Φ_n(z_i) = s^(-n)``, degrees add over every subfamily and the family is
    dually independent."""
    k = len(layout)
    phis = [beam_frozen(layout, i, n) for i in range(k)]
    subset_meet = [beam_unit(layout)] * (1 << k)
    for mask in range(1, 1 << k):
        low = (mask & -mask).bit_length() - 1
        subset_meet[mask] = subset_meet[mask & (mask - 1)].meet(phis[low])
        chosen = sum(phis[i].deg for i in range(k) if mask >> i & 1)
        if subset_meet[mask].deg != chosen:
            return False
    if subset_meet[(1 << k) - 1] != frozen_product(layout, n):
        return False
    return all(
        subset_meet[a].join(subset_meet[b]) == subset_meet[a & b]
        for a in range(1 << k)
        for b in range(1 << k)
    )


def product_decompose(x: ProductElement) -> ProductDecomposition:
    """Components ``x ∨ Φ_n(z_i)`` of ``x`` with ``n = max(1, max λ)``.

    Raises:
        NotInNegativeCone: If some slot is not contained in its ``R^delta``.
    """
    layout = x.layout
    n = max([1] + [snf_exponents(s)[0] for s in x.slots])
    components = [x.join(beam_frozen(layout, i, n)) for i in range(len(layout))]
    meet_ok = meet_product(components) == x
    degree_ok = x.deg == sum(c.deg for c in components)
    dual_frame_ok = frozen_frame_ok(layout, n)
    if not (meet_ok and degree_ok and dual_frame_ok):
        logger.warning(f"Product decomposition checks failed for {x}")
    return ProductDecomposition(
        n=n,
        components=components,
        meet_ok=meet_ok,
        degree_ok=degree_ok,
        dual_frame_ok=dual_frame_ok,
    )

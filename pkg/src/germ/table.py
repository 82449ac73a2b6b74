"""Finite germs: the interval ``[Δ, e]`` with its partial product.

A germ table lists the simple elements, the distinguished identity ``e`` and
bottom ``Δ = s⁻¹``, a degree per element and the defined products. Elements are
ordered by divisibility: ``a ≤ b`` when ``a = c·b`` for some simple ``c``, so
``e`` is the top and ``Δ`` the bottom of the interval.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import networkx as nx
from pydantic import BaseModel, Field

from src.errors import GlatError
from src.finlat import FiniteLattice, lattice_from_order

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class GermTable:
    """Raw germ data; see :func:`validate_germ` for the axioms it must satisfy.

    Attributes:
        elements: Element names; the position of a name is its id.
        identity: Name of ``e``.
        delta: Name of ``Δ``.
        degree: Degree of every element.
        product: Defined products ``(a, b) -> a·b``.
    """

    elements: Tuple[str, ...]
    identity: str
    delta: str
    degree: Mapping[str, int]
    product: Mapping[Tuple[str, str], str] = field(default_factory=dict)

    def mul(self, a: str, b: str) -> Optional[str]:
        return self.product.get((a, b))

    def opposite(self) -> "GermTable":
        """The germ with transposed product ``a∘b = b·a``."""
        return GermTable(
            elements=self.elements,
            identity=self.identity,
            delta=self.delta,
            degree=dict(self.degree),
            product={(b, a): c for (a, b), c in self.product.items()},
        )

    @classmethod
    def from_dict(cls, data: Mapping) -> "GermTable":
        """Build a table from the germ JSON layout.

        Products with the identity may be omitted in the file; they are added here.
        """
        elements = tuple(str(x) for x in data["elements"])
        identity = str(data["identity"])
        product: Dict[Tuple[str, str], str] = {}
        for a in elements:
            product[(identity, a)] = a
            product[(a, identity)] = a
        for entry in data.get("product", []):
            a, b, c = (str(x) for x in entry)
            product[(a, b)] = c
        return cls(
            elements=elements,
            identity=identity,
            delta=str(data["delta"]),
            degree={str(k): int(v) for k, v in data["degree"].items()},
            product=product,
        )

    def to_dict(self) -> Dict[str, object]:
        """Germ JSON layout; products with the identity are left implicit."""
        rows = [
            [a, b, c]
            for (a, b), c in sorted(self.product.items())
            if a != self.identity and b != self.identity
        ]
        return {
            "elements": list(self.elements),
            "identity": self.identity,
            "delta": self.delta,
            "degree": {x: self.degree[x] for x in self.elements},
            "product": rows,
        }


class GermReport(BaseModel):
    """Outcome of :func:`validate_germ`; ``witness`` belongs to the first violation."""

    valid: bool
    violations: List[str] = Field(default_factory=list)
    witness: List[str] = Field(default_factory=list)


class _Violation(Exception):
    def __init__(self, message: str, witness: Sequence[str] = ()) -> None:
        super().__init__(message)
        self.witness = list(witness)


def divisibility_lattice(t: GermTable, right: bool = False) -> FiniteLattice:
    """The order ``a ≤ b ⟺ a = c·b`` (or ``a = b·c`` when ``right``) as a lattice."""
    names = t.elements
    products = t.product
    if right:
        related = {(c, b) for (b, _), c in products.items()}
    else:
        related = {(c, b) for (_, b), c in products.items()}
    return lattice_from_order(
        len(names),
        lambda i, j: (names[i], names[j]) in related,
        labels=names,
    )


def _check_basics(t: GermTable) -> None:
    names = set(t.elements)
    if len(names) != len(t.elements):
        raise _Violation("element names are not unique")
    for special in (t.identity, t.delta):
        if special not in names:
            raise _Violation(f"distinguished element {special!r} is not an element", [special])
    for x in t.elements:
        if x not in t.degree:
            raise _Violation(f"element {x!r} has no degree", [x])
    for (a, b), c in t.product.items():
        for y in (a, b, c):
            if y not in names:
                raise _Violation(f"product {a}·{b} = {c} uses unknown element {y!r}", [a, b, c])


def _check_identity(t: GermTable) -> None:
    e = t.identity
    if t.degree[e] != 0:
        raise _Violation("the identity must have degree 0", [e])
    for a in t.elements:
        if t.mul(e, a) != a or t.mul(a, e) != a:
            raise _Violation(f"identity is not neutral for {a}", [e, a])
        if a != e and t.degree[a] <= 0:
            raise _Violation(f"element {a} must have positive degree", [a])


def _check_products(t: GermTable) -> None:
    for (a, b), c in t.product.items():
        if t.degree[c] != t.degree[a] + t.degree[b]:
            raise _Violation(f"degree is not additive on {a}·{b} = {c}", [a, b, c])

    left: Dict[Tuple[str, str], str] = {}
    right: Dict[Tuple[str, str], str] = {}
    for (a, b), c in sorted(t.product.items()):
        if (a, c) in left and left[(a, c)] != b:
            raise _Violation(
                f"{a}·{left[(a, c)]} = {a}·{b} = {c}: not left cancellative", [a, b, c]
            )
        if (b, c) in right and right[(b, c)] != a:
            raise _Violation(
                f"{right[(b, c)]}·{b} = {a}·{b} = {c}: not right cancellative", [a, b, c]
            )
        left[(a, c)] = b
        right[(b, c)] = a

    for a in t.elements:
        for b in t.elements:
            ab = t.mul(a, b)
            for c in t.elements:
                bc = t.mul(b, c)
                lhs = t.mul(ab, c) if ab is not None else None
                rhs = t.mul(a, bc) if bc is not None else None
                if lhs != rhs:
                    raise _Violation(
                        f"({a}·{b})·{c} = {lhs} but {a}·({b}·{c}) = {rhs}", [a, b, c]
                    )


def _check_complements(t: GermTable) -> None:
    for a in t.elements:
        lefts = [c for c in t.elements if t.mul(c, a) == t.delta]
        rights = [c for c in t.elements if t.mul(a, c) == t.delta]
        if len(lefts) != 1:
            raise _Violation(f"{a} has {len(lefts)} left complements to {t.delta}", [a])
        if len(rights) != 1:
            raise _Violation(f"{a} has {len(rights)} right complements to {t.delta}", [a])


def _check_orders(t: GermTable) -> None:
    try:
        lattice = divisibility_lattice(t)
        right = divisibility_lattice(t, right=True)
    except GlatError as exc:
        raise _Violation(f"divisibility order is not a lattice: {exc}") from exc
    index = {x: i for i, x in enumerate(t.elements)}
    if lattice.top != index[t.identity] or lattice.bottom != index[t.delta]:
        raise _Violation("divisibility lattice must have top e and bottom Δ")
    if lattice.covers != right.covers and not nx.is_isomorphic(
        nx.DiGraph(lattice.covers), nx.DiGraph(right.covers)
    ):
        raise _Violation("left and right divisibility lattices are not isomorphic")
    for x in t.elements:
        rank = lattice.length - lattice.height(index[x])
        if t.degree[x] != rank:
            raise _Violation(
                f"degree of {x} is {t.degree[x]}, its distance to the identity is {rank}", [x]
            )


def validate_germ(t: GermTable) -> GermReport:
    """Check every germ axiom exhaustively.

    The checks run in order (names, identity, products, complements of ``Δ``,
    divisibility lattices) and stop at the first violation.

    Args:
        t: The table to check.

    Returns:
        GermReport: ``valid`` or the first violation with its witness elements.
    """
    checks = (
        _check_basics,
        _check_identity,
        _check_products,
        _check_complements,
        _check_orders,
    )
    for check in checks:
        try:
            check(t)
        except _Violation as violation:
            logger.debug(f"Germ violation: {violation}")
            return GermReport(valid=False, violations=[str(violation)], witness=violation.witness)
    return GermReport(valid=True)

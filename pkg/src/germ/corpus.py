"""Built-in germs: free abelian, Klein and products of germs."""

import itertools
from typing import Dict, List, Tuple

from src.errors import InvalidGerm
from src.germ.table import GermTable

GENERATOR_NAMES = "xyzwuvst"


def generator_names(count: int) -> List[str]:
    if count <= len(GENERATOR_NAMES):
        return list(GENERATOR_NAMES[:count])
    return [f"x{i}" for i in range(1, count + 1)]


def free_abelian_germ(rank: int) -> GermTable:
    """Germ of ``Z^rank``: subsets of the generators, ``a·b = a ∪ b`` for disjoint ``a, b``.

    The empty set is ``e`` and the full set is ``D``; other subsets are named by
    their generators in order.
    """
    if rank < 1:
        raise InvalidGerm(f"rank must be positive, got {rank}")
    gens = generator_names(rank)
    full = frozenset(range(rank))

    def name(subset: frozenset) -> str:
        if not subset:
            return "e"
        if subset == full:
            return "D"
        return "".join(gens[i] for i in sorted(subset))

    subsets = [
        frozenset(c)
        for size in range(rank + 1)
        for c in itertools.combinations(range(rank), size)
    ]
    product: Dict[Tuple[str, str], str] = {}
    for a in subsets:
        for b in subsets:
            if not a & b:
                product[(name(a), name(b))] = name(a | b)
    return GermTable(
        elements=tuple(name(s) for s in subsets),
        identity="e",
        delta="D",
        degree={name(s): len(s) for s in subsets},
        product=product,
    )


def klein_germ() -> GermTable:
    """Germ of ``⟨x, y | x² = y²⟩`` on ``{e, x, y, D}`` with ``x·x = y·y = D``."""
    elements = ("e", "x", "y", "D")
    product = {(a, "e"): a for a in elements}
    product.update({("e", a): a for a in elements})
    product[("x", "x")] = "D"
    product[("y", "y")] = "D"
    return GermTable(
        elements=elements,
        identity="e",
        delta="D",
        degree={"e": 0, "x": 1, "y": 1, "D": 2},
        product=product,
    )


def product_germ(left: GermTable, right: GermTable) -> GermTable:
    """Direct product; pairs are named ``(a,b)`` except the identity ``e`` and ``D``."""

    def name(a: str, b: str) -> str:
        if a == left.identity and b == right.identity:
            return "e"
        if a == left.delta and b == right.delta:
            return "D"
        return f"({a},{b})"

    pairs = [(a, b) for a in left.elements for b in right.elements]
    product: Dict[Tuple[str, str], str] = {}
    for (a1, b1), (a2, b2) in itertools.product(pairs, repeat=2):
        a = left.mul(a1, a2)
        b = right.mul(b1, b2)
        if a is not None and b is not None:
            product[(name(a1, b1), name(a2, b2))] = name(a, b)
    return GermTable(
        elements=tuple(name(a, b) for a, b in pairs),
        identity="e",
        delta="D",
        degree={name(a, b): left.degree[a] + right.degree[b] for a, b in pairs},
        product=product,
    )


BUILTIN_GERMS = {
    "free_abelian_1": lambda: free_abelian_germ(1),
    "free_abelian_2": lambda: free_abelian_germ(2),
    "free_abelian_3": lambda: free_abelian_germ(3),
    "klein": klein_germ,
    "z_times_klein": lambda: product_germ(free_abelian_germ(1), klein_germ()),
}

"""Small named lattices used as fixtures, examples and independent oracles."""

import itertools
from typing import FrozenSet, List, Tuple

from src.errors import InvalidParams
from src.finlat.lattice import FiniteLattice, build_lattice


def chain(size: int) -> FiniteLattice:
    """The chain ``0 < 1 < ... < size-1``."""
    if size < 1:
        raise InvalidParams("a chain needs at least one element")
    return build_lattice([(i, i + 1) for i in range(size - 1)], n=size)


def boolean(rank: int) -> FiniteLattice:
    """The Boolean lattice of subsets of a ``rank``-set, id = bitmask."""
    n = 1 << rank
    covers = [(s, s | (1 << i)) for s in range(n) for i in range(rank) if not s >> i & 1]
    return build_lattice(covers, n=n)


def m3() -> FiniteLattice:
    """The diamond: bottom 0, atoms 1, 2, 3, top 4."""
    return build_lattice([(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)], n=5)


def n5() -> FiniteLattice:
    """The pentagon: 0 < 1 < 2 < 4 and 0 < 3 < 4."""
    return build_lattice([(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)], n=5)


def product(left: FiniteLattice, right: FiniteLattice) -> FiniteLattice:
    """Direct product; the pair ``(a, b)`` gets id ``a * right.n + b``."""
    m = right.n
    covers = [(a * m + b, c * m + b) for a, c in left.covers for b in range(m)]
    covers += [(a * m + b, a * m + d) for a in range(left.n) for b, d in right.covers]
    return build_lattice(covers, n=left.n * m)


def subspace_lattice(p: int, dim: int) -> Tuple[FiniteLattice, List[FrozenSet[Tuple[int, ...]]]]:
    """All subspaces of ``F_p^dim`` ordered by inclusion.

    Subspaces are generated as spans of vector sets over the prime field, without
    any matrix normal form, so the result can serve as an oracle for the module
    enumerations.

    Returns:
        The lattice and the subspaces (as frozensets of vectors) indexed by id.
    """
    vectors = list(itertools.product(range(p), repeat=dim))
    zero = tuple([0] * dim)

    def add(u: Tuple[int, ...], v: Tuple[int, ...], c: int) -> Tuple[int, ...]:
        return tuple((a + c * b) % p for a, b in zip(u, v))

    def span_with(space: FrozenSet[Tuple[int, ...]], v: Tuple[int, ...]) -> FrozenSet:
        return frozenset(add(u, v, c) for u in space for c in range(p))

    seen = {frozenset([zero])}
    frontier = list(seen)
    while frontier:
        nxt = []
        for space in frontier:
            for v in vectors:
                if v in space:
                    continue
                bigger = span_with(space, v)
                if bigger not in seen:
                    seen.add(bigger)
                    nxt.append(bigger)
        frontier = nxt

    spaces = sorted(seen, key=lambda s: (len(s), sorted(s)))
    index = {s: i for i, s in enumerate(spaces)}
    covers = []
    for s in spaces:
        for v in vectors:
            if v not in s:
                bigger = span_with(s, v)
                if len(bigger) == len(s) * p:
                    covers.append((index[s], index[bigger]))
    return build_lattice(set(covers), n=len(spaces)), spaces

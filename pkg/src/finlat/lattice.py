"""Finite bounded lattices given by their cover relation.

A :class:`FiniteLattice` is built once from the Hasse diagram and is immutable
afterwards. The order is stored as bitsets (``down[x]`` has bit ``y`` set iff
``y <= x``), which makes meets and joins a dictionary lookup: the meet of ``x`` and
``y`` is the unique element whose down-set equals ``down[x] & down[y]``.
"""

import logging
from functools import cached_property
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from src.errors import CyclicCovers, NotALattice

logger = logging.getLogger(__name__)

Cover = Tuple[int, int]


def iter_bits(mask: int) -> Iterable[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FiniteLattice:
    """A finite lattice on the ids ``0..n-1``.

    Use :func:`build_lattice` or :func:`lattice_from_order` instead of calling the
    constructor directly; they validate the input.

    Attributes:
        n: Number of elements.
        covers: Sorted cover pairs ``(lower, upper)``.
        top: Id of the greatest element.
        bottom: Id of the least element.
        labels: Optional display names, one per id.
    """

    def __init__(
        self,
        n: int,
        covers: Sequence[Cover],
        down: Sequence[int],
        up: Sequence[int],
        height: Sequence[int],
        labels: Optional[Sequence[str]] = None,
    ) -> None:
        self.n = n
        self.covers: Tuple[Cover, ...] = tuple(sorted(covers))
        self._down = tuple(down)
        self._up = tuple(up)
        self._height = tuple(height)
        self.labels: Optional[Tuple[str, ...]] = tuple(labels) if labels else None

        by_down = {mask: x for x, mask in enumerate(self._down)}
        by_up = {mask: x for x, mask in enumerate(self._up)}
        meet_rows: List[List[int]] = [[0] * n for _ in range(n)]
        join_rows: List[List[int]] = [[0] * n for _ in range(n)]
        for x in range(n):
            meet_rows[x][x] = x
            join_rows[x][x] = x
            for y in range(x + 1, n):
                m = by_down.get(self._down[x] & self._down[y])
                j = by_up.get(self._up[x] & self._up[y])
                if m is None:
                    raise NotALattice(f"elements {x} and {y} have no meet")
                if j is None:
                    raise NotALattice(f"elements {x} and {y} have no join")
                meet_rows[x][y] = meet_rows[y][x] = m
                join_rows[x][y] = join_rows[y][x] = j
        self.meet_table: Tuple[Tuple[int, ...], ...] = tuple(map(tuple, meet_rows))
        self.join_table: Tuple[Tuple[int, ...], ...] = tuple(map(tuple, join_rows))

        full = (1 << n) - 1
        self.bottom = next(x for x in range(n) if self._up[x] == full)
        self.top = next(x for x in range(n) if self._down[x] == full)

        upper: List[List[int]] = [[] for _ in range(n)]
        lower: List[List[int]] = [[] for _ in range(n)]
        for lo, hi in self.covers:
            upper[lo].append(hi)
            lower[hi].append(lo)
        self._upper = tuple(tuple(sorted(u)) for u in upper)
        self._lower = tuple(tuple(sorted(low)) for low in lower)

    # Order and operations

    def leq(self, x: int, y: int) -> bool:
        return bool((self._down[y] >> x) & 1)

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.leq(x, y)

    def meet(self, x: int, y: int) -> int:
        return self.meet_table[x][y]

    def join(self, x: int, y: int) -> int:
        return self.join_table[x][y]

    def meet_all(self, xs: Iterable[int]) -> int:
        """Meet of a family; the empty meet is the top."""
        result = self.top
        for x in xs:
            result = self.meet_table[result][x]
        return result

    def join_all(self, xs: Iterable[int]) -> int:
        """Join of a family; the empty join is the bottom."""
        result = self.bottom
        for x in xs:
            result = self.join_table[result][x]
        return result

    def down_mask(self, x: int) -> int:
        return self._down[x]

    def up_mask(self, x: int) -> int:
        return self._up[x]

    def downset(self, x: int) -> List[int]:
        return list(iter_bits(self._down[x]))

    def upset(self, x: int) -> List[int]:
        return list(iter_bits(self._up[x]))

    def between(self, lo: int, hi: int) -> List[int]:
        """Sorted ids of the interval ``[lo, hi]`` (empty if ``lo`` is not below ``hi``)."""
        return list(iter_bits(self._up[lo] & self._down[hi]))

    def upper_covers(self, x: int) -> Tuple[int, ...]:
        return self._upper[x]

    def lower_covers(self, x: int) -> Tuple[int, ...]:
        return self._lower[x]

    def height(self, x: int) -> int:
        """Length of the longest chain from the bottom to ``x``."""
        return self._height[x]

    @property
    def length(self) -> int:
        return self._height[self.top]

    @property
    def elements(self) -> range:
        return range(self.n)

    @property
    def atoms(self) -> List[int]:
        return list(self._upper[self.bottom]) if self.n > 1 else []

    @property
    def dual_atoms(self) -> List[int]:
        return list(self._lower[self.top]) if self.n > 1 else []

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    # Lattice identities, checked exhaustively

    @cached_property
    def is_modular(self) -> bool:
        """``a ∨ (b ∧ c) = (a ∨ b) ∧ c`` for all ``a <= c``."""
        meet, join = self.meet_table, self.join_table
        for a in range(self.n):
            for c in iter_bits(self._up[a]):
                for b in range(self.n):
                    if join[a][meet[b][c]] != meet[join[a][b]][c]:
                        logger.debug(f"Modularity fails at a={a}, b={b}, c={c}")
                        return False
        return True

    @cached_property
    def is_distributive(self) -> bool:
        """``a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)`` for all triples."""
        meet, join = self.meet_table, self.join_table
        n = self.n
        for a in range(n):
            for b in range(n):
                for c in range(b + 1, n):
                    if meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]]:
                        logger.debug(f"Distributivity fails at a={a}, b={b}, c={c}")
                        return False
        return True

    def is_chain(self) -> bool:
        return all(len(self._upper[x]) <= 1 for x in range(self.n))

    # Sublattices

    def interval(self, lo: int, hi: int) -> Tuple["FiniteLattice", List[int]]:
        """The interval ``[lo, hi]`` as a lattice of its own.

        Returns:
            The interval lattice and the list mapping its ids to ids of ``self``.
        """
        members = self.between(lo, hi)
        if not members:
            raise NotALattice(f"{lo} is not below {hi}")
        return self.induced(members), members

    def induced(self, members: Sequence[int]) -> "FiniteLattice":
        """Sublattice on a convex set of ids, relabelled ``0..len(members)-1``."""
        index = {x: i for i, x in enumerate(members)}
        covers = [
            (index[lo], index[hi])
            for lo, hi in self.covers
            if lo in index and hi in index
        ]
        labels = [self.label(x) for x in members] if self.labels else None
        return build_lattice(covers, n=len(members), labels=labels)

    def to_dict(self) -> Dict[str, object]:
        data: Dict[str, object] = {"n": self.n, "covers": [list(c) for c in self.covers]}
        if self.labels:
            data["labels"] = list(self.labels)
        return data

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return self.n == other.n and self.covers == other.covers

    def __hash__(self) -> int:
        return hash((self.n, self.covers))

    def __repr__(self) -> str:
        return f"FiniteLattice(n={self.n}, covers={len(self.covers)}, length={self.length})"


def build_lattice(
    covers: Iterable[Sequence[int]],
    n: Optional[int] = None,
    labels: Optional[Sequence[str]] = None,
) -> FiniteLattice:
    """Build a lattice from cover pairs ``(lower, upper)`` over ids ``0..n-1``.

    Pairs that are implied by transitivity are accepted and dropped, so any
    relation whose transitive closure is the intended order works.

    Args:
        covers: Pairs ``(lower, upper)``.
        n: Number of elements; defaults to one more than the largest id.
        labels: Optional display names.

    Returns:
        FiniteLattice: The lattice with meet and join tables filled.

    Raises:
        CyclicCovers: If the relation has a cycle.
        NotALattice: If bounds are not unique or some pair lacks a meet or join.
    """
    pairs = [(int(lo), int(hi)) for lo, hi in covers]
    if n is None:
        n = 1 + max((max(p) for p in pairs), default=0)
    if n < 1:
        raise NotALattice("a lattice needs at least one element")
    for lo, hi in pairs:
        if not (0 <= lo < n and 0 <= hi < n):
            raise NotALattice(f"cover ({lo}, {hi}) uses ids outside 0..{n - 1}")
        if lo == hi:
            raise CyclicCovers(f"cover ({lo}, {hi}) is a loop")
    if labels is not None and len(labels) != n:
        raise NotALattice(f"expected {n} labels, got {len(labels)}")

    graph = nx.DiGraph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(pairs)
    if not nx.is_directed_acyclic_graph(graph):
        cycle = nx.find_cycle(graph)
        raise CyclicCovers(f"cover relation has a cycle: {cycle}")

    reduced = nx.transitive_reduction(graph)
    order = list(nx.topological_sort(graph))

    down = [1 << x for x in range(n)]
    height = [0] * n
    for x in order:
        for pred in graph.predecessors(x):
            down[x] |= down[pred]
            height[x] = max(height[x], height[pred] + 1)
    up = [1 << x for x in range(n)]
    for x in reversed(order):
        for succ in graph.successors(x):
            up[x] |= up[succ]

    minimal = [x for x in range(n) if graph.in_degree(x) == 0]
    maximal = [x for x in range(n) if graph.out_degree(x) == 0]
    if len(minimal) != 1 or len(maximal) != 1:
        raise NotALattice(
            f"expected unique bottom and top, found minimal {minimal} and maximal {maximal}"
        )

    lattice = FiniteLattice(n, list(reduced.edges()), down, up, height, labels)
    logger.debug(f"Built {lattice}")
    return lattice


def lattice_from_order(
    n: int,
    leq: Callable[[int, int], bool],
    labels: Optional[Sequence[str]] = None,
) -> FiniteLattice:
    """Build a lattice on ``0..n-1`` from an order predicate ``leq(x, y)``."""
    strict = [(x, y) for x in range(n) for y in range(n) if x != y and leq(x, y)]
    return build_lattice(strict, n=n, labels=labels)

"""Exhaustive enumeration of small involutive non-degenerate solutions."""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from src.errors import TooLarge
from src.ybe.solutions import CycleSet, RMap, solution_from_cycle_set, validate

logger = logging.getLogger(__name__)

MAX_ENUMERATION_N = 4
MAX_BRUTE_FORCE_N = 3


def _law_holds(rows: Sequence[Tuple[int, ...]], n: int) -> bool:
    """The cycle-set law on every triple whose four translations are already chosen."""
    assigned = len(rows)
    for x in range(assigned):
        for y in range(assigned):
            xy, yx = rows[x][y], rows[y][x]
            if xy >= assigned or yx >= assigned:
                continue
            for z in range(n):
                if rows[xy][rows[x][z]] != rows[yx][rows[y][z]]:
                    return False
    return True


def enumerate_cycle_sets(n: int) -> List[CycleSet]:
    """All non-degenerate cycle sets on ``n`` points by backtracking over translations."""
    perms = list(itertools.permutations(range(n)))
    found: List[CycleSet] = []

    def extend(rows: List[Tuple[int, ...]]) -> None:
        if len(rows) == n:
            if len({rows[x][x] for x in range(n)}) == n:
                found.append(CycleSet(n=n, op=tuple(rows)))
            return
        for perm in perms:
            rows.append(perm)
            if _law_holds(rows, n):
                extend(rows)
            rows.pop()

    extend([])
    return found


def enumerate_solutions(n: int, max_n: int = MAX_ENUMERATION_N) -> List[RMap]:
    """Every involutive non-degenerate solution on ``n`` points, sorted by table.

    Raises:
        TooLarge: If ``n`` exceeds ``max_n``.
    """
    if n < 1:
        return []
    if n > max_n:
        raise TooLarge(f"solution enumeration is limited to n <= {max_n}, got {n}")
    solutions = sorted(
        (solution_from_cycle_set(c) for c in enumerate_cycle_sets(n)), key=lambda r: r.table
    )
    logger.info(f"Found {len(solutions)} solutions on {n} points")
    return solutions


def brute_force_solutions(n: int, max_n: int = MAX_BRUTE_FORCE_N) -> List[RMap]:
    """Independent pass over all families ``(λ_x)`` and ``(ρ_y)`` of permutations.

    Families are visited in reverse lexicographic order and every candidate is
    checked with :func:`validate`.
    """
    if n < 1:
        return []
    if n > max_n:
        raise TooLarge(f"brute-force search is limited to n <= {max_n}, got {n}")
    perms = list(reversed(list(itertools.permutations(range(n)))))
    found = []
    for lambdas in itertools.product(perms, repeat=n):
        for rhos in itertools.product(perms, repeat=n):
            r = RMap.from_function(n, lambda x, y: (lambdas[x][y], rhos[y][x]))
            if validate(r).valid:
                found.append(r)
    logger.debug(f"Brute force found {len(found)} solutions on {n} points")
    return sorted(found, key=lambda r: r.table)


def relabel(r: RMap, perm: Sequence[int]) -> RMap:
    """The solution transported along ``perm``: ``R'(πx, πy) = (π × π)(R(x, y))``."""
    inverse = [0] * r.n
    for i, p in enumerate(perm):
        inverse[p] = i

    def fn(a: int, b: int) -> Tuple[int, int]:
        u, v = r(inverse[a], inverse[b])
        return (perm[u], perm[v])

    return RMap.from_function(r.n, fn)


def canonical_form(r: RMap) -> RMap:
    """Least relabelling of ``r`` under ``Sym(n)``."""
    return min(
        (relabel(r, perm) for perm in itertools.permutations(range(r.n))),
        key=lambda s: s.table,
    )


def isomorphism_classes(solutions: Sequence[RMap]) -> List[List[RMap]]:
    """Group solutions into ``Sym(n)`` orbits, ordered by canonical form."""
    orbits: Dict[Tuple, List[RMap]] = {}
    for r in solutions:
        orbits.setdefault(canonical_form(r).table, []).append(r)
    return [orbits[key] for key in sorted(orbits)]


@dataclass(frozen=True)
class Enumeration:
    """Solutions on ``n`` points with their isomorphism classes."""

    n: int
    solutions: List[RMap]
    representatives: List[RMap]

    @property
    def class_count(self) -> int:
        return len(self.representatives)

    def to_dict(self) -> Dict[str, object]:
        return {
            "n": self.n,
            "count": len(self.solutions),
            "classes": self.class_count,
            "representatives": [r.to_dict() for r in self.representatives],
        }


def enumerate_with_classes(n: int, max_n: int = MAX_ENUMERATION_N) -> Enumeration:
    solutions = enumerate_solutions(n, max_n)
    classes = isomorphism_classes(solutions)
    return Enumeration(
        n=n,
        solutions=solutions,
        representatives=[canonical_form(orbit[0]) for orbit in classes],
    )

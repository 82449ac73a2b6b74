"""Involutive non-degenerate Yang-Baxter solutions and their equivalent presentations.

A solution on ``X = {0, ..., n-1}`` is ``R(x, y) = (λ_x(y), ρ_y(x))``. The
matching cycle set has ``x·y = ρ_x⁻¹(y)``; conversely ``R(u, x) = (y·x, y)``
where ``y`` is the element with ``x·y = u``. The discrete L-algebra with
duality on ``X ∪ {e}`` has ``x → y = x·y`` for ``x ≠ y`` and ``D(x) = x·x``.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Sequence, Tuple, Union

from pydantic import BaseModel

from src.errors import InvalidStructure

logger = logging.getLogger(__name__)

# Index of the unit e in L-algebra tables
E = -1

Pair = Tuple[int, int]


@dataclass(frozen=True)
class RMap:
    """``table[x * n + y] = R(x, y)``."""

    n: int
    table: Tuple[Pair, ...]

    def __call__(self, x: int, y: int) -> Pair:
        return self.table[x * self.n + y]

    @classmethod
    def from_function(cls, n: int, fn) -> "RMap":
        return cls(n=n, table=tuple(tuple(fn(x, y)) for x in range(n) for y in range(n)))

    @classmethod
    def from_dict(cls, data: Mapping) -> "RMap":
        """``{"n": 2, "R": [[[x, y], [a, b]], ...]}`` with every pair listed once."""
        n = int(data["n"])
        entries: Dict[Pair, Pair] = {}
        for (x, y), (a, b) in data["R"]:
            entries[(int(x), int(y))] = (int(a), int(b))
        missing = [(x, y) for x in range(n) for y in range(n) if (x, y) not in entries]
        if missing:
            raise InvalidStructure(f"R is not defined on {missing[0]}")
        return cls(n=n, table=tuple(entries[(x, y)] for x in range(n) for y in range(n)))

    def to_dict(self) -> Dict[str, object]:
        return {
            "n": self.n,
            "R": [[[x, y], list(self(x, y))] for x in range(self.n) for y in range(self.n)],
        }


@dataclass(frozen=True)
class CycleSet:
    """``op[x][y] = x·y``."""

    n: int
    op: Tuple[Tuple[int, ...], ...]

    def __call__(self, x: int, y: int) -> int:
        return self.op[x][y]

    @classmethod
    def from_dict(cls, data: Mapping) -> "CycleSet":
        n = int(data["n"])
        op = tuple(tuple(int(v) for v in row) for row in data["op"])
        if len(op) != n or any(len(row) != n for row in op):
            raise InvalidStructure(f"cycle set table must be {n} x {n}")
        return cls(n=n, op=op)

    def to_dict(self) -> Dict[str, object]:
        return {"n": self.n, "op": [list(row) for row in self.op]}


@dataclass(frozen=True)
class LAlgebra:
    """Discrete L-algebra with duality on ``X ∪ {e}``.

    ``arrow[x][y]`` is ``x → y`` for ``x, y`` in ``X`` (``E`` on the diagonal) and
    ``duality[x]`` is ``D(x)``.
    """

    n: int
    arrow_table: Tuple[Tuple[int, ...], ...]
    duality: Tuple[int, ...]

    def arrow(self, x: int, y: int) -> int:
        if x == E:
            return y
        if y == E or x == y:
            return E
        return self.arrow_table[x][y]

    def to_dict(self) -> Dict[str, object]:
        return {
            "n": self.n,
            "arrow": [list(row) for row in self.arrow_table],
            "D": list(self.duality),
        }


class SolutionReport(BaseModel):
    """Result of :func:`validate`."""

    bijective: bool
    nondegenerate: bool
    involutive: bool
    braid: bool

    @property
    def valid(self) -> bool:
        return self.bijective and self.nondegenerate and self.involutive and self.braid


def _is_permutation(values: Sequence[int], n: int) -> bool:
    return sorted(values) == list(range(n))


def validate(r: RMap) -> SolutionReport:
    """Bijectivity, non-degeneracy, involutivity and the braid relation on all triples."""
    n = r.n
    points = [(x, y) for x in range(n) for y in range(n)]
    if len(r.table) != n * n or any(
        not (0 <= a < n and 0 <= b < n) for a, b in r.table
    ):
        return SolutionReport(bijective=False, nondegenerate=False, involutive=False, braid=False)

    bijective = len(set(r.table)) == n * n
    nondegenerate = all(
        _is_permutation([r(x, y)[0] for y in range(n)], n)
        and _is_permutation([r(y, x)[1] for y in range(n)], n)
        for x in range(n)
    )
    involutive = all(r(*r(x, y)) == (x, y) for x, y in points)

    def r12(t):
        a, b = r(t[0], t[1])
        return (a, b, t[2])

    def r23(t):
        b, c = r(t[1], t[2])
        return (t[0], b, c)

    braid = all(
        r12(r23(r12(t))) == r23(r12(r23(t)))
        for t in itertools.product(range(n), repeat=3)
    )
    return SolutionReport(
        bijective=bijective, nondegenerate=nondegenerate, involutive=involutive, braid=braid
    )


class CycleSetReport(BaseModel):
    translations_bijective: bool
    cycle_law: bool
    square_bijective: bool

    @property
    def valid(self) -> bool:
        return self.translations_bijective and self.cycle_law and self.square_bijective


def validate_cycle_set(c: CycleSet) -> CycleSetReport:
    """``y ↦ x·y`` bijective, ``(x·y)·(x·z) = (y·x)·(y·z)`` and ``x ↦ x·x`` bijective."""
    n = c.n
    in_range = all(0 <= v < n for row in c.op for v in row)
    translations = in_range and all(_is_permutation(c.op[x], n) for x in range(n))
    law = in_range and all(
        c(c(x, y), c(x, z)) == c(c(y, x), c(y, z))
        for x, y, z in itertools.product(range(n), repeat=3)
    )
    square = in_range and _is_permutation([c(x, x) for x in range(n)], n)
    return CycleSetReport(
        translations_bijective=translations, cycle_law=law, square_bijective=square
    )


def validate_l_algebra(a: LAlgebra) -> bool:
    """L-algebra law on ``X ∪ {e}``, discreteness and the duality axiom."""
    n = a.n
    carrier = [E] + list(range(n))
    law = all(
        a.arrow(a.arrow(x, y), a.arrow(x, z)) == a.arrow(a.arrow(y, x), a.arrow(y, z))
        for x, y, z in itertools.product(carrier, repeat=3)
    )
    discrete = all(
        a.arrow(x, y) != E for x in range(n) for y in range(n) if x != y
    )
    duality = _is_permutation(a.duality, n) and all(
        a.duality[a.arrow(x, y)] == a.arrow(a.arrow(y, x), a.duality[y])
        for x in range(n)
        for y in range(n)
        if x != y
    )
    return law and discrete and duality


def square_map(c: CycleSet) -> Tuple[int, ...]:
    """The duality ``D(x) = x·x``."""
    return tuple(c(x, x) for x in range(c.n))


def cycle_set_from_solution(r: RMap) -> CycleSet:
    """``x·y = ρ_x⁻¹(y)`` where ``ρ_x(u)`` is the second component of ``R(u, x)``."""
    n = r.n
    op = [[0] * n for _ in range(n)]
    for x in range(n):
        for u in range(n):
            op[x][r(u, x)[1]] = u
    return CycleSet(n=n, op=tuple(tuple(row) for row in op))


def solution_from_cycle_set(c: CycleSet) -> RMap:
    """``R(u, x) = (y·x, y)`` with ``x·y = u``."""
    n = c.n
    inverse = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            inverse[x][c(x, y)] = y

    def fn(u: int, x: int) -> Pair:
        y = inverse[x][u]
        return (c(y, x), y)

    return RMap.from_function(n, fn)


def l_algebra_from_cycle_set(c: CycleSet) -> LAlgebra:
    n = c.n
    table = tuple(
        tuple(E if x == y else c(x, y) for y in range(n)) for x in range(n)
    )
    return LAlgebra(n=n, arrow_table=table, duality=square_map(c))


def cycle_set_from_l_algebra(a: LAlgebra) -> CycleSet:
    n = a.n
    op = tuple(
        tuple(a.duality[x] if x == y else a.arrow_table[x][y] for y in range(n))
        for x in range(n)
    )
    return CycleSet(n=n, op=op)


@dataclass(frozen=True)
class Presentations:
    """All three presentations of one solution."""

    solution: RMap
    cycle_set: CycleSet
    l_algebra: LAlgebra


Presentation = Union[RMap, CycleSet, LAlgebra]


def convert(obj: Presentation) -> Presentations:
    """Validate ``obj`` and produce the other two presentations.

    Raises:
        InvalidStructure: If ``obj`` fails validation, including non-involutive
            solutions.
    """
    if isinstance(obj, RMap):
        report = validate(obj)
        if not report.valid:
            raise InvalidStructure(
                f"not an involutive non-degenerate solution: {report.model_dump()}"
            )
        c = cycle_set_from_solution(obj)
        solution = obj
    elif isinstance(obj, CycleSet):
        c_report = validate_cycle_set(obj)
        if not c_report.valid:
            raise InvalidStructure(f"not a non-degenerate cycle set: {c_report.model_dump()}")
        c = obj
        solution = solution_from_cycle_set(c)
    elif isinstance(obj, LAlgebra):
        if not validate_l_algebra(obj):
            raise InvalidStructure("not a discrete L-algebra with duality")
        c = cycle_set_from_l_algebra(obj)
        if not validate_cycle_set(c).valid:
            raise InvalidStructure("L-algebra does not come from a non-degenerate cycle set")
        solution = solution_from_cycle_set(c)
    else:
        raise InvalidStructure(f"cannot convert objects of type {type(obj).__name__}")
    return Presentations(solution=solution, cycle_set=c, l_algebra=l_algebra_from_cycle_set(c))


def duality_well_defined(r: RMap) -> bool:
    """Whether the square map of the extracted cycle set recovers ``R``.

    For a non-degenerate braided map this holds exactly when ``R`` is involutive.
    """
    c = cycle_set_from_solution(r)
    if not validate_cycle_set(c).valid:
        return False
    return solution_from_cycle_set(c) == r


def relations(c: CycleSet, labels: Sequence[str]) -> List[str]:
    """Defining relations ``wx = yz`` of the structure monoid, one per nontrivial pair."""
    r = solution_from_cycle_set(c)
    seen = set()
    result = []
    for u in range(c.n):
        for x in range(c.n):
            v, y = r(u, x)
            if (u, x) == (v, y):
                continue
            key = frozenset([(u, x), (v, y)])
            if key in seen:
                continue
            seen.add(key)
            result.append(f"{labels[u]}{labels[x]} = {labels[v]}{labels[y]}")
    return result


def trivial_solution(n: int) -> RMap:
    return RMap.from_function(n, lambda x, y: (y, x))


def permutation_solution(n: int, sigma: Sequence[int]) -> RMap:
    """``R(x, y) = (σ(y), σ(x))``; involutive only when ``σ² = id``."""
    return RMap.from_function(n, lambda x, y: (sigma[y], sigma[x]))

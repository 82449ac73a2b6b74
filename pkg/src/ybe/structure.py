"""Structure germs of cycle sets.

The structure monoid of a cycle set has the generators ``X`` and the defining
relations ``ux = vy`` for ``R(u, x) = (v, y)``. Words of length at most ``n``
are grouped into classes under these rewrites; the least word of a class is its
canonical representative. A class of length ``k`` is simple exactly when its
words end in ``k`` distinct letters, and the unique simple of length ``n`` is
``Δ``.
"""

import itertools
import logging
from collections import defaultdict
from typing import Dict, List, Sequence, Tuple

from networkx.utils import UnionFind

from src.errors import GermError, InvalidStructure, TooLarge
from src.germ import Germ, GermTable, divisibility_lattice, validate_germ
from src.germ.corpus import generator_names
from src.ybe.solutions import E, CycleSet, LAlgebra, solution_from_cycle_set, validate_cycle_set

logger = logging.getLogger(__name__)

Letters = Tuple[int, ...]


def _word_classes(c: CycleSet) -> Dict[Letters, Letters]:
    """Map every word of length at most ``n`` to its canonical representative."""
    n = c.n
    r = solution_from_cycle_set(c)
    classes = UnionFind()
    for length in range(1, n + 1):
        for word in itertools.product(range(n), repeat=length):
            classes.union(word)
            for i in range(length - 1):
                rewritten = word[:i] + r(word[i], word[i + 1]) + word[i + 2 :]
                classes.union(word, rewritten)
    canonical: Dict[Letters, Letters] = {(): ()}
    for members in classes.to_sets():
        least = min(members)
        for word in members:
            canonical[word] = least
    return canonical


def _simples(canonical: Dict[Letters, Letters]) -> List[Letters]:
    last_letters: Dict[Letters, set] = defaultdict(set)
    for word, rep in canonical.items():
        if word:
            last_letters[rep].add(word[-1])
    simples = [()] + [rep for rep, ends in last_letters.items() if len(ends) == len(rep)]
    return sorted(simples, key=lambda w: (len(w), w))


def structure_generators(n: int) -> List[str]:
    """Names of the generators in a structure germ, in index order."""
    return ["D"] if n == 1 else generator_names(n)


def structure_germ(c: CycleSet, max_n: int = 6) -> GermTable:
    """The germ ``[Δ, e]`` of the structure monoid of ``c``.

    Args:
        c: A non-degenerate cycle set.
        max_n: Largest accepted carrier size.

    Returns:
        GermTable: Simples named by their canonical words, ``e`` and ``D``.

    Raises:
        TooLarge: If ``c.n > max_n``.
        InvalidStructure: If ``c`` is not a cycle set, or the germ is invalid or
            its interval is not Boolean.
    """
    n = c.n
    if n > max_n:
        raise TooLarge(f"structure germ of a cycle set on {n} points exceeds the bound {max_n}")
    if not validate_cycle_set(c).valid:
        raise InvalidStructure("structure germs need a non-degenerate cycle set")

    canonical = _word_classes(c)
    simples = _simples(canonical)
    tops = [w for w in simples if len(w) == n]
    if len(tops) != 1:
        raise InvalidStructure(f"expected one simple of length {n}, found {len(tops)}")

    labels = generator_names(n)
    sep = "" if n <= len("xyzwuvst") else "."

    def name(word: Letters) -> str:
        if not word:
            return "e"
        if len(word) == n:
            return "D"
        return sep.join(labels[i] for i in word)

    simple_set = set(simples)
    product: Dict[Tuple[str, str], str] = {}
    for a in simples:
        for b in simples:
            if len(a) + len(b) > n:
                continue
            ab = canonical[a + b] if a + b else ()
            if ab in simple_set:
                product[(name(a), name(b))] = name(ab)

    table = GermTable(
        elements=tuple(name(w) for w in simples),
        identity="e",
        delta="D",
        degree={name(w): len(w) for w in simples},
        product=product,
    )
    report = validate_germ(table)
    if not report.valid:
        raise InvalidStructure(f"structure germ is invalid: {report.violations[0]}")
    lattice = divisibility_lattice(table)
    if not (lattice.is_distributive and lattice.n == 2**n):
        raise InvalidStructure(f"structure germ interval on {lattice.n} elements is not Boolean")
    logger.info(f"Structure germ of a cycle set on {n} points has {len(simples)} simples")
    return table


def l_algebra_from_germ(germ: Germ, generators: Sequence[str]) -> LAlgebra:
    """Read the arrow and ``D`` of a germ off its generators.

    Raises:
        GermError: If the germ arrow or the duality leaves ``generators``.
    """
    index = {g: i for i, g in enumerate(generators)}
    n = len(generators)
    duality = germ.duality
    rows = []
    for x in generators:
        row = []
        for y in generators:
            if x == y:
                row.append(E)
                continue
            value = germ.garrow(x, y)
            if value not in index:
                raise GermError(f"{x} → {y} = {value} is not a generator")
            row.append(index[value])
        rows.append(tuple(row))
    try:
        d = tuple(index[duality[x]] for x in generators)
    except KeyError as exc:
        raise GermError(f"duality leaves the generators at {exc}") from exc
    return LAlgebra(n=n, arrow_table=tuple(rows), duality=d)

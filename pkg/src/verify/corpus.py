"""Germs and solutions shared by the suites."""

import logging
import random
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from src.germ import BUILTIN_GERMS, Germ, GermFraction, Word, reduce_fraction
from src.ybe import (
    CycleSet,
    RMap,
    cycle_set_from_solution,
    enumerate_solutions,
    isomorphism_classes,
    structure_germ,
)

logger = logging.getLogger(__name__)

CorpusEntry = Tuple[str, Germ, Optional[CycleSet]]


@lru_cache(maxsize=None)
def builtin_germ(name: str) -> Germ:
    return Germ(BUILTIN_GERMS[name]())


@lru_cache(maxsize=None)
def solutions_up_to(max_n: int) -> Tuple[RMap, ...]:
    """Every solution on at most ``max_n`` points, smallest carriers first."""
    result: List[RMap] = []
    for n in range(1, max_n + 1):
        result.extend(enumerate_solutions(n))
    return tuple(result)


@lru_cache(maxsize=None)
def structure_corpus(max_n: int, representatives_only: bool = False) -> Tuple[CorpusEntry, ...]:
    """Structure germs of the solutions on at most ``max_n`` points."""
    entries: List[CorpusEntry] = []
    for n in range(1, max_n + 1):
        solutions = enumerate_solutions(n)
        if representatives_only:
            solutions = [orbit[0] for orbit in isomorphism_classes(solutions)]
        for i, r in enumerate(solutions):
            c = cycle_set_from_solution(r)
            entries.append((f"ybe{n}_{i}", Germ(structure_germ(c, max_n=max_n)), c))
    logger.debug(f"Structure corpus up to n={max_n} has {len(entries)} germs")
    return tuple(entries)


def germ_corpus(max_n: int = 3, representatives_only: bool = True) -> List[CorpusEntry]:
    """Built-in germs followed by structure germs."""
    entries: List[CorpusEntry] = [(name, builtin_germ(name), None) for name in BUILTIN_GERMS]
    entries.extend(structure_corpus(max_n, representatives_only))
    return entries


def random_word(rng: random.Random, germ: Germ, max_length: int = 3) -> Word:
    """Right normal form of a random product of simples."""
    names = germ.names
    length = rng.randint(0, max_length)
    return germ.right_normal_form(rng.choice(names) for _ in range(length))


def random_fraction(rng: random.Random, germ: Germ, max_length: int = 2) -> GermFraction:
    return reduce_fraction(
        germ, random_word(rng, germ, max_length), random_word(rng, germ, max_length)
    )


def generator_words(
    germ: Germ, max_length: int, letters: Optional[Sequence[str]] = None
) -> List[Word]:
    """All words of length ``1..max_length`` over ``letters``.

    The default letters are every simple except ``e``, so each word is a product
    of germ elements that the normal form has to compose.
    """
    if letters is None:
        letters = [a for a in germ.names if a != germ.e]
    letters = list(letters)
    words: List[Word] = []
    layer: List[Word] = [()]
    for _ in range(max_length):
        layer = [w + (a,) for w in layer for a in letters]
        words.extend(layer)
    return words

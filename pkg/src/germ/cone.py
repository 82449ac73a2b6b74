"""The negative cone generated by a germ.

Elements of the cone are represented by their right normal form, a tuple of
germ element names ``(g_k, ..., g_1)`` whose product in that order is the
element, with no identity factors and every adjacent pair right-maximal:
``∂g_i ∨ g_(i+1) = e`` where ``∂a`` is the simple ``c`` with ``c·a = Δ``.
The empty tuple is the identity.
"""

import logging
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field

from src.errors import InvalidGerm, ProductUndefined, TooLarge, UnknownElement
from src.finlat import FiniteLattice, center, center_dual_atoms
from src.germ.table import GermTable, divisibility_lattice, validate_germ

logger = logging.getLogger(__name__)

Word = Tuple[str, ...]


class DegreeData(BaseModel):
    """Result of :meth:`Germ.degree_data`."""

    deg: int
    lam: int = Field(alias="lambda")
    iota: List[int]
    one_homogeneous: bool = Field(alias="oneHomogeneous")
    meet_irreducible: bool = Field(alias="meetIrreducible")
    dual_chain: bool = Field(alias="dualChain")

    model_config = {"populate_by_name": True}


class Germ:
    """A validated germ together with the cone operations it generates.

    Args:
        table: The germ table.
        validate: Run :func:`validate_germ` first (raises on failure).

    Raises:
        InvalidGerm: If validation is requested and fails.
    """

    def __init__(self, table: GermTable, validate: bool = True) -> None:
        if validate:
            report = validate_germ(table)
            if not report.valid:
                raise InvalidGerm(
                    f"{report.violations[0]} (witness: {', '.join(report.witness) or '-'})"
                )
        self.table = table
        self.e = table.identity
        self.delta = table.delta
        self.names = table.elements
        self.index = {x: i for i, x in enumerate(self.names)}
        self.lattice: FiniteLattice = divisibility_lattice(table)

        self._left_quot: Dict[Tuple[str, str], str] = {}
        self._right_quot: Dict[Tuple[str, str], str] = {}
        for (a, b), c in table.product.items():
            self._left_quot[(c, b)] = a
            self._right_quot[(c, a)] = b
        self._arrow_cache: Dict[Tuple[str, Word], Word] = {}
        self._rnf_cache: Dict[Word, Word] = {}

    def __repr__(self) -> str:
        return f"Germ({len(self.names)} elements, Δ={self.delta})"

    # Germ level

    def degree(self, a: str) -> int:
        return self.table.degree[a]

    def _id(self, a: str) -> int:
        return self.index[a]

    def gleq(self, a: str, b: str) -> bool:
        return self.lattice.leq(self._id(a), self._id(b))

    def gmeet(self, a: str, b: str) -> str:
        return self.names[self.lattice.meet(self._id(a), self._id(b))]

    def gjoin(self, a: str, b: str) -> str:
        return self.names[self.lattice.join(self._id(a), self._id(b))]

    def left_quot(self, a: str, b: str) -> Optional[str]:
        """The ``c`` with ``c·b = a``, if any."""
        return self._left_quot.get((a, b))

    def right_quot(self, a: str, b: str) -> Optional[str]:
        """The ``c`` with ``b·c = a``, if any."""
        return self._right_quot.get((a, b))

    def complement(self, a: str) -> str:
        """``∂a = s⁻¹a⁻¹``: the simple ``c`` with ``c·a = Δ``."""
        c = self.left_quot(self.delta, a)
        if c is None:
            raise ProductUndefined(f"{a} has no left complement to {self.delta}")
        return c

    def garrow(self, x: str, y: str) -> str:
        """Germ arrow ``x → y``: the ``c`` with ``c·x = x ∧ y``."""
        c = self.left_quot(self.gmeet(x, y), x)
        if c is None:
            raise ProductUndefined(f"{x} does not right-divide {self.gmeet(x, y)}")
        return c

    def conjugate(self, a: str) -> str:
        """``a″`` with ``a·Δ = Δ·a″``."""
        r = self.right_quot(self.delta, a)
        rr = self.right_quot(self.delta, r) if r is not None else None
        if rr is None:
            raise ProductUndefined(f"{a} has no right complement to {self.delta}")
        return rr

    @cached_property
    def dual_atoms(self) -> List[str]:
        """Simple elements of degree one, sorted by id."""
        return [self.names[i] for i in self.lattice.dual_atoms]

    @cached_property
    def opposite(self) -> "Germ":
        """The germ with transposed product, used for left normal forms."""
        return Germ(self.table.opposite(), validate=False)

    @cached_property
    def center(self) -> List[str]:
        return [self.names[i] for i in center(self.lattice)]

    @cached_property
    def central_dual_atoms(self) -> List[str]:
        """``X(Cent)``: the maximal central elements below ``e``."""
        ids = center_dual_atoms(self.lattice, [self._id(z) for z in self.center])
        return [self.names[i] for i in ids]

    def center_complement(self, a: str) -> str:
        """The complement of a central element inside the center."""
        for c in self.center:
            if self.gmeet(a, c) == self.delta and self.gjoin(a, c) == self.e:
                return c
        raise InvalidGerm(f"{a} has no complement in the center")

    @cached_property
    def duality(self) -> Dict[str, str]:
        """``D(a) = (∂a)′`` on the center."""
        return {a: self.center_complement(self.complement(a)) for a in self.center}

    # Words

    def check_word(self, word: Iterable[str]) -> Word:
        word = tuple(word)
        for x in word:
            if x not in self.index:
                raise UnknownElement(f"unknown germ element {x!r}")
        return word

    def deg(self, word: Sequence[str]) -> int:
        return sum(self.degree(x) for x in word)

    def right_normal_form(self, word: Iterable[str]) -> Word:
        """Right normal form of the product of ``word``.

        Adjacent pairs ``(a, b)`` violating right-maximality are rewritten to
        ``(a', h·b)`` with ``h = a ∨ ∂b`` and ``a = a'·h`` until none is left.

        Raises:
            UnknownElement: If the word uses a name that is not in the germ.
            ProductUndefined: If a required germ product is missing.
        """
        word = self.check_word(word)
        cached = self._rnf_cache.get(word)
        if cached is not None:
            return cached

        factors = [x for x in word if x != self.e]
        changed = True
        while changed:
            changed = False
            for i in range(len(factors) - 2, -1, -1):
                a, b = factors[i], factors[i + 1]
                h = self.gjoin(a, self.complement(b))
                if h == self.e:
                    continue
                rest = self.left_quot(a, h)
                merged = self.table.mul(h, b)
                if rest is None or merged is None:
                    raise ProductUndefined(f"cannot slide {h} from {a} into {b}")
                factors[i], factors[i + 1] = rest, merged
                changed = True
            factors = [x for x in factors if x != self.e]

        result = tuple(factors)
        self._rnf_cache[word] = result
        return result

    def left_normal_form(self, word: Iterable[str]) -> Word:
        """Left normal form ``(h_1, ..., h_k)``: ``h_1`` is the largest simple left divisor."""
        word = self.check_word(word)
        return tuple(reversed(self.opposite.right_normal_form(tuple(reversed(word)))))

    def mul(self, g: Sequence[str], h: Sequence[str]) -> Word:
        return self.right_normal_form(tuple(g) + tuple(h))

    def power(self, g: Sequence[str], n: int) -> Word:
        return self.right_normal_form(tuple(g) * n)

    def delta_power(self, n: int) -> Word:
        return (self.delta,) * n

    # Lattice operations of the cone

    def _arrow_simple(self, a: str, h: Word) -> Word:
        if a == self.e or not h:
            return h if a == self.e else ()
        key = (a, h)
        cached = self._arrow_cache.get(key)
        if cached is not None:
            return cached
        z, rest = h[-1], h[:-1]
        left = self._arrow_simple(self.garrow(z, a), rest)
        result = self.mul(left, (self.garrow(a, z),))
        self._arrow_cache[key] = result
        return result

    def arrow(self, g: Sequence[str], h: Sequence[str]) -> Word:
        """``g → h = (g ∧ h)g⁻¹``.

        Reduced to germ arrows with ``xy → z = x → (y → z)`` and
        ``x → yz = ((z → x) → y)(x → z)``.
        """
        g = self.right_normal_form(g)
        result = self.right_normal_form(h)
        for a in reversed(g):
            result = self._arrow_simple(a, result)
        return result

    def meet(self, g: Sequence[str], h: Sequence[str]) -> Word:
        """``g ∧ h = (g → h)·g``."""
        return self.mul(self.arrow(g, h), g)

    def join_with_cofactors(
        self, g: Sequence[str], h: Sequence[str]
    ) -> Tuple[Word, Word, Word]:
        """``(d, g', h')`` with ``d = g ∨ h``, ``g = g'·d`` and ``h = h'·d``.

        The join is peeled off from the right one simple factor at a time: the
        largest common simple right divisor of ``g`` and ``h`` is the germ join of
        their last normal form factors.
        """
        g = self.right_normal_form(g)
        h = self.right_normal_form(h)
        joined: List[str] = []
        while g and h:
            x = self.gjoin(g[-1], h[-1])
            if x == self.e:
                break
            g = self.right_normal_form(g[:-1] + (self.left_quot(g[-1], x),))
            h = self.right_normal_form(h[:-1] + (self.left_quot(h[-1], x),))
            joined.insert(0, x)
        return self.right_normal_form(joined), g, h

    def join(self, g: Sequence[str], h: Sequence[str]) -> Word:
        return self.join_with_cofactors(g, h)[0]

    def leq(self, g: Sequence[str], h: Sequence[str]) -> bool:
        """``g ≤ h`` iff ``g → h = e``."""
        return self.arrow(g, h) == ()

    def meet_all(self, words: Iterable[Sequence[str]]) -> Word:
        result: Optional[Word] = None
        for w in words:
            result = self.right_normal_form(w) if result is None else self.meet(result, w)
        return () if result is None else result

    def join_all(self, words: Iterable[Sequence[str]]) -> Word:
        result: Optional[Word] = None
        for w in words:
            result = self.right_normal_form(w) if result is None else self.join(result, w)
        if result is None:
            raise ProductUndefined("the empty join has no value in the cone")
        return result

    # Degree data and covers

    def upper_covers(self, g: Sequence[str]) -> List[Word]:
        """Elements covering ``g``: ``c⁻¹g`` for the dual atoms ``c`` left-dividing ``g``."""
        h = self.left_normal_form(g)
        if not h:
            return []
        first, rest = h[0], h[1:]
        covers = set()
        for c in self.dual_atoms:
            t = self.right_quot(first, c)
            if t is not None:
                covers.add(self.right_normal_form((t,) + rest))
        return sorted(covers, key=lambda w: (self.deg(w), w))

    def lower_covers(self, g: Sequence[str]) -> List[Word]:
        g = self.right_normal_form(g)
        return sorted({self.mul((c,), g) for c in self.dual_atoms}, key=lambda w: (self.deg(w), w))

    def is_dual_chain(self, g: Sequence[str]) -> bool:
        """Whether ``[g, e]`` is totally ordered."""
        level = {self.right_normal_form(g)}
        while level != {()}:
            nxt = set()
            for x in level:
                nxt.update(self.upper_covers(x))
            if len(nxt) != 1:
                return False
            level = nxt
        return True

    def degree_data(self, g: Sequence[str]) -> DegreeData:
        """Degree, length, index sequence and the one-dimensionality flags of ``g``.

        ``meetIrreducible`` is decided by counting upper covers; ``e`` is not meet
        irreducible while the other two flags hold for it vacuously.
        """
        nf = self.right_normal_form(g)
        iota = [self.degree(x) for x in reversed(nf)]
        return DegreeData(
            deg=sum(iota),
            lam=len(nf),
            iota=iota,
            one_homogeneous=all(i == 1 for i in iota),
            meet_irreducible=bool(nf) and len(self.upper_covers(nf)) == 1,
            dual_chain=self.is_dual_chain(nf),
        )

    def soc(self, g: Sequence[str]) -> Word:
        """Join of the upper covers of ``g``: ``h_2 ⋯ h_k`` of the left normal form."""
        h = self.left_normal_form(g)
        return self.right_normal_form(h[1:])

    def rad_top(self, g: Sequence[str]) -> Word:
        """``Rad_[g,e](e)``: the last right normal factor ``g_1 = g ∨ Δ``."""
        nf = self.right_normal_form(g)
        return nf[-1:]

    def interval_rad(self, g: Sequence[str]) -> Word:
        """Meet of the dual atoms of ``[g, e]``, computed by cover enumeration."""
        return self.meet_all((c,) for c in self.dual_atoms if self.leq(g, (c,)))

    def closed_formula_normal_form(self, g: Sequence[str]) -> Word:
        """Normal form factors ``(g ∨ Δ^i)(g ∨ Δ^(i−1))⁻¹`` from cone joins."""
        nf = self.right_normal_form(g)
        factors: List[str] = []
        previous: Word = ()
        for i in range(1, len(nf) + 1):
            current = self.join(nf, self.delta_power(i))
            step = self.arrow(previous, current)
            if len(step) != 1:
                raise ProductUndefined(
                    f"closed formula produced the non-simple factor {step} for {nf}"
                )
            factors.append(step[0])
            previous = current
        return tuple(reversed(factors))

    def elements_up_to(self, max_deg: int, max_enum: int = 200_000) -> List[Word]:
        """All cone elements of degree ``≤ max_deg``, sorted by degree then name."""
        found = {()}
        frontier = {()}
        for _ in range(max_deg):
            frontier = {self.mul((c,), g) for g in frontier for c in self.dual_atoms}
            found.update(frontier)
            if len(found) > max_enum:
                raise TooLarge(
                    f"more than {max_enum} cone elements of degree <= {max_deg}"
                )
        return sorted(found, key=lambda w: (self.deg(w), w))


def format_word(word: Sequence[str]) -> str:
    """Display form: factors separated by ``·``, ``e`` for the empty word."""
    return "·".join(word) if word else "e"

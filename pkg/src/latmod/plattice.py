"""R-lattices in Q^delta for R = Z localized at p.

A lattice is stored as ``p^(-scale) · colspan(H)`` where ``H`` is its canonical
lower-triangular form: diagonal ``p^(a_i)``, every entry below the diagonal in
row ``i`` reduced to ``[0, p^(a_i))``, and some entry a p-adic unit (content 0),
so that ``scale`` is the least ``m`` with ``p^m A ⊆ R^delta``. Equal lattices
have equal ``(scale, H)``, which makes :class:`PLattice` hashable by value.

Meets go through dual lattices, ``A ∩ B = (A* + B*)*`` with ``A*`` spanned by
the rows of ``p^scale · H^(-1)``, so joins and meets share the triangular
reduction.
"""

import itertools
import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict
from sympy import ZZ, Matrix
from sympy.matrices.normalforms import smith_normal_form

from src.errors import NotFullRank, ParamMismatch
from src.latmod.params import BeamParams, Rational, is_integral, valuation

logger = logging.getLogger(__name__)

Vector = List[Fraction]


@dataclass(frozen=True)
class PLattice:
    """The lattice ``p^(-scale) · colspan(H)`` in canonical form.

    Build instances with :func:`canonicalize`, :func:`unit` or :func:`frozen`.
    """

    params: BeamParams
    scale: int
    H: Tuple[Tuple[int, ...], ...]

    @property
    def exponents(self) -> Tuple[int, ...]:
        """Diagonal exponents ``a_i`` of the canonical form."""
        p = self.params.p
        return tuple(valuation(self.H[i][i], p) for i in range(self.params.delta))

    @property
    def deg(self) -> int:
        """Degree relative to R^delta: ``Σ a_i − delta · scale``."""
        return sum(self.exponents) - self.params.delta * self.scale

    @cached_property
    def elementary_exponents(self) -> Tuple[int, ...]:
        """Valuations of the elementary divisors of ``H``, largest first."""
        snf = smith_normal_form(Matrix(self.H), domain=ZZ)
        p = self.params.p
        exps = (valuation(int(snf[i, i]), p) for i in range(self.params.delta))
        return tuple(sorted(exps, reverse=True))

    @property
    def bound(self) -> int:
        """Least ``n`` with ``p^n R^delta ⊆ A ⊆ p^(-n) R^delta``.

        ``H`` has content 0, so ``A ⊆ p^(-n) R^delta`` exactly when ``n ≥ scale``,
        and ``p^n R^delta ⊆ A`` exactly when ``n + scale`` reaches the largest
        elementary divisor exponent of ``H``.
        """
        return max(self.scale, self.elementary_exponents[0] - self.scale)

    def basis(self) -> List[Vector]:
        """Columns of ``p^(-scale) · H`` as rational vectors."""
        factor = Fraction(self.params.p) ** (-self.scale)
        delta = self.params.delta
        return [[factor * self.H[i][j] for i in range(delta)] for j in range(delta)]

    @cached_property
    def _h_inverse(self) -> Tuple[Tuple[Fraction, ...], ...]:
        inv = Matrix(self.H).inv()
        delta = self.params.delta
        return tuple(
            tuple(Fraction(int(inv[i, j].p), int(inv[i, j].q)) for j in range(delta))
            for i in range(delta)
        )

    def coordinates(self, v: Sequence[Rational]) -> Vector:
        """Coordinates of ``v`` in the basis returned by :meth:`basis`."""
        factor = Fraction(self.params.p) ** self.scale
        inv = self._h_inverse
        delta = self.params.delta
        return [
            factor * sum(inv[i][k] * Fraction(v[k]) for k in range(delta))
            for i in range(delta)
        ]

    def contains(self, v: Sequence[Rational]) -> bool:
        p = self.params.p
        return all(is_integral(c, p) for c in self.coordinates(v))

    def dual(self) -> "PLattice":
        """``A* = {y : y·x ∈ R for all x ∈ A}``, spanned by the rows of ``p^scale H^(-1)``."""
        factor = Fraction(self.params.p) ** self.scale
        rows = [[factor * x for x in row] for row in self._h_inverse]
        return canonicalize(self.params, rows)

    def to_dict(self) -> Dict[str, object]:
        return {
            "p": self.params.p,
            "delta": self.params.delta,
            "scale": self.scale,
            "H": [list(row) for row in self.H],
        }

    def sort_key(self) -> Tuple[int, int, Tuple[Tuple[int, ...], ...]]:
        return (-self.deg, self.scale, self.H)

    def __str__(self) -> str:
        rows = "; ".join(" ".join(str(x) for x in row) for row in self.H)
        return f"p^{-self.scale}[{rows}]"


def _check_same(a: PLattice, b: PLattice) -> None:
    if a.params != b.params:
        raise ParamMismatch(f"lattices over {a.params} and {b.params} cannot be combined")


def canonicalize(params: BeamParams, generators: Iterable[Sequence[Rational]]) -> PLattice:
    """Canonical form of the R-span of ``generators``.

    Args:
        params: Beam parameters.
        generators: Rational vectors of length ``delta`` (p-power denominators;
            other denominators are units of R and are accepted as well).

    Returns:
        PLattice: The unique canonical representative; idempotent on its own basis.

    Raises:
        NotFullRank: If the generators do not span Q^delta.
    """
    p, delta = params.p, params.delta
    vectors = []
    for g in generators:
        if len(g) != delta:
            raise NotFullRank(f"generator {list(g)} does not have length {delta}")
        vectors.append([Fraction(x) for x in g])

    nonzero = [x for v in vectors for x in v if x != 0]
    if not nonzero:
        raise NotFullRank("generators are all zero")
    scale = -min(valuation(x, p) for x in nonzero)
    shift = Fraction(p) ** scale
    remaining = [[shift * x for x in v] for v in vectors if any(v)]

    pivots: List[Vector] = []
    exps: List[int] = []
    for row in range(delta):
        candidates = [idx for idx, v in enumerate(remaining) if v[row] != 0]
        if not candidates:
            raise NotFullRank(f"generators do not span Q^{delta} (row {row} is empty)")
        best = min(candidates, key=lambda idx: valuation(remaining[idx][row], p))
        a = valuation(remaining[best][row], p)
        unit_part = remaining[best][row] / Fraction(p) ** a
        pivot = [x / unit_part for x in remaining[best]]

        reduced = []
        for idx, v in enumerate(remaining):
            if idx == best:
                continue
            if v[row] != 0:
                q = v[row] / pivot[row]
                v = [x - q * y for x, y in zip(v, pivot)]
            if any(v):
                reduced.append(v)
        remaining = reduced
        pivots.append(pivot)
        exps.append(a)

    for j in range(delta):
        column = pivots[j]
        for i in range(j + 1, delta):
            modulus = p ** exps[i]
            entry = column[i]
            if modulus == 1:
                residue = 0
            else:
                residue = (entry.numerator * pow(entry.denominator, -1, modulus)) % modulus
            q = (entry - residue) / modulus
            if q:
                column = [x - q * y for x, y in zip(column, pivots[i])]
        pivots[j] = column

    H = tuple(
        tuple(int(pivots[j][i]) for j in range(delta)) for i in range(delta)
    )
    return PLattice(params=params, scale=scale, H=H)


def from_hnf(params: BeamParams, scale: int, H: Sequence[Sequence[int]]) -> PLattice:
    """Build a lattice from an already reduced triangular matrix.

    The matrix only has to satisfy the triangular and residue conditions; a common
    factor of all entries is moved into the scale.
    """
    p = params.p
    content = min(valuation(x, p) for row in H for x in row if x != 0)
    if content == 0:
        return PLattice(params=params, scale=scale, H=tuple(tuple(row) for row in H))
    factor = p**content
    return PLattice(
        params=params,
        scale=scale - content,
        H=tuple(tuple(x // factor for x in row) for row in H),
    )


def unit(params: BeamParams) -> PLattice:
    """The identity ``e = R^delta``."""
    delta = params.delta
    identity = tuple(tuple(int(i == j) for j in range(delta)) for i in range(delta))
    return PLattice(params=params, scale=0, H=identity)


def frozen(params: BeamParams, n: int) -> PLattice:
    """``Φ_n(z) = p^n R^delta`` of degree ``n · delta``."""
    return replace(unit(params), scale=-n)


def join(a: PLattice, b: PLattice) -> PLattice:
    """Module sum ``A + B``."""
    _check_same(a, b)
    return canonicalize(a.params, a.basis() + b.basis())


def meet(a: PLattice, b: PLattice) -> PLattice:
    """Module intersection ``A ∩ B`` computed as ``(A* + B*)*``."""
    _check_same(a, b)
    return join(a.dual(), b.dual()).dual()


def leq(a: PLattice, b: PLattice) -> bool:
    """``A ⊆ B``: the matrix ``H_B^(-1) H_A`` (with scales) is p-integral."""
    _check_same(a, b)
    p = a.params.p
    return all(is_integral(c, p) for v in a.basis() for c in b.coordinates(v))


def membership(a: PLattice, v: Sequence[Rational]) -> bool:
    """Exact test ``v ∈ A``.

    Raises:
        NotFullRank: If ``v`` does not have length ``delta``.
    """
    if len(v) != a.params.delta:
        raise NotFullRank(f"vector {list(v)} does not have length {a.params.delta}")
    return a.contains(v)


def rad(a: PLattice) -> PLattice:
    """``Rad(A) = pA``."""
    return replace(a, scale=a.scale - 1)


def soc(a: PLattice) -> PLattice:
    """``Soc(A) = p^(-1) A``."""
    return replace(a, scale=a.scale + 1)


def meet_all(params: BeamParams, items: Iterable[PLattice]) -> PLattice:
    """Meet of a non-empty family."""
    result = None
    for item in items:
        result = item if result is None else meet(result, item)
    if result is None:
        raise ParamMismatch("the empty meet is not a lattice")
    return result


def join_all(items: Iterable[PLattice]) -> PLattice:
    result = None
    for item in items:
        result = item if result is None else join(result, item)
    if result is None:
        raise ParamMismatch("the empty join is not a lattice")
    return result


class LatticeOps(BaseModel):
    """Result of :func:`lattice_ops`."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    meet: PLattice
    join: PLattice
    leq: bool
    deg_meet: int
    deg_join: int


def lattice_ops(a: PLattice, b: PLattice) -> LatticeOps:
    """Meet, join and order of two lattices with the degrees of meet and join."""
    m, j = meet(a, b), join(a, b)
    if a.deg + b.deg != m.deg + j.deg:
        logger.error(f"Parallelogram identity fails for {a} and {b}")
    return LatticeOps(meet=m, join=j, leq=leq(a, b), deg_meet=m.deg, deg_join=j.deg)


def soc_rad(a: PLattice) -> Tuple[PLattice, PLattice]:
    """``(Soc(A), Rad(A))``."""
    return soc(a), rad(a)


def _lines(p: int, delta: int) -> List[Tuple[int, ...]]:
    """Representatives of the lines of F_p^delta (first nonzero coordinate 1)."""
    result = []
    for c in itertools.product(range(p), repeat=delta):
        nonzero = [x for x in c if x]
        if nonzero and nonzero[0] == 1:
            result.append(c)
    return result


def upper_covers(a: PLattice) -> List[PLattice]:
    """All ``B ⊃ A`` with ``B/A`` simple: ``A + R·v/p`` for the lines ``v`` of ``A/pA``."""
    p, delta = a.params.p, a.params.delta
    basis = a.basis()
    covers = set()
    for c in _lines(p, delta):
        v = [sum(Fraction(c[j]) * basis[j][i] for j in range(delta)) / p for i in range(delta)]
        covers.add(canonicalize(a.params, basis + [v]))
    return sorted(covers, key=PLattice.sort_key)


def lower_covers(a: PLattice) -> List[PLattice]:
    """All maximal sublattices: kernels of the nonzero functionals on ``A/pA``."""
    p, delta = a.params.p, a.params.delta
    basis = a.basis()
    scaled = [[p * x for x in b] for b in basis]
    covers = set()
    for f in _lines(p, delta):
        t = next(i for i, x in enumerate(f) if x)
        kernel = [
            [basis[j][i] - f[j] * basis[t][i] for i in range(delta)]
            for j in range(delta)
            if j != t
        ]
        covers.add(canonicalize(a.params, scaled + kernel))
    return sorted(covers, key=PLattice.sort_key)


def cone_upper_covers(a: PLattice) -> List[PLattice]:
    """Upper covers of ``A`` that stay inside ``R^delta``."""
    e = unit(a.params)
    return [b for b in upper_covers(a) if leq(b, e)]

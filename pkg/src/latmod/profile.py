"""Invariants and enumerations of lattices inside the cone ``R^delta``."""

import itertools
import logging
import random
from collections import deque
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field
from sympy import Matrix

from src.errors import NotInNegativeCone, TooLarge
from src.finlat import FiniteLattice, build_lattice
from src.latmod.params import BeamParams
from src.latmod.plattice import (
    PLattice,
    canonicalize,
    cone_upper_covers,
    from_hnf,
    frozen,
    join,
    join_all,
    leq,
    lower_covers,
    meet,
    meet_all,
    rad,
    soc,
    unit,
    upper_covers,
)

logger = logging.getLogger(__name__)


class SNFProfile(BaseModel):
    """Result of :func:`snf_profile`."""

    exponents: List[int]
    deg: int
    lam: int = Field(alias="lambda")
    iota: List[int]
    iota_conjugate: List[int] = Field(alias="iotaConjugate")
    one_homogeneous: bool = Field(alias="oneHomogeneous")
    meet_irreducible: bool = Field(alias="meetIrreducible")
    dual_chain: bool = Field(alias="dualChain")

    model_config = {"populate_by_name": True}


def in_cone(a: PLattice) -> bool:
    return leq(a, unit(a.params))


def _require_cone(a: PLattice) -> None:
    if not in_cone(a):
        raise NotInNegativeCone(f"{a} is not contained in R^{a.params.delta}")


def snf_exponents(a: PLattice) -> List[int]:
    """Smith normal form valuations ``a_1 ≥ ... ≥ a_delta`` of ``A ⊆ R^delta``."""
    _require_cone(a)
    return [e - a.scale for e in a.elementary_exponents]


def iota_by_joins(a: PLattice, lam: int) -> List[int]:
    """``ι_i = deg(A + p^i R) − deg(A + p^(i−1) R)`` for ``i = 1..lam``."""
    degrees = [join(a, frozen(a.params, i)).deg for i in range(lam + 1)]
    return [degrees[i] - degrees[i - 1] for i in range(1, lam + 1)]


def conjugate_partition(exps: Sequence[int]) -> List[int]:
    lam = max(exps, default=0)
    return [sum(1 for x in exps if x >= i) for i in range(1, lam + 1)]


def is_dual_chain(a: PLattice) -> bool:
    """Whether ``[A, R^delta]`` is totally ordered, by walking cover levels upward."""
    level = [a]
    e = unit(a.params)
    while level[0] != e:
        nxt = set()
        for x in level:
            nxt.update(cone_upper_covers(x))
        if len(nxt) != 1:
            return False
        level = list(nxt)
    return True


def snf_profile(a: PLattice) -> SNFProfile:
    """Degree data of ``A ⊆ R^delta``.

    Args:
        a: A lattice in the negative cone.

    Returns:
        SNFProfile: SNF exponents, degree, ``λ = a_1``, the index sequence computed
        from joins with ``p^i R^delta`` and as the conjugate partition, and the three
        equivalent one-dimensionality flags.

    Raises:
        NotInNegativeCone: If ``A`` is not contained in ``R^delta``.
    """
    exps = snf_exponents(a)
    lam = exps[0] if exps else 0
    iota = iota_by_joins(a, lam)
    conj = conjugate_partition(exps)
    if iota != conj:
        logger.error(f"Index sequences disagree for {a}: joins {iota}, conjugate {conj}")
    return SNFProfile(
        exponents=exps,
        deg=sum(exps),
        lam=lam,
        iota=iota,
        iota_conjugate=conj,
        one_homogeneous=all(i in (0, 1) for i in iota),
        meet_irreducible=sum(1 for x in exps if x > 0) == 1,
        dual_chain=is_dual_chain(a),
    )


class StrongInterval(BaseModel):
    """``[p^n R^delta, R^delta]`` as a finite lattice; id ``i`` is ``elements[i]``."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    params: BeamParams
    n: int
    lattice: FiniteLattice
    elements: List[PLattice]

    def index(self) -> Dict[PLattice, int]:
        return {x: i for i, x in enumerate(self.elements)}


def interval_elements(params: BeamParams, n: int, max_enum: int = 200_000) -> List[PLattice]:
    """All ``A`` with ``p^n R^delta ⊆ A ⊆ R^delta``, sorted by decreasing degree."""
    start = frozen(params, n)
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in cone_upper_covers(x):
            if y not in seen:
                seen.add(y)
                if len(seen) > max_enum:
                    raise TooLarge(
                        f"interval [p^{n}R^{params.delta}, R^{params.delta}] over "
                        f"p={params.p} has more than {max_enum} elements"
                    )
                queue.append(y)
    return sorted(seen, key=PLattice.sort_key)


def strong_interval(params: BeamParams, n: int, max_enum: int = 200_000) -> StrongInterval:
    """The strong interval ``[s^(-n), e]`` of a single beam as a :class:`FiniteLattice`.

    Raises:
        TooLarge: If the interval has more than ``max_enum`` elements.
    """
    if n < 0:
        raise TooLarge(f"interval exponent must be non-negative, got {n}")
    elements = interval_elements(params, n, max_enum)
    index = {x: i for i, x in enumerate(elements)}
    covers = []
    for x in elements:
        for y in cone_upper_covers(x):
            if y in index:
                covers.append((index[x], index[y]))
    lattice = build_lattice(covers, n=len(elements))
    logger.info(
        f"Strong interval n={n} over {params} has {len(elements)} elements"
    )
    return StrongInterval(params=params, n=n, lattice=lattice, elements=elements)


def cone_elements(
    params: BeamParams, max_deg: int, max_enum: int = 200_000
) -> Iterator[PLattice]:
    """Every ``A ⊆ R^delta`` with ``deg(A) ≤ max_deg``, one canonical form each.

    Triangular forms with diagonal ``p^(a_i)`` and entries of row ``i`` in
    ``[0, p^(a_i))`` are in bijection with these lattices.
    """
    p, delta = params.p, params.delta
    count = 0
    for exps in itertools.product(range(max_deg + 1), repeat=delta):
        if sum(exps) > max_deg:
            continue
        slots = [(i, j) for i in range(delta) for j in range(i)]
        ranges = [range(p ** exps[i]) for i, _ in slots]
        for values in itertools.product(*ranges):
            H = [[0] * delta for _ in range(delta)]
            for i in range(delta):
                H[i][i] = p ** exps[i]
            for (i, j), value in zip(slots, values):
                H[i][j] = value
            count += 1
            if count > max_enum:
                raise TooLarge(
                    f"more than {max_enum} lattices of degree <= {max_deg} over {params}"
                )
            yield from_hnf(params, 0, H)


def random_plattice(
    rng: random.Random, params: BeamParams, max_exp: int = 3, cone: bool = False
) -> PLattice:
    """A random lattice with exponents ``≤ max_exp`` (inside ``R^delta`` if ``cone``)."""
    p, delta = params.p, params.delta
    H = [[0] * delta for _ in range(delta)]
    for i in range(delta):
        a = rng.randint(0, max_exp)
        H[i][i] = p**a
        for j in range(i):
            H[i][j] = rng.randrange(p**a)
    scale = 0 if cone else rng.randint(-max_exp, max_exp)
    return from_hnf(params, scale, H)


def random_unimodular(rng: random.Random, params: BeamParams, bound: int = 3) -> Matrix:
    """An integer matrix invertible over ``Z_(p)`` (determinant prime to ``p``)."""
    delta = params.delta
    while True:
        m = Matrix(
            delta, delta, lambda i, j: rng.randint(-bound, bound)
        )
        det = int(m.det())
        if det % params.p != 0:
            return m


def mixed_generators(
    rng: random.Random, a: PLattice, extra: int = 1
) -> List[List]:
    """A different generating set of ``A``: unimodular mixing plus redundant vectors."""
    basis = a.basis()
    delta = a.params.delta
    u = random_unimodular(rng, a.params)
    mixed = [
        [sum(int(u[k, j]) * basis[k][i] for k in range(delta)) for i in range(delta)]
        for j in range(delta)
    ]
    for _ in range(extra):
        coeffs = [rng.randint(-3, 3) for _ in range(delta)]
        mixed.append(
            [sum(coeffs[k] * basis[k][i] for k in range(delta)) for i in range(delta)]
        )
    rng.shuffle(mixed)
    return mixed


def partitions_up_to(max_deg: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Nonincreasing exponent tuples of length ``parts`` with sum ``≤ max_deg``."""
    for exps in itertools.combinations_with_replacement(range(max_deg, -1, -1), parts):
        if sum(exps) <= max_deg:
            yield exps


def type_representatives(
    rng: random.Random, params: BeamParams, max_deg: int, mixes: int = 2
) -> List[PLattice]:
    """Lattices of every SNF type up to ``max_deg``.

    Each type contributes its diagonal lattice and ``mixes`` images under random
    unimodular matrices, which share the type but not the triangular shape.
    """
    result = []
    for exps in partitions_up_to(max_deg, params.delta):
        diagonal = [
            [params.p ** exps[i] if i == j else 0 for i in range(params.delta)]
            for j in range(params.delta)
        ]
        result.append(canonicalize(params, diagonal))
        for _ in range(mixes):
            u = random_unimodular(rng, params)
            columns = [
                [int(u[i, j]) * params.p ** exps[j] for i in range(params.delta)]
                for j in range(params.delta)
            ]
            result.append(canonicalize(params, columns))
    return result


def dual_basis(params: BeamParams, n: int) -> List[PLattice]:
    """``y_i = {x ∈ R^delta : x_i ≡ 0 mod p^n}`` for ``i = 1..delta``."""
    delta = params.delta
    result = []
    for i in range(delta):
        gens = [[int(k == j) for k in range(delta)] for j in range(delta)]
        gens[i][i] = params.p**n
        result.append(canonicalize(params, gens))
    return result


class DualBasisCheck(BaseModel):
    meet_irreducible: bool
    degrees_ok: bool
    independent: bool
    meet_is_frozen: bool

    @property
    def ok(self) -> bool:
        return (
            self.meet_irreducible
            and self.degrees_ok
            and self.independent
            and self.meet_is_frozen
        )


def dually_independent(params: BeamParams, family: Sequence[PLattice]) -> bool:
    """``(⋀A) ∨ (⋀B) = ⋀(A ∩ B)`` for all subfamilies, with ``⋀∅ = e``."""
    k = len(family)
    subset_meet = [unit(params)] * (1 << k)
    for mask in range(1, 1 << k):
        low = (mask & -mask).bit_length() - 1
        subset_meet[mask] = meet(subset_meet[mask & (mask - 1)], family[low])
    return all(
        join(subset_meet[a], subset_meet[b]) == subset_meet[a & b]
        for a in range(1 << k)
        for b in range(1 << k)
    )


def check_dual_basis(params: BeamParams, n: int) -> DualBasisCheck:
    ys = dual_basis(params, n)
    profiles = [snf_profile(y) for y in ys]
    return DualBasisCheck(
        meet_irreducible=all(pr.meet_irreducible for pr in profiles),
        degrees_ok=all(y.deg == n for y in ys),
        independent=dually_independent(params, ys),
        meet_is_frozen=meet_all(params, ys) == frozen(params, n),
    )


class DirectLimitReport(BaseModel):
    cases: int = 0
    failures: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def direct_limit_check(
    params: BeamParams,
    depth: int,
    max_enum: int = 200_000,
    rng: Optional[random.Random] = None,
    samples: int = 50,
) -> DirectLimitReport:
    """Check that the truncated intervals form a direct system exhausting the lattices.

    The interval ``[p^m R, R]`` sits inside ``[p^n R, R]`` for ``m ≤ n`` as the
    upper interval above ``p^m R``: covers and lattice operations must agree. Every
    lattice ``A`` with bound ``≤ depth`` must arise as ``p^(-depth) B`` for ``B`` in
    the interval of exponent ``2·depth``.
    """
    report = DirectLimitReport()
    intervals = [strong_interval(params, n, max_enum) for n in range(depth + 1)]
    for m in range(depth + 1):
        small = intervals[m]
        for n in range(m + 1, depth + 1):
            big = intervals[n]
            index = big.index()
            report.cases += 1
            if any(x not in index for x in small.elements):
                report.failures.append(f"[p^{m}R, R] is not contained in [p^{n}R, R]")
                continue
            emb = [index[x] for x in small.elements]
            if sorted(emb) != sorted(big.lattice.upset(index[frozen(params, m)])):
                report.failures.append(f"[p^{m}R, R] is not the upper interval of p^{m}R")
            for x in small.lattice.elements:
                for y in small.lattice.elements:
                    if emb[small.lattice.join(x, y)] != big.lattice.join(emb[x], emb[y]):
                        report.failures.append(f"joins disagree between levels {m} and {n}")
                    if emb[small.lattice.meet(x, y)] != big.lattice.meet(emb[x], emb[y]):
                        report.failures.append(f"meets disagree between levels {m} and {n}")

    deep = set(interval_elements(params, 2 * depth, max_enum))
    rng = rng or random.Random(0)
    for _ in range(samples):
        a = random_plattice(rng, params, max_exp=depth)
        if a.bound > depth:
            continue
        report.cases += 1
        shifted = a
        for _ in range(depth):
            shifted = rad(shifted)
        if shifted not in deep:
            report.failures.append(f"{a} does not arise from the truncation at {2 * depth}")
            continue
        back = shifted
        for _ in range(depth):
            back = soc(back)
        if back != a:
            report.failures.append(f"soc^{depth} rad^{depth} does not return {a}")
    return report


def s_join_atoms(params: BeamParams) -> bool:
    """The join of the atoms above ``e`` is ``Soc(e) = p^(-1) R^delta``."""
    e = unit(params)
    return join_all(upper_covers(e)) == soc(e)


def conjugation_is_identity(a: PLattice) -> bool:
    """Soc and Rad are mutually inverse on ``A``."""
    return soc(rad(a)) == a and rad(soc(a)) == a


def lower_cover_rad(a: PLattice) -> PLattice:
    """``⋀`` of the lower covers of ``A``; equals ``Rad(A)``."""
    return meet_all(a.params, lower_covers(a))


def profiles_by_type(
    params: BeamParams, max_deg: int, max_enum: int = 200_000
) -> Dict[Tuple[int, ...], int]:
    """Number of cone lattices per SNF type up to ``max_deg``."""
    counts: Dict[Tuple[int, ...], int] = {}
    for a in cone_elements(params, max_deg, max_enum):
        key = tuple(snf_exponents(a))
        counts[key] = counts.get(key, 0) + 1
    return counts

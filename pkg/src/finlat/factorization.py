"""Extension of a factorization along a chain of principal downsets.

Given lattices ``K = L(1) ⊆ L(2) ⊆ ... ⊆ M`` where each one is the downset of its
top inside the next, and a factorization of ``K`` induced from each larger
lattice, the factors of ``K`` are extended to ``M``. With ``1_K = ⋀ ε_i``
(components of ``1_K`` in ``M``) and ``ε̄_i = ⋀_{j≠i} ε_j``, the extension of
factor ``i`` is ``{ε̄_i ∧ y : y ∈ M_i}`` and the coordinates of ``x`` are
``ψ_i(x) = x_i ∧ ε̄_i``. The coordinates computed in an intermediate lattice must
agree with the ones computed in ``M``.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from src.errors import FactorizationMismatch, NotADownset
from src.finlat.analysis import Decomposition, decompose
from src.finlat.lattice import FiniteLattice

logger = logging.getLogger(__name__)


def _check_downset(small: FiniteLattice, big: FiniteLattice, emb: Sequence[int]) -> None:
    if len(emb) != small.n or len(set(emb)) != small.n:
        raise NotADownset("embedding is not injective")
    image = set(emb)
    if image != set(big.downset(emb[small.top])):
        raise NotADownset("embedded lattice is not the downset of its top")
    for lo, hi in small.covers:
        if not big.lt(emb[lo], emb[hi]):
            raise NotADownset(f"embedding does not preserve the cover ({lo}, {hi})")


def _coordinates(
    lattice: FiniteLattice, dec: Decomposition, top_k: int, order: Sequence[int]
) -> Tuple[List[int], Dict[int, Tuple[int, ...]]]:
    """The ε̄ elements and ψ coordinates of every element of ``lattice``."""
    eps = dec.witness[top_k]
    k = len(eps)
    eps_bar = [lattice.meet_all(eps[j] for j in range(k) if j != i) for i in range(k)]
    psi = {
        x: tuple(lattice.meet(dec.witness[x][i], eps_bar[i]) for i in order)
        for x in lattice.elements
    }
    return [eps_bar[i] for i in order], psi


def _match_factors(
    base: Decomposition,
    dec: Decomposition,
    emb: Sequence[int],
    top_k: int,
) -> List[int]:
    """For each base factor, the index of the factor of ``dec`` inducing it."""
    eps = dec.witness[top_k]
    k = len(eps)
    induced = []
    for j in range(k):
        members = sorted(
            x
            for x in range(len(emb))
            if all(dec.witness[emb[x]][l] == eps[l] for l in range(k) if l != j)
        )
        induced.append(members)

    order = []
    for factor in base.factors:
        matches = [j for j in range(k) if induced[j] == sorted(factor)]
        if len(matches) != 1:
            raise FactorizationMismatch(
                f"base factor {sorted(factor)} is not induced by exactly one factor"
            )
        order.append(matches[0])
    return order


def extend_factorization(
    chain: Sequence[FiniteLattice],
    base: Decomposition,
    embeddings: Optional[Sequence[Sequence[int]]] = None,
) -> Decomposition:
    """Extend the factorization ``base`` of ``chain[0]`` to the last lattice.

    Args:
        chain: Increasing lattices, each a principal downset of the next.
        base: Factorization of ``chain[0]`` (typically ``decompose(chain[0])``).
        embeddings: ``embeddings[j]`` maps ids of ``chain[j]`` to ids of
            ``chain[j+1]``; identity maps when omitted.

    Returns:
        Decomposition: Extended factors of the largest lattice with the ψ
        coordinates as witness (an external factorization, ``internal=False``).

    Raises:
        NotADownset: If some embedding is not onto a principal downset.
        FactorizationMismatch: If factor counts differ, a base factor is not induced,
            the restriction lemma fails, or coordinates disagree along the chain.
    """
    if len(chain) == 1:
        return base
    if embeddings is None:
        embeddings = [list(range(lat.n)) for lat in chain[:-1]]
    if len(embeddings) != len(chain) - 1:
        raise NotADownset("need one embedding per consecutive pair of lattices")

    for j, emb in enumerate(embeddings):
        _check_downset(chain[j], chain[j + 1], emb)

    # to_big[j]: ids of chain[j] -> ids of chain[-1]; from_k[j]: ids of K -> chain[j]
    to_big: List[List[int]] = [list(range(chain[-1].n))]
    for j in range(len(chain) - 2, -1, -1):
        to_big.insert(0, [to_big[0][embeddings[j][x]] for x in range(chain[j].n)])
    from_k: List[List[int]] = [list(range(chain[0].n))]
    for j in range(len(chain) - 1):
        from_k.append([embeddings[j][x] for x in from_k[-1]])

    k = len(base.factors)
    big = chain[-1]
    reference: Optional[Dict[int, Tuple[int, ...]]] = None
    result: Optional[Decomposition] = None

    for j in range(len(chain) - 1, 0, -1):
        lattice = chain[j]
        dec = decompose(lattice)
        if len(dec.factors) != k:
            raise FactorizationMismatch(
                f"lattice {j} has {len(dec.factors)} factors, base has {k}"
            )
        top_k = from_k[j][chain[0].top]
        order = _match_factors(base, dec, from_k[j], top_k)
        eps_bar, psi = _coordinates(lattice, dec, top_k, order)

        if j == len(chain) - 1:
            reference = psi
            factors = []
            for i, slot in enumerate(order):
                extended = sorted({big.meet(eps_bar[i], y) for y in dec.factors[slot]})
                restricted = sorted(set(extended) & set(from_k[j]))
                expected = sorted(from_k[j][x] for x in base.factors[i])
                if restricted != expected:
                    raise FactorizationMismatch(
                        f"extended factor {i} meets the base lattice in {restricted}, "
                        f"expected {expected}"
                    )
                factors.append(extended)
            result = Decomposition(factors=factors, witness=psi, internal=False)
        else:
            assert reference is not None
            for x in lattice.elements:
                mine = tuple(to_big[j][c] for c in psi[x])
                if mine != reference[to_big[j][x]]:
                    raise FactorizationMismatch(
                        f"coordinates of element {x} in lattice {j} disagree with the "
                        "largest lattice"
                    )

    logger.debug(f"Extended a {k}-factor base along a chain of {len(chain)} lattices")
    assert result is not None
    return result

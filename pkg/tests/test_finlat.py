import pytest

from src.errors import CyclicCovers, NotALattice, NotModular, TooLarge
from src.finlat import (
    boolean,
    build_lattice,
    center,
    center_dual_atoms,
    chain,
    classify,
    decompose,
    dual_frame_check,
    extend_factorization,
    is_geometric,
    is_modular_by_diamonds,
    is_primary,
    lattice_from_order,
    m3,
    meet_irreducibles,
    n5,
    product,
    subspace_lattice,
)


def test_m3_classification():
    c = classify(m3())
    assert c.modular is True
    assert c.distributive is False
    assert c.geometric is True
    assert c.length == 2
    assert c.atoms == [1, 2, 3]
    assert c.model_dump(by_alias=True)["dualAtoms"] == [1, 2, 3]


def test_n5_is_not_modular():
    lattice = n5()
    assert not lattice.is_modular
    assert not is_modular_by_diamonds(lattice)
    assert not is_geometric(lattice)
    with pytest.raises(NotModular):
        is_primary(lattice)


def test_diamond_criterion_agrees_with_identity():
    for lattice in (m3(), n5(), boolean(3), chain(4), product(m3(), chain(2))):
        assert is_modular_by_diamonds(lattice) == lattice.is_modular


def test_meet_and_join_tables():
    lattice = boolean(2)
    assert lattice.meet(1, 2) == 0
    assert lattice.join(1, 2) == 3
    assert lattice.top == 3 and lattice.bottom == 0
    assert lattice.upper_covers(0) == (1, 2)


def test_product_of_chains_is_boolean():
    assert product(chain(2), chain(2)) == boolean(2)


def test_chain_properties():
    lattice = chain(4)
    assert lattice.is_chain()
    assert lattice.is_distributive
    assert not is_geometric(lattice)
    assert is_primary(lattice)


def test_divisor_lattice_from_order():
    divisors = [1, 2, 3, 4, 6, 12]
    lattice = lattice_from_order(
        len(divisors), lambda i, j: divisors[j] % divisors[i] == 0
    )
    assert lattice.is_distributive
    assert lattice.length == 3


def test_build_lattice_rejects_cycles():
    with pytest.raises(CyclicCovers):
        build_lattice([(0, 1), (1, 2), (2, 0)])


def test_build_lattice_rejects_two_tops():
    with pytest.raises(NotALattice):
        build_lattice([(0, 1), (0, 2)])


def test_build_lattice_drops_transitive_pairs():
    lattice = build_lattice([(0, 1), (1, 2), (0, 2)])
    assert lattice.covers == ((0, 1), (1, 2))


def test_center_of_m3_is_trivial():
    lattice = m3()
    assert center(lattice) == [0, 4]
    assert center_dual_atoms(lattice) == [0]
    dec = decompose(lattice)
    assert dec.irreducible == [True]


def test_boolean_decomposes_into_two_element_factors():
    lattice = boolean(3)
    assert len(center(lattice)) == 8
    dec = decompose(lattice)
    assert len(dec.factors) == 3
    assert all(len(f) == 2 for f in dec.factors)
    assert dec.internal


def test_meet_irreducibles_of_chain_product():
    lattice = product(chain(3), chain(2))
    irreducibles = meet_irreducibles(lattice)
    assert all(len(lattice.upper_covers(x)) == 1 for x in irreducibles)
    assert lattice.top not in irreducibles


def test_dual_frame_of_boolean_lattice():
    check = dual_frame_check(boolean(2), [1, 2])
    assert check.independent and check.spanning
    assert check.reflected == [2, 1]
    assert check.reflection_ok


def test_dual_frame_guard():
    with pytest.raises(TooLarge):
        dual_frame_check(boolean(3), [3, 5, 6], max_size=2)


def test_dual_atoms_of_m3_are_not_independent():
    check = dual_frame_check(m3(), [1, 2, 3])
    assert not check.independent


@pytest.mark.parametrize("p, dim, size", [(2, 2, 5), (3, 2, 6), (2, 3, 16)])
def test_subspace_lattice_sizes(p, dim, size):
    lattice, spaces = subspace_lattice(p, dim)
    assert lattice.n == size
    assert len(spaces) == size
    assert lattice.is_modular
    assert is_geometric(lattice)
    assert is_primary(lattice)


def test_extend_factorization_along_downset():
    small = boolean(2)
    big = product(chain(3), chain(3))
    # boolean ids are bitmasks; (a, b) in the product has id 3a + b
    embedding = [0, 3, 1, 4]
    result = extend_factorization([small, big], decompose(small), [embedding])
    assert not result.internal
    assert result.factors == [[3, 4, 5], [1, 4, 7]]

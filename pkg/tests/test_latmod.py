import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.errors import InvalidParams, NotFullRank, NotInNegativeCone, ParamMismatch
from src.latmod import (
    BeamParams,
    ProductElement,
    canonicalize,
    check_dual_basis,
    cone_elements,
    conjugate_partition,
    conjugation_is_identity,
    direct_limit_check,
    from_hnf,
    frozen,
    frozen_frame_ok,
    join,
    lattice_ops,
    leq,
    lower_cover_rad,
    lower_covers,
    meet,
    membership,
    mixed_generators,
    partitions_up_to,
    product_decompose,
    profiles_by_type,
    rad,
    random_plattice,
    s_join_atoms,
    snf_exponents,
    snf_profile,
    soc,
    strong_interval,
    type_representatives,
    unit,
    upper_covers,
    valuation,
)
from src.schemas import PLatticeFile
from src.utils.json_utils import load_json_file

P2 = BeamParams(2, 2)


def test_params_validation():
    with pytest.raises(InvalidParams):
        BeamParams(4, 2)
    with pytest.raises(InvalidParams):
        BeamParams(2, 0)


def test_valuation():
    assert valuation(Fraction(12, 5), 2) == 2
    assert valuation(Fraction(3, 8), 2) == -3
    assert valuation(7, 7) == 1


def test_canonical_form_is_idempotent():
    a = canonicalize(P2, [[2, 1], [0, 4], [6, 3]])
    assert canonicalize(P2, a.basis()) == a


def test_canonical_form_ignores_the_generating_set():
    rng = random.Random(5)
    for _ in range(10):
        a = random_plattice(rng, P2)
        assert canonicalize(P2, mixed_generators(rng, a, extra=2)) == a


@pytest.mark.parametrize(
    "generators, deg",
    [
        ([[2, 0], [0, 2], [1, 1]], 1),
        ([[4, 0], [0, 2]], 3),
        ([[1, 0], [0, 1], [3, 5]], 0),
    ],
)
def test_canonical_degree(generators, deg):
    assert canonicalize(P2, generators).deg == deg


def test_canonicalize_rejects_deficient_rank():
    with pytest.raises(NotFullRank):
        canonicalize(P2, [[1, 0], [2, 0]])


def test_frozen_degree_and_membership():
    a = frozen(P2, 2)
    assert a.deg == 4
    assert membership(a, [4, 8])
    assert not membership(a, [2, 0])
    with pytest.raises(NotFullRank):
        membership(a, [4])


def test_meet_and_join_of_coordinate_lattices():
    a = canonicalize(P2, [[2, 0], [0, 1]])
    b = canonicalize(P2, [[1, 0], [0, 2]])
    assert meet(a, b) == frozen(P2, 1)
    assert join(a, b) == unit(P2)
    assert a.deg + b.deg == meet(a, b).deg + join(a, b).deg


def test_lattice_ops_on_coordinate_chains():
    a = canonicalize(P2, [[4, 0], [0, 1]])
    b = canonicalize(P2, [[1, 0], [0, 4]])
    ops = lattice_ops(a, b)
    assert ops.meet == canonicalize(P2, [[4, 0], [0, 4]])
    assert ops.join == unit(P2)
    assert (ops.deg_meet, ops.deg_join) == (4, 0)
    assert not ops.leq
    assert lattice_ops(frozen(P2, 1), a).leq


def test_order():
    assert leq(frozen(P2, 1), unit(P2))
    assert not leq(unit(P2), frozen(P2, 1))


def test_mismatched_params_are_rejected():
    with pytest.raises(ParamMismatch):
        join(unit(P2), unit(BeamParams(3, 2)))


@pytest.mark.parametrize("p, count", [(2, 3), (3, 4)])
def test_covers_of_unit_are_lines(p, count):
    e = unit(BeamParams(p, 2))
    assert len(upper_covers(e)) == count
    assert len(lower_covers(e)) == count


def test_soc_and_rad_shift_scale():
    e = unit(P2)
    assert rad(e) == frozen(P2, 1)
    assert soc(frozen(P2, 1)) == e


def test_profile_of_cyclic_quotient(data_dir):
    a = PLatticeFile.model_validate(load_json_file(data_dir / "plattice.json")).to_plattice()
    profile = snf_profile(a)
    assert profile.exponents == [3, 0]
    assert profile.deg == 3
    assert profile.iota == [1, 1, 1]
    assert profile.iota_conjugate == [1, 1, 1]
    assert profile.meet_irreducible
    assert profile.one_homogeneous
    assert profile.dual_chain
    assert lower_cover_rad(a) == rad(a)


def test_profile_of_a_two_step_quotient():
    profile = snf_profile(canonicalize(P2, [[4, 0], [0, 2]]))
    assert profile.exponents == [2, 1]
    assert profile.iota == [2, 1]
    assert profile.iota_conjugate == [2, 1]
    assert not profile.meet_irreducible
    assert not profile.one_homogeneous


@pytest.mark.parametrize(
    "scale, H, bound",
    [
        (0, [[1, 0], [0, 1]], 0),
        (0, [[4, 0], [1, 4]], 4),
        (0, [[4, 0], [0, 2]], 2),
        (-2, [[1, 0], [0, 1]], 2),
        (1, [[1, 0], [0, 1]], 1),
        (1, [[2, 0], [1, 2]], 1),
    ],
)
def test_bound_comes_from_elementary_divisors(scale, H, bound):
    a = from_hnf(P2, scale, H)
    assert a.bound == bound
    assert leq(frozen(P2, bound), a)
    assert leq(a, frozen(P2, -bound))
    assert not (leq(frozen(P2, bound - 1), a) and leq(a, frozen(P2, 1 - bound)))


def test_profile_requires_cone():
    with pytest.raises(NotInNegativeCone):
        snf_exponents(soc(unit(P2)))


def test_profiles_by_type():
    assert profiles_by_type(P2, 1) == {(0, 0): 1, (1, 0): 3}


def test_partitions_up_to():
    assert list(partitions_up_to(2, 2)) == [(2, 0), (1, 1), (1, 0), (0, 0)]


def test_type_representatives_keep_their_type():
    params = BeamParams(3, 3)
    reps = type_representatives(random.Random(2), params, 3, mixes=2)
    assert len(reps) == 3 * len(list(partitions_up_to(3, 3)))
    types = [tuple(snf_exponents(a)) for a in reps]
    assert set(types) == set(partitions_up_to(3, 3))


def test_conjugate_partition():
    assert conjugate_partition([3, 1]) == [2, 1, 1]
    assert conjugate_partition([]) == []


def test_cone_elements_are_distinct():
    elements = list(cone_elements(P2, 2))
    assert len(elements) == len(set(elements))
    assert all(a.deg <= 2 for a in elements)


@pytest.mark.parametrize("delta, size", [(2, 5), (3, 16)])
def test_strong_interval_matches_subspaces(delta, size):
    si = strong_interval(BeamParams(2, delta), 1)
    assert si.lattice.n == size
    assert si.lattice.is_modular


def test_dual_basis_in_rank_four():
    assert check_dual_basis(BeamParams(2, 4), 2).ok


def test_join_of_atoms_is_socle():
    assert s_join_atoms(P2)
    assert s_join_atoms(BeamParams(3, 1))


def test_direct_limit():
    report = direct_limit_check(P2, 1, samples=20)
    assert report.passed, report.failures
    assert report.cases > 0


@pytest.mark.parametrize("seed", [0, 7, 11])
def test_direct_limit_skips_lattices_beyond_the_depth(seed):
    report = direct_limit_check(P2, 2, samples=50, rng=random.Random(seed))
    assert report.passed, report.failures


def test_frozen_frames_in_mixed_products():
    layout = (BeamParams(2, 1), BeamParams(3, 2))
    for n in range(1, 3):
        assert frozen_frame_ok(layout, n)
    rng = random.Random(3)
    x = ProductElement(tuple(random_plattice(rng, p, max_exp=2, cone=True) for p in layout))
    dec = product_decompose(x)
    assert dec.meet_ok and dec.degree_ok and dec.dual_frame_ok


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=0, max_value=10_000), st.sampled_from([P2, BeamParams(3, 2)]))
def test_parallelogram_identity(seed, params):
    rng = random.Random(seed)
    a, b = random_plattice(rng, params), random_plattice(rng, params)
    assert a.deg + b.deg == meet(a, b).deg + join(a, b).deg
    assert leq(meet(a, b), a) and leq(b, join(a, b))


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_conjugation_is_trivial(seed):
    a = random_plattice(random.Random(seed), BeamParams(2, 3))
    assert conjugation_is_identity(a)

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.errors import InvalidGerm, NotCentralDualAtom, UnknownElement
from src.germ import (
    BUILTIN_GERMS,
    Germ,
    GermFraction,
    GermTable,
    beam_decompose,
    embed,
    fraction_deg,
    fraction_inverse,
    fraction_join,
    fraction_leq,
    fraction_mul,
    fraction_ops,
    frozen_power,
    interval_analysis,
    klein_germ,
    permutation_under_right_mult,
    s_power,
    scaffold,
    semibeam_decompose,
    ulm_counts,
    validate_germ,
)
from src.schemas import GermFile
from src.utils.json_utils import load_json_file

klein_words = st.lists(st.sampled_from(["x", "y", "D"]), max_size=3)


@pytest.fixture
def m3_germ(data_dir) -> Germ:
    return Germ(GermFile.model_validate(load_json_file(data_dir / "m3_germ.json")).to_table())


def test_builtin_germs_are_valid():
    for name, factory in BUILTIN_GERMS.items():
        assert validate_germ(factory()).valid, name


def test_klein_normal_forms(klein):
    assert klein.right_normal_form(["x", "x"]) == ("D",)
    assert klein.right_normal_form(["y", "y"]) == ("D",)
    assert klein.right_normal_form(["x", "y"]) == ("x", "y")
    assert klein.right_normal_form(["e", "x", "e"]) == ("x",)
    assert klein.left_normal_form(["x", "x"]) == ("D",)


def test_free_abelian_normal_form(free2):
    assert free2.right_normal_form(["x", "y"]) == ("D",)
    assert free2.right_normal_form(["y", "x"]) == ("D",)


def test_unknown_element_is_rejected(klein):
    with pytest.raises(UnknownElement):
        klein.right_normal_form(["z"])


def test_invalid_degree_is_reported():
    data = klein_germ().to_dict()
    data["degree"]["x"] = 2
    table = GermTable.from_dict(data)
    report = validate_germ(table)
    assert not report.valid
    assert report.violations
    with pytest.raises(InvalidGerm):
        Germ(table)


def test_klein_cone_operations(klein):
    assert klein.meet(("x",), ("y",)) == ("D",)
    assert klein.join(("x",), ("y",)) == ()
    assert klein.arrow(("x",), ("y",)) == ("x",)
    assert klein.leq(("D",), ("x",))
    assert not klein.leq(("x",), ("y",))


@pytest.mark.parametrize("germ_name", ["klein", "free2"])
def test_meet_is_the_greatest_common_lower_bound(germ_name, request):
    germ = request.getfixturevalue(germ_name)
    cone = germ.elements_up_to(2)
    for x in cone:
        for y in cone:
            common = {germ.mul(c, x) for c in cone} & {germ.mul(c, y) for c in cone}
            least = min(germ.deg(w) for w in common)
            assert [w for w in common if germ.deg(w) == least] == [germ.meet(x, y)]


def test_degree_data(klein, free2):
    data = klein.degree_data(("y", "x"))
    assert (data.deg, data.lam, data.iota) == (2, 2, [1, 1])
    assert data.one_homogeneous and data.meet_irreducible and data.dual_chain

    data = free2.degree_data(("x", "y"))
    assert (data.deg, data.lam, data.iota) == (2, 1, [2])
    assert not (data.one_homogeneous or data.meet_irreducible or data.dual_chain)
    assert data.model_dump(by_alias=True)["lambda"] == 1


def test_klein_interval(klein):
    analysis = interval_analysis(klein)
    assert analysis.duality_ok
    assert sorted(analysis.center) == ["D", "e", "x", "y"]
    assert analysis.dual_atoms == ["x", "y"]
    assert analysis.duality["x"] == "y"
    assert analysis.ulm["e"] == (2, 0, 0)
    assert ulm_counts(klein, "x") == (1, 1, 0)


def test_m3_germ(m3_germ):
    assert sorted(m3_germ.center) == ["D", "e"]
    assert m3_germ.central_dual_atoms == ["D"]
    assert not m3_germ.lattice.is_distributive
    assert m3_germ.lattice.is_modular
    assert m3_germ.right_normal_form(["a", "b"]) == ("D",)


def test_m3_scaffold_is_a_chain(m3_germ):
    result = scaffold(m3_germ, 4)
    assert result.generators == ["D"]
    assert result.elements == [(), ("D",), ("D", "D")]
    assert result.distributive


def test_frozen_powers(klein):
    assert frozen_power(klein, "x", 1) == ("x",)
    assert frozen_power(klein, "x", 2) == ("y", "x")
    assert frozen_power(klein, "x", 3) == ("x", "y", "x")
    assert klein.soc(("y", "x")) == ("x",)
    with pytest.raises(NotCentralDualAtom):
        frozen_power(klein, "D", 2)


@pytest.mark.parametrize(
    "g, factor",
    [((), ()), (("x",), ("x",)), (("D",), ("D",)), (("y", "x"), ("x",)), (("x", "D"), ("D",))],
)
def test_radical_of_the_top_is_the_last_factor(klein, g, factor):
    assert klein.rad_top(g) == factor
    assert klein.interval_rad(g) == factor


def test_m3_radical_is_the_meet_of_dual_atoms(m3_germ):
    for g in m3_germ.elements_up_to(2):
        assert m3_germ.interval_rad(g) == m3_germ.rad_top(g)


def test_semibeam_decomposition(klein):
    dec = semibeam_decompose(klein, ("x",))
    assert dec.level == 1
    assert dec.components == [("x",), ()]
    assert dec.meet_ok


def test_right_multiplication_swaps_klein_beams(klein):
    assert permutation_under_right_mult(klein, ("x",))["x"] == "y"


def test_fractions(klein):
    x_inv = GermFraction(den=("x",))
    assert fraction_mul(klein, x_inv, embed(klein, ("x",))) == GermFraction()
    assert fraction_inverse(x_inv) == embed(klein, ("x",))
    assert fraction_deg(klein, s_power(klein, 1)) == -2
    assert fraction_leq(klein, embed(klein, ("x",)), GermFraction())
    assert not fraction_leq(klein, x_inv, GermFraction())
    assert fraction_join(klein, x_inv, GermFraction()) == x_inv
    assert fraction_join(klein, embed(klein, ("x",)), embed(klein, ("y",))) == GermFraction()


def test_beam_coordinates_of_an_inverse(klein):
    dec = beam_decompose(klein, GermFraction(den=("x",)))
    assert dec.shift == 1
    assert dec.coordinates == [GermFraction(), GermFraction(den=("x",))]
    assert dec.meet_ok and dec.consistent


@settings(max_examples=60, deadline=None)
@given(klein_words, klein_words)
def test_meet_and_join_are_modular(g, h):
    germ = Germ(klein_germ())
    m, j = germ.meet(g, h), germ.join(g, h)
    assert m == germ.meet(h, g)
    assert germ.leq(m, g) and germ.leq(m, h)
    assert germ.leq(g, j) and germ.leq(h, j)
    assert germ.deg(m) + germ.deg(j) == germ.deg(g) + germ.deg(h)


@settings(max_examples=60, deadline=None)
@given(klein_words, klein_words)
def test_arrow_defines_meet(g, h):
    germ = Germ(klein_germ())
    assert germ.mul(germ.arrow(g, h), g) == germ.meet(g, h)
    assert germ.leq(g, h) == (germ.arrow(g, h) == ())


def test_free_abelian_fractions(free2):
    x_inv_y = GermFraction(den=("x",), num=("y",))
    y_inv_x = GermFraction(den=("y",), num=("x",))
    ops = fraction_ops(free2, x_inv_y, y_inv_x)
    assert ops.deg == 0
    assert ops.product == GermFraction()
    assert ops.inverse == y_inv_x
    assert not ops.leq


@pytest.mark.parametrize(
    "f1, f2, expected",
    [
        (("D",), ("x",), True),
        (("x",), ("D",), False),
        (("x",), ("y",), False),
        (("x",), (), True),
        ((), ("y",), False),
    ],
)
def test_klein_fraction_order(klein, f1, f2, expected):
    ops = fraction_ops(klein, embed(klein, f1), embed(klein, f2))
    assert ops.leq is expected


def test_beam_coordinates_in_the_free_abelian_group(free2):
    dec = beam_decompose(free2, GermFraction(den=("x",), num=("y",)))
    assert dec.generators == ["x", "y"]
    assert dec.shift == 1
    assert dec.coordinates == [GermFraction(den=("x",)), GermFraction(num=("y",))]
    assert dec.meet_ok and dec.consistent

from src.finlat import boolean
from src.germ import divisibility_lattice, klein_germ
from src.render import render_report, render_text, to_dot
from src.schemas import CaseFailure, SuiteReport


def test_to_dot_draws_covers_and_ranks():
    """Test the Hasse diagram of the four element Boolean lattice"""
    dot = to_dot(boolean(2), name="B2", highlight=[0, 3])
    assert dot.startswith('digraph "B2" {')
    assert "n0 -> n1 [arrowhead=none];" in dot
    assert "n2 -> n3 [arrowhead=none];" in dot
    assert "{ rank=same; n1; n2; }" in dot
    assert 'n3 [label="3", peripheries=2];' in dot
    assert 'n1 [label="1"];' in dot


def test_to_dot_uses_labels():
    dot = to_dot(divisibility_lattice(klein_germ()))
    for name in ("e", "x", "y", "D"):
        assert f'label="{name}"' in dot


def test_render_text():
    text = render_text("center", {"center": [0, 4], "modular": True})
    assert text.splitlines()[0] == "center"
    assert "  center: [0, 4]" in text
    assert "  modular: True" in text


def test_render_report():
    report = SuiteReport(
        suite="parallelogram",
        cases=2,
        params={"seed": 0},
        failures=[CaseFailure(case="seed=0 i=1", expected="4", got="5")],
    )
    text = render_report(report)
    assert text.startswith("suite parallelogram: FAIL (2 cases, 0.00s)")
    assert "seed = 0" in text
    assert "FAILED seed=0 i=1: expected 4, got 5" in text

import json
import logging

import pytest

from src.cli import build_parser, dispatch


def _run(capsys, *argv):
    code = dispatch(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _error(err: str) -> dict:
    return json.loads([line for line in err.splitlines() if line.startswith("{")][-1])


def test_classify_lattice(capsys, data_dir):
    """Test lattice classification with JSON output"""
    code, out, _ = _run(capsys, "--json", "lattice", "classify", str(data_dir / "m3.json"))
    assert code == 0
    data = json.loads(out)
    assert data["modular"] is True
    assert data["distributive"] is False
    assert data["dualAtoms"] == [1, 2, 3]


def test_text_output(capsys, data_dir):
    code, out, _ = _run(capsys, "lattice", "center", str(data_dir / "m3.json"))
    assert code == 0
    assert out.startswith("center")
    assert "lattice: 5 elements, length 2" in out


@pytest.mark.parametrize("source", ["klein", "klein.json"])
def test_germ_normal_form(capsys, data_dir, source):
    germ = source if source == "klein" else str(data_dir / source)
    code, out, _ = _run(capsys, "--json", "germ", "nf", germ, "x", "x")
    assert code == 0
    assert json.loads(out) == ["D"]


def test_germ_arrow(capsys):
    code, out, _ = _run(capsys, "--json", "germ", "arrow", "klein", "x", "y")
    assert code == 0
    data = json.loads(out)
    assert data["arrow"] == ["x"]
    assert data["meet"] == ["D"]
    assert data["join"] == []
    assert data["leq"] is False


def test_germ_validate(capsys, data_dir):
    code, out, _ = _run(capsys, "--json", "germ", "validate", str(data_dir / "m3_germ.json"))
    assert code == 0
    assert json.loads(out)["valid"] is True


def test_invalid_germ_exits_with_one(capsys, write_json):
    path = write_json(
        "bad.json",
        {
            "elements": ["e", "x", "y", "D"],
            "identity": "e",
            "delta": "D",
            "degree": {"e": 0, "x": 2, "y": 1, "D": 2},
            "product": [["x", "x", "D"], ["y", "y", "D"]],
        },
    )
    code, out, _ = _run(capsys, "--json", "germ", "validate", path)
    assert code == 1
    assert json.loads(out)["valid"] is False


def test_dual_frame(capsys, data_dir):
    code, out, _ = _run(
        capsys, "--json", "lattice", "frame", str(data_dir / "m3.json"), "--elements", "1", "2"
    )
    assert code == 0
    data = json.loads(out)
    assert data["independent"] is True
    assert data["spanning"] is True
    assert data["reflected"] == [2, 1]
    assert data["reflectionOK"] is True


@pytest.mark.parametrize(
    "extra, elements, error",
    [
        (["--max-frame-size", "2"], ["1", "2", "3"], "TooLarge"),
        ([], ["1", "7"], "GlatError"),
    ],
)
def test_dual_frame_guards(capsys, data_dir, extra, elements, error):
    code, _, err = _run(
        capsys, *extra, "lattice", "frame", str(data_dir / "m3.json"), "--elements", *elements
    )
    assert code == 1
    assert _error(err)["error"] == error


def test_input_path_is_the_default_file(capsys, data_dir, monkeypatch):
    monkeypatch.setenv("GLAT_INPUT_PATH", str(data_dir / "m3.json"))
    code, out, _ = _run(capsys, "--json", "lattice", "classify")
    assert code == 0
    assert json.loads(out)["modular"] is True


def test_missing_input_file(capsys, monkeypatch):
    monkeypatch.delenv("GLAT_INPUT_PATH", raising=False)
    code, _, err = _run(capsys, "lattice", "classify")
    assert code == 1
    assert "no input file" in _error(err)["message"]


def test_handlers_log_their_calls(capsys, caplog):
    caplog.set_level(logging.DEBUG, logger="src")
    code, _, _ = _run(capsys, "--json", "germ", "nf", "klein", "x", "x")
    assert code == 0
    assert "germ_nf called with parameters" in caplog.text
    assert "resolve_config returned" in caplog.text


def test_latmod_profile(capsys, data_dir):
    code, out, _ = _run(capsys, "--json", "latmod", "profile", str(data_dir / "plattice.json"))
    assert code == 0
    data = json.loads(out)
    assert data["exponents"] == [3, 0]
    assert data["meetIrreducible"] is True


def test_latmod_interval(capsys):
    code, out, _ = _run(
        capsys, "--json", "latmod", "interval", "--p", "2", "--delta", "2", "--n", "1"
    )
    assert code == 0
    data = json.loads(out)
    assert data["size"] == 5
    assert data["primary"] is True


def test_ybe_commands(capsys, data_dir):
    code, out, _ = _run(capsys, "--json", "ybe", "enumerate", "--n", "3")
    assert code == 0
    assert json.loads(out)["classes"] == 5

    code, out, _ = _run(capsys, "--json", "ybe", "germ", str(data_dir / "swap_solution.json"))
    assert code == 0
    assert json.loads(out)["relations"] == ["xx = yy"]


def test_export_dot(capsys, data_dir, tmp_path):
    code, out, _ = _run(capsys, "export", "dot", str(data_dir / "m3.json"))
    assert code == 0
    assert out.startswith('digraph "L"')
    assert "rankdir=BT" in out

    target = tmp_path / "m3.dot"
    code, out, _ = _run(
        capsys, "--output", str(target), "export", "dot", str(data_dir / "m3.json")
    )
    assert code == 0
    assert out == ""
    assert target.read_text(encoding="utf-8").startswith('digraph "L"')


def test_verify_single_suite(capsys):
    code, out, _ = _run(
        capsys, "--json", "verify", "--suite", "s_join_atoms", "--params", "random_cases=5"
    )
    assert code == 0
    (report,) = json.loads(out)
    assert report["suite"] == "s_join_atoms"
    assert report["passed"] is True


def test_unknown_suite(capsys):
    code, _, err = _run(capsys, "verify", "--suite", "nope")
    assert code == 1
    assert _error(err)["error"] == "UnknownSuite"


def test_computation_error_is_reported_as_json(capsys, data_dir):
    """Test that a GlatError becomes exit code 1 with a JSON message"""
    code, _, err = _run(capsys, "lattice", "primary", str(data_dir / "n5.json"))
    assert code == 1
    assert _error(err)["error"] == "NotModular"


def test_missing_file(capsys, tmp_path):
    code, _, err = _run(capsys, "lattice", "classify", str(tmp_path / "missing.json"))
    assert code == 1
    assert "does not exist" in _error(err)["message"]


def test_usage_error_exits_with_two(capsys):
    assert dispatch(["lattice"]) == 2
    assert dispatch(["latmod", "interval", "--p", "2"]) == 2


def test_parser_lists_commands():
    parser = build_parser()
    args = parser.parse_args(["germ", "nf", "--left", "klein", "x"])
    assert args.left is True
    assert args.word == ["x"]

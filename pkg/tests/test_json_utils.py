import json

import pytest

from src.errors import GlatError
from src.utils.json_utils import load_json_file, repair_json_output


def test_repair_strips_code_fences():
    """Test that fenced JSON is unwrapped"""
    content = '```json\n{"n": 2, "op": [[1, 0], [0, 1]]}\n```'
    assert json.loads(repair_json_output(content)) == {"n": 2, "op": [[1, 0], [0, 1]]}


def test_repair_fixes_trailing_commas():
    assert json.loads(repair_json_output('{"p": 2, "delta": 1,}')) == {"p": 2, "delta": 1}


def test_repair_leaves_plain_text_alone():
    assert repair_json_output("  not json  ") == "not json"
    assert repair_json_output("") == ""


def test_load_json_file_repairs_hand_edited_files(tmp_path):
    path = tmp_path / "lattice.json"
    path.write_text("{'n': 2, 'covers': [[0, 1]],}", encoding="utf-8")
    assert load_json_file(path) == {"n": 2, "covers": [[0, 1]]}


def test_load_json_file_missing(tmp_path):
    with pytest.raises(GlatError):
        load_json_file(tmp_path / "missing.json")

import os
from unittest.mock import patch

import pytest

from src.config import Configuration, OutputFormat, load_yaml_config
from src.errors import ConfigError


def test_defaults():
    """Test the documented defaults"""
    config = Configuration()
    assert config.max_enum == 200_000
    assert config.seed == 0
    assert config.output_format == OutputFormat.TEXT


def test_layers_are_merged_in_order():
    """Test that overrides beat the environment, which beats the file"""
    with patch.dict(os.environ, {"GLAT_SEED": "5", "GLAT_MAX_ENUM": "100"}):
        config = Configuration.from_sources(
            {"seed": 1, "random_cases": 30}, {"max_enum": 50, "seed": None}
        )
    assert config.seed == 5
    assert config.max_enum == 50
    assert config.random_cases == 30


def test_unknown_file_keys_are_rejected():
    with pytest.raises(ConfigError):
        Configuration.from_sources({"max_enumeration": 10})


@pytest.mark.parametrize("field", ["max_enum", "random_cases", "max_structure_n"])
def test_guards_must_be_positive(field):
    with pytest.raises(ConfigError):
        Configuration(**{field: 0})


def test_output_format_is_coerced():
    config = Configuration.from_sources({}, {"output_format": "graphviz"})
    assert config.output_format == OutputFormat.DOT
    with pytest.raises(ConfigError):
        Configuration.from_sources({}, {"output_format": "yaml"})


def test_with_overrides():
    config = Configuration().with_overrides({"seed": "9", "random_cases": 3})
    assert config.seed == 9
    assert config.random_cases == 3
    assert Configuration().with_overrides(None) == Configuration()
    with pytest.raises(ConfigError):
        Configuration().with_overrides({"depth": 2})
    with pytest.raises(ConfigError):
        Configuration().with_overrides({"seed": "many"})


def test_load_yaml_config(tmp_path, monkeypatch):
    """Test YAML loading with environment substitution"""
    monkeypatch.setenv("GLAT_TEST_OUTPUT", "out.json")
    path = tmp_path / "conf.yaml"
    path.write_text("max_degree: 4\noutput_path: $GLAT_TEST_OUTPUT\n", encoding="utf-8")
    data = load_yaml_config(str(path))
    assert data == {"max_degree": 4, "output_path": "out.json"}
    assert Configuration.from_sources(data).max_degree == 4


def test_missing_yaml_file_yields_defaults(tmp_path):
    assert load_yaml_config(str(tmp_path / "absent.yaml")) == {}
    assert load_yaml_config("") == {}


def test_yaml_must_be_a_mapping(tmp_path):
    path = tmp_path / "list.yaml"
    path.write_text("- 1\n- 2\n", encoding="utf-8")
    with pytest.raises(ConfigError):
        load_yaml_config(str(path))

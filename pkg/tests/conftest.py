import json
from pathlib import Path

import pytest

from src.config import Configuration
from src.germ import Germ, free_abelian_germ, klein_germ

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def klein() -> Germ:
    return Germ(klein_germ())


@pytest.fixture
def free2() -> Germ:
    return Germ(free_abelian_germ(2))


@pytest.fixture
def small_config() -> Configuration:
    """Defaults with few random cases so suites finish quickly."""
    return Configuration(random_cases=20, seed=7, max_degree=4, max_structure_n=2)


@pytest.fixture
def write_json(tmp_path):
    """Write a JSON document to a temporary file and return its path."""

    def _write(name: str, data) -> str:
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)

    return _write

"""Read structure files given on the command line."""

import logging
from typing import Any, Dict, List, Type, TypeVar, Union

from pydantic import BaseModel, ValidationError

from src.errors import GlatError
from src.finlat import FiniteLattice
from src.germ import BUILTIN_GERMS, Germ, GermTable, Word
from src.latmod import PLattice
from src.schemas import CycleSetFile, GermFile, LatticeFile, PLatticeFile, SolutionFile
from src.utils.json_utils import load_json_file
from src.ybe import CycleSet, RMap, cycle_set_from_solution

logger = logging.getLogger(__name__)

M = TypeVar("M", bound=BaseModel)


def _parse(model: Type[M], data: Any, source: str) -> M:
    try:
        return model.model_validate(data)
    except ValidationError as e:
        raise GlatError(f"{source} is not a valid {model.__name__}: {e}") from e


def read_model(model: Type[M], path: str) -> M:
    return _parse(model, load_json_file(path), path)


def load_lattice(path: str) -> FiniteLattice:
    return read_model(LatticeFile, path).to_lattice()


def load_plattice(path: str) -> PLattice:
    return read_model(PLatticeFile, path).to_plattice()


def load_germ_table(source: str) -> GermTable:
    """A built-in germ by name, otherwise a germ file."""
    if source in BUILTIN_GERMS:
        logger.debug(f"Using built-in germ {source}")
        return BUILTIN_GERMS[source]()
    return read_model(GermFile, source).to_table()


def load_germ(source: str) -> Germ:
    return Germ(load_germ_table(source))


def load_cycle_set(path: str) -> CycleSet:
    """A cycle set file (``op`` key) or a solution file (``R`` key)."""
    data = load_json_file(path)
    if isinstance(data, dict) and "op" in data:
        return _parse(CycleSetFile, data, path).to_cycle_set()
    return cycle_set_from_solution(_parse(SolutionFile, data, path).to_solution())


def load_solution(path: str) -> RMap:
    return read_model(SolutionFile, path).to_solution()


def load_structure(path: str) -> Union[FiniteLattice, GermTable]:
    """A lattice file, or a germ file when the mapping has an ``elements`` key."""
    data: Dict[str, Any] = load_json_file(path)
    if isinstance(data, dict) and "elements" in data:
        return _parse(GermFile, data, path).to_table()
    return _parse(LatticeFile, data, path).to_lattice()


def parse_word(text: str) -> Word:
    """``"x,y"`` as the word ``(x, y)``; the empty string and ``e`` are the identity."""
    parts: List[str] = [p.strip() for p in text.split(",") if p.strip()]
    return tuple(p for p in parts if p != "e")

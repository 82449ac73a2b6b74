import json
import os
from typing import Any, Dict, Iterable, Optional

from jinja2 import Environment, FileSystemLoader, TemplateNotFound, select_autoescape

from src.errors import GlatError
from src.finlat import FiniteLattice
from src.schemas import SuiteReport

# Initialize Jinja2 environment; .txt and .dot templates are not autoescaped
jinja_env = Environment(
    loader=FileSystemLoader(os.path.dirname(__file__) + "/templates"),
    autoescape=select_autoescape(),
    trim_blocks=True,
    lstrip_blocks=True,
)


def _get_template(name: str):
    try:
        return jinja_env.get_template(name)
    except TemplateNotFound as e:
        raise GlatError(f"template {name!r} not found: {e}") from e


def to_dot(lattice: FiniteLattice, name: str = "L", highlight: Iterable[int] = ()) -> str:
    """
    Render the Hasse diagram of a lattice in Graphviz dot syntax.

    Edges run from lower to upper covers; elements of equal height share a rank.

    Args:
        lattice (FiniteLattice): The lattice to draw
        name (str): Graph name
        highlight (Iterable[int]): Elements drawn with a double border (e.g. the center)

    Returns:
        str: The dot source
    """
    ranks: Dict[int, list] = {}
    for x in lattice.elements:
        ranks.setdefault(lattice.height(x), []).append(x)
    return _get_template("lattice.dot").render(
        name=name,
        nodes=[(x, lattice.label(x)) for x in lattice.elements],
        edges=list(lattice.covers),
        ranks=[ranks[h] for h in sorted(ranks)],
        highlight=set(highlight),
    )


def render_report(report: SuiteReport) -> str:
    """Human-readable summary of a suite report."""
    return _get_template("suite_report.txt").render(report=report)


def render_text(title: str, data: Any, lattice: Optional[FiniteLattice] = None) -> str:
    """
    Render a command result as indented text.

    Mappings become ``key: value`` lines; nested values are shown as compact JSON.
    """
    if isinstance(data, dict):
        items = [
            (k, v if isinstance(v, (str, int, float, bool)) else json.dumps(v, default=str))
            for k, v in data.items()
        ]
    else:
        items = [("result", json.dumps(data, default=str))]
    return _get_template("result.txt").render(title=title, items=items, lattice=lattice)

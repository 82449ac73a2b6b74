"""Registry of verification suites by name."""

from dataclasses import dataclass
from typing import Callable, Dict, List

from src.errors import UnknownSuite
from src.verify.context import SuiteContext

SuiteFn = Callable[[SuiteContext], None]


@dataclass(frozen=True)
class Suite:
    name: str
    run: SuiteFn
    description: str


SUITES: Dict[str, Suite] = {}


def register_suite(name: str) -> Callable[[SuiteFn], SuiteFn]:
    """Register ``func`` under ``name``; the first docstring line becomes its description."""

    def decorator(func: SuiteFn) -> SuiteFn:
        if name in SUITES:
            raise ValueError(f"suite {name} is registered twice")
        doc = (func.__doc__ or "").strip().splitlines()
        SUITES[name] = Suite(name=name, run=func, description=doc[0] if doc else "")
        return func

    return decorator


def get_suite(name: str) -> Suite:
    try:
        return SUITES[name]
    except KeyError:
        raise UnknownSuite(
            f"unknown suite {name!r}; known suites: {', '.join(sorted(SUITES))}"
        ) from None


def suite_names() -> List[str]:
    """Registered suite names in registration order."""
    return list(SUITES)

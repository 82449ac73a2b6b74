"""Verification suites: each registered suite checks one structural statement
exhaustively on a bounded range or on seeded random cases."""

# Importing the suite modules registers their suites.
from . import germ_suites, latmod_suites, ybe_suites  # noqa: F401
from .registry import SUITES, Suite, get_suite, register_suite, suite_names
from .runner import run_all, run_suite

__all__ = [
    "SUITES",
    "Suite",
    "get_suite",
    "register_suite",
    "run_all",
    "run_suite",
    "suite_names",
]

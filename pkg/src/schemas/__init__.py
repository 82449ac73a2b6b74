from .files import CycleSetFile, GermFile, LatticeFile, PLatticeFile, SolutionFile
from .report import CaseFailure, SuiteReport

__all__ = [
    "CaseFailure",
    "CycleSetFile",
    "GermFile",
    "LatticeFile",
    "PLatticeFile",
    "SolutionFile",
    "SuiteReport",
]

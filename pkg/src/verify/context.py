import random
from dataclasses import dataclass, field
from typing import Any, Dict, List

from src.config import Configuration
from src.schemas import CaseFailure


@dataclass
class SuiteContext:
    """Mutable state handed to a suite while it runs.

    Suites call :meth:`check` once per case; failures keep the case id so the
    case can be replayed through the CLI.
    """

    config: Configuration
    rng: random.Random = field(init=False)
    cases: int = 0
    failures: List[CaseFailure] = field(default_factory=list)
    ranges: List[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.rng = random.Random(self.config.seed)

    def check(self, case: str, expected: Any, got: Any) -> bool:
        self.cases += 1
        if expected == got:
            return True
        self.failures.append(CaseFailure(case=case, expected=str(expected), got=str(got)))
        return False

    def holds(self, case: str, condition: bool) -> bool:
        return self.check(case, True, bool(condition))

    def cover(self, description: str) -> None:
        """Record an enumeration range covered by the suite."""
        self.ranges.append(description)

    def params(self) -> Dict[str, Any]:
        c = self.config
        return {
            "seed": c.seed,
            "random_cases": c.random_cases,
            "max_enum": c.max_enum,
            "max_degree": c.max_degree,
            "max_structure_n": c.max_structure_n,
        }

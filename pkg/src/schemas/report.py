from typing import Any, Dict, List

from pydantic import BaseModel, Field, computed_field


class CaseFailure(BaseModel):
    """One failed case of a verification suite.

    Attributes:
        case: Replayable identifier of the case
        expected: Expected value, rendered as text
        got: Computed value, rendered as text
    """

    case: str = Field(..., description="Replayable case identifier")
    expected: str = Field(..., description="Expected value")
    got: str = Field(..., description="Computed value")


class SuiteReport(BaseModel):
    """Outcome of one verification suite.

    Attributes:
        suite: Registered suite name
        params: Parameters the suite ran with (seed and guards included)
        cases: Number of cases checked
        failures: Failed cases in case order
        ranges: The enumeration ranges covered, in words
        wall_time: Seconds spent running the suite
    """

    suite: str = Field(..., description="Registered suite name")
    params: Dict[str, Any] = Field(default_factory=dict)
    cases: int = Field(0, ge=0)
    failures: List[CaseFailure] = Field(default_factory=list)
    ranges: List[str] = Field(default_factory=list)
    wall_time: float = Field(0.0, ge=0.0, description="Seconds")

    @computed_field
    @property
    def passed(self) -> bool:
        return not self.failures

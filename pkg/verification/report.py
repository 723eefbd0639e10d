"""
Report models shared by the verification suite and the command-line front end.
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, computed_field


class Check(BaseModel):
    """One mechanically checked claim."""

    name: str
    expected: Any = None
    actual: Any = None
    passed: bool = Field(serialization_alias="pass")


class Report(BaseModel):
    """
    Command echo, optional result payload and checks.

    The overall flag is derived: a report passes exactly when every check does.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    command: str
    params: Dict[str, Any] = Field(default_factory=dict)
    result: Any = None
    checks: List[Check] = Field(default_factory=list)
    elapsed_seconds: float = 0.0

    @computed_field(alias="pass")
    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, expected: Any, actual: Any, passed: Optional[bool] = None) -> Check:
        """Append a check; ``passed`` defaults to expected == actual."""
        check = Check(name=name, expected=expected, actual=actual,
                      passed=(expected == actual) if passed is None else passed)
        self.checks.append(check)
        return check

    def to_json_dict(self) -> Dict[str, Any]:
        """Stable field order: command, params, result, checks, pass, elapsed_seconds."""
        data = self.model_dump(by_alias=True, mode="json")
        return {
            "command": data["command"],
            "params": data["params"],
            "result": data["result"],
            "checks": data["checks"],
            "pass": data["pass"],
            "elapsed_seconds": data["elapsed_seconds"],
        }

from typing import Any, Dict, List

from pydantic import BaseModel, Field


class CheckRecord(BaseModel):
    suite: str
    check: str
    case: str
    index: int = -1
    passed: bool
    severity: str = "error"
    message: str = ""
    values: Dict[str, Any] = {}

    def sort_key(self):
        return self.suite, self.check, self.case, self.index


class SuiteSummary(BaseModel):
    total: int = 0
    passed: int = 0
    errors: int = 0
    warnings: int = 0
    by_suite: Dict[str, int] = Field(default_factory=dict)
    failed_checks: List[str] = []

    @property
    def ok(self) -> bool:
        return self.errors == 0

from typing import List, Optional

from pydantic import BaseModel


class SuiteReport(BaseModel):
    suite: str
    passed: bool
    checks: int
    counterexample: Optional[str] = None


class VerifyReport(BaseModel):
    seed: int
    trials: int
    passed: bool
    suites: List[SuiteReport]

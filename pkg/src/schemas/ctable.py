from typing import List

from pydantic import BaseModel


class CTableEntry(BaseModel):
    index: int
    place: str
    roots: List[str]
    value: str


class FunctionalEquationSample(BaseModel):
    s: str
    constant: str
    ratio: str
    passed: bool


class FunctionalEquationReport(BaseModel):
    primes: List[int]
    tolerance: float
    samples: List[FunctionalEquationSample]
    passed: bool

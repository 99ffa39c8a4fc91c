from typing import List, Optional

from pydantic import BaseModel


class FormReport(BaseModel):
    form: str
    # table[i][j] = coordinates of v_{i+1} v_{j+1} on (1, v1, v2, v3)
    table: List[List[List[str]]]
    reduced_discriminant: str
    maximal: bool


class SuborderEntry(BaseModel):
    index: int
    hnf: List[List[int]]
    form: str


class SuborderReport(BaseModel):
    form: str
    index: int
    count: int
    suborders: List[SuborderEntry] = []


class MaximalityReport(BaseModel):
    form: str
    reduced_discriminant: str
    maximal: bool
    superorder_prime: Optional[int] = None
    superorder_witness: Optional[List[str]] = None


class ShiftReport(BaseModel):
    shifts: List[str]
    symmetric: bool

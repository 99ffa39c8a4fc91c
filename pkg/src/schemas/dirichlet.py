from typing import List

from pydantic import BaseModel


class DirichletCoefficient(BaseModel):
    index: int
    value: str


class DirichletReport(BaseModel):
    form: str
    weight: int
    coefficients: List[DirichletCoefficient]

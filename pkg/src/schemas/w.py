from typing import List, Optional

from pydantic import BaseModel


class WReport(BaseModel):
    form: str
    w: List[str]
    rank: Optional[int] = None
    quartic: Optional[str] = None
    value: Optional[str] = None


class NormalizeReport(BaseModel):
    form: str
    w: List[str]
    translate: List[str]
    gsp6: List[List[str]]
    similitude: str


class EmbeddingReport(BaseModel):
    form: str
    similitude: str
    matrix: List[List[str]]


class FOActionReport(BaseModel):
    form: str
    value: List[str]
    xi: int

from typing import Literal

from pydantic import BaseModel, Field

from src.config import DEFAULT_SEED, DEFAULT_TOLERANCE, DEFAULT_TRIALS


class RunConfig(BaseModel):
    seed: int = DEFAULT_SEED
    trials: int = Field(default=DEFAULT_TRIALS, ge=0)
    tolerance: float = Field(default=DEFAULT_TOLERANCE, gt=0)
    output: Literal["text", "json"] = "text"

    @property
    def as_json(self) -> bool:
        return self.output == "json"


class ErrorPayload(BaseModel):
    message: str
    error_code: str
    resolution: str

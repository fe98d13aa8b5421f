from typing import Any, List

from pydantic import BaseModel, ConfigDict, Field


class CohomologyEntry(BaseModel):
    index: int
    space: str
    fiber_dim: int
    dim: int
    dim_ker: int
    rank_prev: int
    dim_h: int


class CohomologyReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    complex_name: str = ""
    entries: List[CohomologyEntry] = []
    # harmonic bases (ker ∩ ran⊥), one LinearMap per index; kept out of serialized reports
    representatives: List[Any] = Field(default_factory=list, exclude=True)

    @property
    def dims(self) -> list:
        return [e.dim_h for e in self.entries]

    @property
    def fiber_dims(self) -> list:
        return [e.fiber_dim for e in self.entries]

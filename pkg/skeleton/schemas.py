# skeleton/schemas.py
from typing import List

from pydantic import BaseModel, ConfigDict


class HomologySummary(BaseModel):
    betti: List[int]
    torsion: List[List[int]]  # per degree, invariant factors > 1

    model_config = ConfigDict(frozen=True)

    @property
    def is_torsion_free(self) -> bool:
        return not any(self.torsion)

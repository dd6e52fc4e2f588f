# models.py
from __future__ import annotations

from enum import Enum
from typing import List, Literal, Union

from pydantic import BaseModel, ConfigDict, Field


class SpaceSpec(BaseModel):
    """
    Sym^n M_{g,k} x R^N.
    """

    g: int = Field(ge=0)
    k: int = Field(ge=1)
    n: int = Field(ge=2)
    N: int = Field(default=0, ge=0)

    model_config = ConfigDict(frozen=True)

    @property
    def s(self) -> int:
        return 2 * self.g + self.k - 1

    @property
    def dimension(self) -> int:
        return 2 * self.n + self.N

    def label(self) -> str:
        return f"(g={self.g}, k={self.k}, n={self.n}, N={self.N})"


class Term(BaseModel):
    monomial: List[int]
    coeff: int


class InvariantReport(BaseModel):
    spec: SpaceSpec
    dimension: int
    s: int
    pi1_rank: int  # π_1 = Z^s
    homotopy_class: int
    betti: List[int]
    torsion_free: bool
    c1: List[Term]
    pontrjagin: Union[Literal["zero"], List[List[Term]]]
    w2_rank: int

    model_config = ConfigDict(frozen=True)


class Verdict(str, Enum):
    HOMEOMORPHIC = "homeomorphic"
    HOMOTOPY_EQUIVALENT_NOT_HOMEOMORPHIC = "homotopy_equivalent_not_homeomorphic"
    NOT_HOMOTOPY_EQUIVALENT = "not_homotopy_equivalent"
    UNDETERMINED = "undetermined"


class Comparison(BaseModel):
    verdict: Verdict
    invariants_a: InvariantReport
    invariants_b: InvariantReport
    witness: str
    # true when max(g, g') >= n/2, where the distinction was already known
    previously_known: bool = False

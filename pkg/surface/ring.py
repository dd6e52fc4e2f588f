# surface/ring.py
"""
Cohomology rings of closed and punctured genus-g surfaces.

Closed: H*(M_g; Z) with basis 1, γ_1..γ_2g, δ where γ_i γ_{i+g} = δ = -γ_{i+g} γ_i.
Punctured: H*(M_{g,k}; Z) = Λ^{≤1}(ε_1..ε_s), s = 2g+k-1, with ε_j = i*(γ_j)
for j <= 2g.
"""
from __future__ import annotations

from typing import List, NamedTuple, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from exterior.algebra import ExtAlgebra, ExtElement


class SurfaceClass(NamedTuple):
    # degree 0 = unit, 1 = gamma(index), 2 = delta
    degree: int
    index: int = 0

    @classmethod
    def unit(cls) -> "SurfaceClass":
        return UNIT

    @classmethod
    def gamma(cls, i: int) -> "SurfaceClass":
        return cls(1, i)

    @classmethod
    def delta(cls) -> "SurfaceClass":
        return DELTA

    def check(self, g: int) -> None:
        if self.degree == 1 and not 1 <= self.index <= 2 * g:
            raise ValueError(f"gamma index {self.index} outside 1..{2 * g} for genus {g}")
        if self.degree not in (0, 1, 2) or (self.degree != 1 and self.index != 0):
            raise ValueError(f"not a surface basis class: {self!r}")

    def __repr__(self) -> str:
        if self.degree == 1:
            return f"γ{self.index}"
        return "1" if self.degree == 0 else "δ"


UNIT = SurfaceClass(0, 0)
DELTA = SurfaceClass(2, 0)

SurfaceTerm = Tuple[int, SurfaceClass]


def surface_basis(g: int) -> List[SurfaceClass]:
    return [UNIT, *(SurfaceClass(1, i) for i in range(1, 2 * g + 1)), DELTA]


def _mul(a: SurfaceClass, b: SurfaceClass, g: int) -> Optional[SurfaceTerm]:
    if a.degree == 0:
        return 1, b
    if b.degree == 0:
        return 1, a
    if a.degree == 1 and b.degree == 1:
        diff = b.index - a.index
        if diff == g:
            return 1, DELTA
        if diff == -g:
            return -1, DELTA
    return None


def surface_mul(a: SurfaceClass, b: SurfaceClass, g: int) -> Optional[SurfaceTerm]:
    """
    Product of two basis classes as (coefficient, class), or None when it vanishes.
    """
    a.check(g)
    b.check(g)
    return _mul(a, b, g)


class PuncturedBasis(BaseModel):
    g: int = Field(ge=0)
    k: int = Field(ge=1)

    model_config = ConfigDict(frozen=True)

    @property
    def s(self) -> int:
        return 2 * self.g + self.k - 1

    @property
    def ring(self) -> ExtAlgebra:
        # k only enters through s; the cut at 1 kills every product of ε's
        return ExtAlgebra(s=self.s, cut=1)

    def epsilon(self, j: int) -> ExtElement:
        return self.ring.generator(j)


def punctured_restrict(a: SurfaceClass, basis: PuncturedBasis) -> ExtElement:
    a.check(basis.g)
    ring = basis.ring
    if a.degree == 0:
        return ring.one()
    if a.degree == 1:
        return ring.generator(a.index)
    return ring.zero()

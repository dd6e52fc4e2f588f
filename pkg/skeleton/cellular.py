# skeleton/cellular.py
"""
Cellular chains of the torus T^s with its product CW structure, n-skeleta,
and integral homology through Smith normal form.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb
from typing import List, Sequence, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DM, DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_form

from skeleton.schemas import HomologySummary

logger = logging.getLogger("symprod.skeleton")


@dataclass(frozen=True)
class ChainComplex:
    ranks: Tuple[int, ...]
    # differentials[q-1] is ∂_q: C_q -> C_{q-1}, shape (ranks[q-1], ranks[q])
    differentials: Tuple[DomainMatrix, ...]

    @classmethod
    def from_lists(cls, ranks: Sequence[int], differentials: Sequence[Sequence[Sequence[int]]]) -> "ChainComplex":
        mats = []
        for q, rows in enumerate(differentials, start=1):
            shape = (ranks[q - 1], ranks[q])
            mats.append(DM(rows, ZZ) if rows and rows[0] else DomainMatrix.zeros(shape, ZZ))
        return cls(tuple(ranks), tuple(mats))

    def __post_init__(self) -> None:
        if len(self.differentials) != max(len(self.ranks) - 1, 0):
            raise ValueError(f"{len(self.ranks)} chain groups need {len(self.ranks) - 1} differentials")
        for q, d in enumerate(self.differentials, start=1):
            if d.shape != (self.ranks[q - 1], self.ranks[q]):
                raise ValueError(f"∂_{q} has shape {d.shape}, expected {(self.ranks[q - 1], self.ranks[q])}")

    def is_complex(self) -> bool:
        for q in range(1, len(self.differentials)):
            lower, upper = self.differentials[q - 1], self.differentials[q]
            if 0 in lower.shape or 0 in upper.shape:
                continue
            if any(any(row) for row in lower.matmul(upper).to_list()):
                return False
        return True


def torus_cw(s: int) -> ChainComplex:
    if s < 1:
        raise ValueError(f"torus needs s >= 1, got {s}")
    ranks = tuple(comb(s, q) for q in range(s + 1))
    zeros = tuple(DomainMatrix.zeros((ranks[q - 1], ranks[q]), ZZ) for q in range(1, s + 1))
    return ChainComplex(ranks, zeros)


def truncate(c: ChainComplex, n: int) -> ChainComplex:
    if n < 1:
        raise ValueError(f"skeleton degree must be >= 1, got {n}")
    return ChainComplex(c.ranks[: n + 1], c.differentials[:n])


def _invariant_factors(d: DomainMatrix) -> List[int]:
    if 0 in d.shape or d.is_zero_matrix:
        return []
    snf = smith_normal_form(d).to_list()
    diagonal = (abs(int(snf[i][i])) for i in range(min(d.shape)))
    return [x for x in diagonal if x]


def homology(c: ChainComplex) -> HomologySummary:
    if not c.is_complex():
        raise ValueError("∂∘∂ != 0: not a chain complex")
    factors = [_invariant_factors(d) for d in c.differentials]
    betti, torsion = [], []
    for q, rank in enumerate(c.ranks):
        outgoing = len(factors[q - 1]) if q >= 1 else 0
        incoming = factors[q] if q < len(factors) else []
        betti.append(rank - outgoing - len(incoming))
        torsion.append([x for x in incoming if x > 1])
    logger.debug("homology of complex with ranks %s: betti=%s torsion=%s", c.ranks, betti, torsion)
    return HomologySummary(betti=betti, torsion=torsion)

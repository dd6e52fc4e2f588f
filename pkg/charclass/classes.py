# charclass/classes.py
"""
Stiefel-Whitney and Pontrjagin classes derived from Chern data, and w_2 as an
alternating form on H^1(-; Z/2).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from charclass.chern import ChernData, E, chern_total_punctured
from exterior.algebra import ExtElement, Ring

logger = logging.getLogger("symprod.charclass")


def stiefel_whitney(c: ChernData[E]) -> Tuple[E, ...]:
    """
    w_1..w_2n of the underlying real bundle: w_odd = 0, w_2q = ρ_2(c_q).

    For tensor-represented (closed) data this is the class pulled back to
    (M_g)^n, where reduction mod 2 is not injective.
    """
    zero = c.total.reduce_mod2().parent.zero()
    out = []
    for degree in range(1, 2 * c.n + 1):
        out.append(zero if degree % 2 else c.c(degree // 2).reduce_mod2())
    return tuple(out)


def pontrjagin(c: ChernData[E]) -> Tuple[E, ...]:
    """
    p_1..p_{n//2}, p_q = (-1)^q Σ_{i=0}^{2q} (-1)^i c_i c_{2q-i}.
    """
    out = []
    for q in range(1, c.n // 2 + 1):
        p = c.total.parent.zero()
        for i in range(2 * q + 1):
            term = c.c(i) * c.c(2 * q - i)
            p = p + (term if (q + i) % 2 == 0 else -term)
        out.append(p)
    return tuple(out)


@dataclass(frozen=True, eq=False)
class AltFormZ2:
    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = np.asarray(self.matrix, dtype=np.uint8) % 2
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"form matrix must be square, got shape {m.shape}")
        object.__setattr__(self, "matrix", m)

    @classmethod
    def from_class(cls, w: ExtElement) -> "AltFormZ2":
        """
        Entry (i,j) = coefficient of ᾱ_i∧ᾱ_j in a degree-2 class over Z/2.
        """
        if w.algebra.ring is not Ring.GF2:
            raise ValueError("alternating form needs a class over Z/2")
        s = w.algebra.s
        m = np.zeros((s, s), dtype=np.uint8)
        for mono in w.terms:
            if len(mono) != 2:
                raise ValueError(f"monomial {mono} is not of degree 2")
            i, j = mono
            m[i - 1, j - 1] = m[j - 1, i - 1] = 1
        return cls(m)

    @property
    def size(self) -> int:
        return self.matrix.shape[0]

    def is_alternating(self) -> bool:
        return not self.matrix.diagonal().any() and np.array_equal(self.matrix, self.matrix.T)

    def to_list(self) -> List[List[int]]:
        return self.matrix.astype(int).tolist()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AltFormZ2):
            return NotImplemented
        return np.array_equal(self.matrix, other.matrix)

    def __hash__(self) -> int:
        return hash(self.matrix.tobytes())


def w2_form(g: int, k: int, n: int) -> AltFormZ2:
    w = stiefel_whitney(chern_total_punctured(g, k, n))
    form = AltFormZ2.from_class(w[1])
    logger.debug("w2 form g=%s k=%s n=%s: %s", g, k, n, form.to_list())
    return form

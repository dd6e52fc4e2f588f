# exterior/algebra.py
"""
Truncated ("cutted") exterior algebras over Z and Z/2.

Λ^{≤cut}(α_1, ..., α_s): graded-anticommutative, generated in degree 1,
everything above degree `cut` set to zero. Elements are immutable sparse maps
from monomials (strictly increasing index tuples, 1-based) to nonzero
coefficients.
"""
from __future__ import annotations

from enum import Enum
from itertools import combinations
from math import comb
from random import Random
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field


ExtMonomial = Tuple[int, ...]


class Ring(str, Enum):
    ZZ = "Z"
    GF2 = "Z/2"


class ExtAlgebra(BaseModel):
    s: int = Field(ge=0)
    cut: int = Field(ge=1)
    ring: Ring = Ring.ZZ

    model_config = ConfigDict(frozen=True)

    def dim(self, q: int) -> int:
        if q < 0 or q > self.cut:
            return 0
        return comb(self.s, q)

    @property
    def total_rank(self) -> int:
        return sum(self.dim(q) for q in range(self.cut + 1))

    def basis(self, q: int) -> Iterator[ExtMonomial]:
        if 0 <= q <= self.cut:
            yield from combinations(range(1, self.s + 1), q)

    def zero(self) -> "ExtElement":
        return ExtElement._make(self, {})

    def one(self) -> "ExtElement":
        return ExtElement._make(self, {(): 1})

    def generator(self, i: int) -> "ExtElement":
        if not 1 <= i <= self.s:
            raise ValueError(f"generator index {i} outside 1..{self.s}")
        return ExtElement._make(self, {(i,): 1})

    def element(self, terms: Mapping[Iterable[int], int]) -> "ExtElement":
        return ExtElement(self, terms)

    def mod2(self) -> "ExtAlgebra":
        return ExtAlgebra(s=self.s, cut=self.cut, ring=Ring.GF2)


def _merge_sign(a: ExtMonomial, b: ExtMonomial) -> int:
    """
    Sign of the shuffle sorting a+b, or 0 when a and b share an index.
    """
    i = j = 0
    inversions = 0
    while i < len(a) and j < len(b):
        if a[i] < b[j]:
            i += 1
        elif a[i] > b[j]:
            inversions += len(a) - i
            j += 1
        else:
            return 0
    return -1 if inversions & 1 else 1


def _sorting_sign(indices: Iterable[int]) -> Tuple[int, ExtMonomial]:
    """
    (sign, sorted monomial) for a word of degree-1 generators; sign 0 on repeats.
    """
    word = list(indices)
    if len(set(word)) != len(word):
        return 0, ()
    inversions = sum(
        1 for x in range(len(word)) for y in range(x + 1, len(word)) if word[x] > word[y]
    )
    return (-1 if inversions & 1 else 1), tuple(sorted(word))


class ExtElement:
    __slots__ = ("algebra", "_terms")

    def __init__(self, algebra: ExtAlgebra, terms: Mapping[Iterable[int], int] = MappingProxyType({})):
        clean: Dict[ExtMonomial, int] = {}
        for raw, coeff in terms.items():
            sign, mono = _sorting_sign(raw)
            if any(not 1 <= i <= algebra.s for i in mono):
                raise ValueError(f"monomial {tuple(raw)} uses an index outside 1..{algebra.s}")
            if len(mono) > algebra.cut:
                raise ValueError(f"monomial {tuple(raw)} exceeds the cut {algebra.cut}")
            if sign:
                clean[mono] = clean.get(mono, 0) + sign * int(coeff)
        self.algebra = algebra
        self._terms = _normalized(algebra, clean)

    @classmethod
    def _make(cls, algebra: ExtAlgebra, terms: Dict[ExtMonomial, int]) -> "ExtElement":
        obj = cls.__new__(cls)
        obj.algebra = algebra
        obj._terms = _normalized(algebra, terms)
        return obj

    @property
    def parent(self) -> ExtAlgebra:
        return self.algebra

    @property
    def terms(self) -> Mapping[ExtMonomial, int]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> List[int]:
        return sorted({len(m) for m in self._terms})

    def homogeneous(self, q: int) -> "ExtElement":
        return ExtElement._make(self.algebra, {m: c for m, c in self._terms.items() if len(m) == q})

    def reduce_mod2(self) -> "ExtElement":
        return ExtElement._make(self.algebra.mod2(), dict(self._terms))

    def to_records(self) -> List[dict]:
        return [{"monomial": list(m), "coeff": c} for m, c in sorted(self._terms.items())]

    # arithmetic

    def _check(self, other: "ExtElement") -> None:
        if self.algebra != other.algebra:
            raise ValueError(f"algebra mismatch: {self.algebra!r} vs {other.algebra!r}")

    def __add__(self, other: "ExtElement") -> "ExtElement":
        self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return ExtElement._make(self.algebra, out)

    def __neg__(self) -> "ExtElement":
        return ExtElement._make(self.algebra, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "ExtElement") -> "ExtElement":
        return self + (-other)

    def __mul__(self, other: Union["ExtElement", int]) -> "ExtElement":
        if isinstance(other, int):
            return ExtElement._make(self.algebra, {m: c * other for m, c in self._terms.items()})
        self._check(other)
        cut = self.algebra.cut
        out: Dict[ExtMonomial, int] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                if len(ma) + len(mb) > cut:
                    continue
                sign = _merge_sign(ma, mb)
                if not sign:
                    continue
                mono = tuple(sorted(ma + mb))
                out[mono] = out.get(mono, 0) + sign * ca * cb
        return ExtElement._make(self.algebra, out)

    def __rmul__(self, other: int) -> "ExtElement":
        return self * other

    def __pow__(self, exponent: int) -> "ExtElement":
        result = self.algebra.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExtElement):
            return NotImplemented
        return self.algebra == other.algebra and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.algebra, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in sorted(self._terms.items()):
            name = "∧".join(f"a{i}" for i in m) or "1"
            parts.append(f"{c}*{name}")
        return " + ".join(parts)


def _normalized(algebra: ExtAlgebra, terms: Dict[ExtMonomial, int]) -> Dict[ExtMonomial, int]:
    if algebra.ring is Ring.GF2:
        return {m: 1 for m, c in terms.items() if c % 2}
    return {m: c for m, c in terms.items() if c}


def ext_new(s: int, cut: int, ring: Ring = Ring.ZZ) -> ExtAlgebra:
    if s < 1 or cut < 1:
        raise ValueError(f"exterior algebra needs s >= 1 and cut >= 1, got s={s}, cut={cut}")
    return ExtAlgebra(s=s, cut=cut, ring=ring)


def ext_mul(a: ExtElement, b: ExtElement) -> ExtElement:
    return a * b


def ext_dim(algebra: ExtAlgebra, q: int) -> int:
    return algebra.dim(q)


def reduce_mod2(a: ExtElement) -> ExtElement:
    return a.reduce_mod2()


def random_element(algebra: ExtAlgebra, rng: Random, terms: int = 3, degree: Optional[int] = None, bound: int = 5) -> ExtElement:
    """
    Sparse element with up to `terms` monomials, homogeneous when `degree` is given.
    """
    out: Dict[ExtMonomial, int] = {}
    for _ in range(terms):
        q = degree if degree is not None else rng.randint(0, min(algebra.cut, algebra.s))
        mono = tuple(sorted(rng.sample(range(1, algebra.s + 1), q)))
        out[mono] = out.get(mono, 0) + rng.randint(-bound, bound)
    return ExtElement._make(algebra, out)

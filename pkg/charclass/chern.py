# charclass/chern.py
"""
Total Chern classes of Sym^n M_g (Macdonald) and of the open Sym^n M_{g,k}.

Closed:    c = (1+η)^{n-2g+1} Π_i (1 + η - ξ_i ξ'_i)   in the tensor power.
Punctured: c = Π_i (1 - α_{2i-1} α_{2i})               in Λ^{≤n}(α_1..α_s).

The α-basis re-indexes the surface pairing (γ_i, γ_{g+i}) to adjacent pairs:
γ_i -> α_{2i-1}, γ_{g+i} -> α_{2i}, extra punctured generators fill α_{2g+1}..α_s.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Dict, Generic, Optional, Tuple, TypeVar, Union

from sympy import binomial

from errors import InvariantViolation
from exterior.algebra import ExtAlgebra, ExtElement, ExtMonomial
from surface.ring import PuncturedBasis, SurfaceClass, punctured_restrict
from tensor_oracle.tensor import TensorElement, TensorPower, eta, eval_top, xi, xi_prime

logger = logging.getLogger("symprod.charclass")

E = TypeVar("E", ExtElement, TensorElement)


@dataclass(frozen=True)
class ChernData(Generic[E]):
    total: E
    classes: Tuple[E, ...]  # c_0..c_n, c_q of degree 2q

    @classmethod
    def split(cls, total: E, n: int) -> "ChernData[E]":
        return cls(total=total, classes=tuple(total.homogeneous(2 * q) for q in range(n + 1)))

    @property
    def n(self) -> int:
        return len(self.classes) - 1

    def c(self, q: int) -> E:
        if 0 <= q <= self.n:
            return self.classes[q]
        return self.total.parent.zero()


def _binomial_series(x: TensorElement, exponent: int, order: int) -> TensorElement:
    # (1+x)^exponent for nilpotent x with x^{order+1} = 0; exponent may be negative
    result = x.power.zero()
    term = x.power.one()
    for j in range(order + 1):
        coeff = int(binomial(exponent, j))
        if coeff:
            result = result + term * coeff
        term = term * x
        if term.is_zero():
            break
    return result


def alpha_index(g: int, j: int) -> int:
    """
    Position of i*(γ_j) (or of the extra generator ε_j, j > 2g) in the α-basis.
    """
    if j <= g:
        return 2 * j - 1
    if j <= 2 * g:
        return 2 * (j - g)
    return j


@lru_cache(maxsize=None)
def chern_total_closed(g: int, n: int) -> ChernData[TensorElement]:
    if g < 0 or n < 1:
        raise ValueError(f"need g >= 0 and n >= 1, got g={g}, n={n}")
    power = TensorPower(g=g, n=n)
    e = eta(power)
    total = _binomial_series(e, n - 2 * g + 1, n)
    for i in range(1, g + 1):
        total = total * (power.one() + e - xi(power, i) * xi_prime(power, i))
    logger.info("closed total Chern class g=%s n=%s: %s terms", g, n, len(total.terms))
    return ChernData.split(total, n)


def _chi_product_image(labels: Tuple[int, ...], n: int) -> Dict[Tuple[int, ...], int]:
    """
    χ(ε_{l1})···χ(ε_{lq}) in the tensor power of the punctured ring, with factor
    codes 0 = unit and j = ε_j.
    """
    out: Dict[Tuple[int, ...], int] = {}
    for slots in permutations(range(n), len(labels)):
        mono = [0] * n
        for label, slot in zip(labels, slots):
            mono[slot] = label
        inversions = sum(1 for x in range(len(slots)) for y in range(x + 1, len(slots)) if slots[x] > slots[y])
        key = tuple(mono)
        out[key] = out.get(key, 0) + (-1 if inversions & 1 else 1)
    return out


def _factor_code(a: SurfaceClass, basis: PuncturedBasis) -> Optional[int]:
    image = punctured_restrict(a, basis)
    if image.is_zero():
        return None
    (mono,) = image.terms
    return mono[0] if mono else 0


def restrict_punctured(t: TensorElement, g: int, k: int, n: int) -> ExtElement:
    """
    i*_(n): χ(γ_j) -> α-image of ε_j, χ(δ) -> 0, into Λ^{≤n}(2g+k-1).
    """
    if t.power.g != g or t.power.n != n or t.power.modulus is not None:
        raise ValueError(f"{t.power!r} is not the rational tensor power for g={g}, n={n}")
    basis = PuncturedBasis(g=g, k=k)

    # factorwise i*, factor codes 0 = unit and j = ε_j; terms holding δ vanish
    pulled: Dict[Tuple[int, ...], Fraction] = {}
    for mono, coeff in t.terms.items():
        codes = [_factor_code(f, basis) for f in mono]
        if None in codes:
            continue
        key = tuple(codes)
        pulled[key] = pulled.get(key, 0) + coeff
    pulled = {m: c for m, c in pulled.items() if c}

    # coefficient of ε_L is read at the leading placement: labels ascending in slots 0..q-1
    extracted: Dict[Tuple[int, ...], Union[int, Fraction]] = {}
    for mono, coeff in pulled.items():
        labels = tuple(x for x in mono if x)
        q = len(labels)
        if all(mono[:q]) and list(labels) == sorted(set(labels)):
            extracted[labels] = coeff

    rebuilt: Dict[Tuple[int, ...], Union[int, Fraction]] = {}
    for labels, coeff in extracted.items():
        for mono, sign in _chi_product_image(labels, n).items():
            rebuilt[mono] = rebuilt.get(mono, 0) + sign * coeff
    if {m: c for m, c in rebuilt.items() if c} != pulled:
        raise ValueError("element is not a polynomial in the χ-images of surface classes")

    terms: Dict[ExtMonomial, int] = {}
    for labels, coeff in extracted.items():
        if Fraction(coeff).denominator != 1:
            raise ValueError(f"non-integral coefficient {coeff} on χ-monomial {labels}")
        terms[tuple(alpha_index(g, j) for j in labels)] = int(coeff)
    algebra = ExtAlgebra(s=basis.s, cut=n)
    return ExtElement(algebra, terms)


def chern_total_punctured(g: int, k: int, n: int) -> ChernData[ExtElement]:
    basis = PuncturedBasis(g=g, k=k)
    algebra = ExtAlgebra(s=basis.s, cut=n)
    total = algebra.one()
    for i in range(1, g + 1):
        total = total * (algebra.one() - algebra.generator(2 * i - 1) * algebra.generator(2 * i))
    return ChernData.split(total, n)


def euler_char_closed(g: int, n: int) -> int:
    value = eval_top(chern_total_closed(g, n).c(n))
    if value.denominator != 1:
        raise InvariantViolation(f"Euler characteristic of Sym^{n} M_{g} came out non-integral: {value}")
    return int(value)

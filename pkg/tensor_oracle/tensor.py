# tensor_oracle/tensor.py
"""
Graded tensor power H*(M_g)^{⊗n} with exact rational coefficients.

Products follow the Koszul rule and S_n acts by signed permutation of the
factors, so the action is by ring automorphisms. The Macdonald ring of
Sym^n M_g lives inside the invariants, generated by
ξ_i = χ(γ_i), ξ'_i = χ(γ_{g+i}) and η = χ(δ).
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import factorial
from numbers import Rational
from random import Random
from types import MappingProxyType
from typing import Dict, Iterator, List, Literal, Mapping, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

from surface.ring import DELTA, UNIT, SurfaceClass, _mul, surface_basis

TensorMonomial = Tuple[SurfaceClass, ...]
Coefficient = Union[int, Fraction]


class TensorPower(BaseModel):
    g: int = Field(ge=0)
    n: int = Field(ge=1)
    modulus: Optional[Literal[2]] = None

    model_config = ConfigDict(frozen=True)

    def basis(self, q: int) -> Iterator[TensorMonomial]:
        for factors in product(surface_basis(self.g), repeat=self.n):
            if sum(f.degree for f in factors) == q:
                yield factors

    def zero(self) -> "TensorElement":
        return TensorElement._make(self, {})

    def one(self) -> "TensorElement":
        return TensorElement._make(self, {(UNIT,) * self.n: 1})

    def monomial(self, factors: Sequence[SurfaceClass], coeff: Coefficient = 1) -> "TensorElement":
        return TensorElement(self, {tuple(factors): coeff})

    def mod2(self) -> "TensorPower":
        return TensorPower(g=self.g, n=self.n, modulus=2)


def _koszul_sign(a: TensorMonomial, b: TensorMonomial) -> int:
    # (-1)^{sum_{i>j} deg a_i deg b_j}
    parity = 0
    odd_after = 0
    for j in range(len(a) - 1, -1, -1):
        if b[j].degree & 1:
            parity ^= odd_after & 1
        if a[j].degree & 1:
            odd_after += 1
    return -1 if parity else 1


class TensorElement:
    __slots__ = ("power", "_terms")

    def __init__(self, power: TensorPower, terms: Mapping[Sequence[SurfaceClass], Coefficient] = MappingProxyType({})):
        clean: Dict[TensorMonomial, Coefficient] = {}
        for raw, coeff in terms.items():
            mono = tuple(raw)
            if len(mono) != power.n:
                raise ValueError(f"tensor monomial {mono!r} needs exactly {power.n} factors")
            for factor in mono:
                factor.check(power.g)
            clean[mono] = clean.get(mono, 0) + coeff
        self.power = power
        self._terms = _normalized(power, clean)

    @classmethod
    def _make(cls, power: TensorPower, terms: Dict[TensorMonomial, Coefficient]) -> "TensorElement":
        obj = cls.__new__(cls)
        obj.power = power
        obj._terms = _normalized(power, terms)
        return obj

    @property
    def parent(self) -> TensorPower:
        return self.power

    @property
    def terms(self) -> Mapping[TensorMonomial, Coefficient]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> List[int]:
        return sorted({_degree(m) for m in self._terms})

    def homogeneous(self, q: int) -> "TensorElement":
        return TensorElement._make(self.power, {m: c for m, c in self._terms.items() if _degree(m) == q})

    def reduce_mod2(self) -> "TensorElement":
        """
        Coefficientwise reduction, i.e. the mod-2 class pulled back to (M_g)^n.
        """
        for mono, coeff in self._terms.items():
            if Fraction(coeff).denominator != 1:
                raise ValueError(f"non-integral coefficient {coeff} on {mono!r}")
        return TensorElement._make(self.power.mod2(), {m: int(c) for m, c in self._terms.items()})

    def _check(self, other: "TensorElement") -> None:
        if self.power != other.power:
            raise ValueError(f"ambient mismatch: {self.power!r} vs {other.power!r}")

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return TensorElement._make(self.power, out)

    def __neg__(self) -> "TensorElement":
        return TensorElement._make(self.power, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def __mul__(self, other: Union["TensorElement", Coefficient]) -> "TensorElement":
        if isinstance(other, Rational):
            return TensorElement._make(self.power, {m: c * other for m, c in self._terms.items()})
        self._check(other)
        g = self.power.g
        out: Dict[TensorMonomial, Coefficient] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                coeff = _koszul_sign(ma, mb) * ca * cb
                factors = []
                for x, y in zip(ma, mb):
                    term = _mul(x, y, g)
                    if term is None:
                        break
                    coeff *= term[0]
                    factors.append(term[1])
                else:
                    mono = tuple(factors)
                    out[mono] = out.get(mono, 0) + coeff
        return TensorElement._make(self.power, out)

    def __rmul__(self, other: Coefficient) -> "TensorElement":
        return self * other

    def __pow__(self, exponent: int) -> "TensorElement":
        result = self.power.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.power == other.power and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.power, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*" + "⊗".join(map(repr, m)) for m, c in sorted(self._terms.items()))


def _degree(mono: TensorMonomial) -> int:
    return sum(f.degree for f in mono)


def _normalized(power: TensorPower, terms: Dict[TensorMonomial, Coefficient]) -> Dict[TensorMonomial, Coefficient]:
    if power.modulus == 2:
        return {m: 1 for m, c in terms.items() if c % 2}
    return {m: c for m, c in terms.items() if c}


def tensor_mul(a: TensorElement, b: TensorElement) -> TensorElement:
    return a * b


def chi(w: Union[SurfaceClass, Mapping[SurfaceClass, Coefficient], None], power: TensorPower) -> TensorElement:
    """
    χ(ω) = ω⊗1⊗..⊗1 + 1⊗ω⊗..⊗1 + ... + 1⊗..⊗1⊗ω, linear in ω.
    """
    if w is None:
        return power.zero()
    combination = {w: 1} if isinstance(w, SurfaceClass) else dict(w)
    out: Dict[TensorMonomial, Coefficient] = {}
    for cls, coeff in combination.items():
        cls.check(power.g)
        for slot in range(power.n):
            mono = tuple(cls if i == slot else UNIT for i in range(power.n))
            out[mono] = out.get(mono, 0) + coeff
    return TensorElement._make(power, out)


def eta(power: TensorPower) -> TensorElement:
    return chi(DELTA, power)


def xi(power: TensorPower, i: int) -> TensorElement:
    return chi(SurfaceClass.gamma(i), power)


def xi_prime(power: TensorPower, i: int) -> TensorElement:
    return chi(SurfaceClass.gamma(power.g + i), power)


def _check_permutation(sigma: Sequence[int], n: int) -> None:
    if sorted(sigma) != list(range(n)):
        raise ValueError(f"{tuple(sigma)} is not a permutation of 0..{n - 1}")


def permute_monomial(sigma: Sequence[int], mono: TensorMonomial) -> Tuple[int, TensorMonomial]:
    """
    Move factor i to slot sigma[i]; sign counts inversions among odd factors.
    """
    moved: List[SurfaceClass] = [UNIT] * len(mono)
    odd: List[int] = []
    for i, factor in enumerate(mono):
        moved[sigma[i]] = factor
        if factor.degree & 1:
            odd.append(sigma[i])
    inversions = sum(1 for x in range(len(odd)) for y in range(x + 1, len(odd)) if odd[x] > odd[y])
    return (-1 if inversions & 1 else 1), tuple(moved)


def permute(sigma: Sequence[int], t: TensorElement) -> TensorElement:
    """
    Signed action of sigma (0-based images, sigma[i] = new slot of factor i).
    """
    _check_permutation(sigma, t.power.n)
    out: Dict[TensorMonomial, Coefficient] = {}
    for mono, coeff in t.terms.items():
        sign, moved = permute_monomial(sigma, mono)
        out[moved] = out.get(moved, 0) + sign * coeff
    return TensorElement._make(t.power, out)


def eval_top(t: TensorElement) -> Fraction:
    """
    Evaluation on [Sym^n M_g]: coefficient of δ⊗...⊗δ divided by n!.
    """
    n = t.power.n
    bad = [d for d in t.degrees() if d != 2 * n]
    if bad:
        raise ValueError(f"eval_top needs pure degree {2 * n}, found degrees {bad}")
    return Fraction(t.terms.get((DELTA,) * n, 0)) / factorial(n)


def random_tensor(power: TensorPower, rng: Random, terms: int = 3, bound: int = 3) -> TensorElement:
    basis = surface_basis(power.g)
    out: Dict[TensorMonomial, Coefficient] = {}
    for _ in range(terms):
        mono = tuple(rng.choice(basis) for _ in range(power.n))
        out[mono] = out.get(mono, 0) + rng.randint(-bound, bound)
    return TensorElement._make(power, out)

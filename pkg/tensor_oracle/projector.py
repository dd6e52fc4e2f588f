# tensor_oracle/projector.py
"""
Rational ranks inside the tensor power: the S_n-invariant projector, the span
of Macdonald monomials, and Macdonald's Poincaré generating function.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from functools import reduce
from itertools import combinations, permutations
from math import factorial
from operator import mul
from typing import Dict, Iterable, List, Optional, Tuple

from sympy import Poly, binomial, symbols
from sympy.polys.domains import QQ
from sympy.polys.matrices import DM

from errors import ResourceLimitError
from tensor_oracle.tensor import (
    TensorElement,
    TensorMonomial,
    TensorPower,
    eta,
    permute_monomial,
    xi,
    xi_prime,
)

logger = logging.getLogger("symprod.tensor_oracle")


def oracle_work(g: int, n: int) -> int:
    return factorial(n) * (2 * g + 2) ** n


def check_work(g: int, n: int, max_work: Optional[int]) -> None:
    if max_work is not None and oracle_work(g, n) > max_work:
        raise ResourceLimitError(
            f"oracle for g={g}, n={n} needs {oracle_work(g, n)} basis-action evaluations "
            f"(cap {max_work}); raise --max-work to allow it"
        )


def rational_rank(vectors: Iterable[Dict[TensorMonomial, object]]) -> int:
    """
    Rank over Q of sparse vectors keyed by tensor monomials.
    """
    rows = [v for v in vectors if v]
    if not rows:
        return 0
    columns = sorted({m for v in rows for m in v})
    position = {m: i for i, m in enumerate(columns)}
    dense = []
    for v in rows:
        row: List[Tuple[int, int]] = [(0, 1)] * len(columns)
        for m, c in v.items():
            c = Fraction(c)
            row[position[m]] = (c.numerator, c.denominator)
        dense.append(row)
    return DM(dense, QQ).rank()


def invariant_dim(g: int, n: int, q: int, max_work: Optional[int] = None) -> int:
    """
    q-th Betti number of Sym^n M_g as the rank of (1/n!) Σ_σ σ on degree q.
    """
    check_work(g, n, max_work)
    power = TensorPower(g=g, n=n)
    perms = list(permutations(range(n)))
    seen = set()
    images = []
    for mono in power.basis(q):
        image: Dict[TensorMonomial, int] = {}
        for sigma in perms:
            sign, moved = permute_monomial(sigma, mono)
            image[moved] = image.get(moved, 0) + sign
        image = {m: c for m, c in image.items() if c}
        key = frozenset(image.items())
        negated = frozenset((m, -c) for m, c in image.items())
        if image and key not in seen and negated not in seen:
            seen.add(key)
            images.append(image)
    rank = rational_rank(images)
    logger.debug("invariant_dim g=%s n=%s q=%s -> %s (%s orbit sums)", g, n, q, rank, len(images))
    return rank


def macdonald_monomials(power: TensorPower, q: int) -> List[TensorElement]:
    """
    ξ_I ξ'_J η^r of degree q, I and J subsets of 1..g.
    """
    g = power.g
    e = eta(power)
    out = []
    for a in range(g + 1):
        for b in range(g + 1):
            rest = q - a - b
            if rest < 0 or rest % 2:
                continue
            for left in combinations(range(1, g + 1), a):
                for right in combinations(range(1, g + 1), b):
                    factors = [xi(power, i) for i in left] + [xi_prime(power, i) for i in right]
                    factors += [e] * (rest // 2)
                    out.append(reduce(mul, factors, power.one()))
    return out


def macdonald_span_dim(g: int, n: int, q: int, max_work: Optional[int] = None) -> int:
    check_work(g, n, max_work)
    power = TensorPower(g=g, n=n)
    rank = rational_rank(dict(t.terms) for t in macdonald_monomials(power, q))
    logger.debug("macdonald_span_dim g=%s n=%s q=%s -> %s", g, n, q, rank)
    return rank


def macdonald_betti(g: int, n: int) -> List[int]:
    """
    Betti numbers b_0..b_2n of Sym^n M_g read off
    Σ_n P_t(Sym^n M_g) z^n = (1+tz)^{2g} / ((1-z)(1-t²z)).
    """
    z, t = symbols("z t")
    numerator = Poly((1 + t * z) ** (2 * g), z, t)
    ones = Poly(sum(z**a for a in range(n + 1)), z, t)
    evens = Poly(sum(t ** (2 * b) * z**b for b in range(n + 1)), z, t)
    series = numerator * ones * evens
    betti = [0] * (2 * n + 1)
    for (dz, dt), coeff in series.terms():
        if dz == n:
            betti[dt] = int(coeff)
    return betti


def euler_series_coefficient(g: int, n: int) -> int:
    # coefficient of z^n in (1-z)^{2g-2}
    return int((-1) ** n * binomial(2 * g - 2, n))

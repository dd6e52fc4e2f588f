from itertools import permutations, product

import numpy as np
import pytest

from charclass.chern import (
    alpha_index,
    chern_total_closed,
    chern_total_punctured,
    euler_char_closed,
    restrict_punctured,
)
from charclass.classes import AltFormZ2, pontrjagin, stiefel_whitney, w2_form
from exterior.algebra import ExtAlgebra
from surface.ring import DELTA, UNIT, PuncturedBasis, SurfaceClass, punctured_restrict, surface_basis
from tensor_oracle.projector import euler_series_coefficient
from tensor_oracle.tensor import TensorPower, chi, eta, permute, xi, xi_prime


@pytest.mark.parametrize("n", range(2, 6))
def test_genus_zero_anchor(n):
    power = TensorPower(g=0, n=n)
    chern = chern_total_closed(0, n)
    assert chern.total == (power.one() + eta(power)) ** (n + 1)
    assert chern.c(1) == eta(power) * (n + 1)
    assert chern.c(0) == power.one()
    assert chern.c(n + 1).is_zero()
    assert euler_char_closed(0, n) == n + 1


def test_torus_square_classes():
    power = TensorPower(g=1, n=2)
    e, x = eta(power), xi(power, 1) * xi_prime(power, 1)
    chern = chern_total_closed(1, 2)
    assert chern.c(1) == e * 2 - x
    assert chern.c(2) == e * e - e * x
    assert euler_char_closed(1, 2) == 0


def test_negative_exponent_expansion():
    # n - 2g + 1 = -1
    power = TensorPower(g=2, n=2)
    e = eta(power)
    inverse = power.one() - e + e * e
    expected = inverse
    for i in (1, 2):
        expected = expected * (power.one() + e - xi(power, i) * xi_prime(power, i))
    assert chern_total_closed(2, 2).total == expected
    assert euler_char_closed(2, 2) == 1


@pytest.mark.parametrize("g,n", [(1, 3), (2, 2), (2, 3)])
def test_closed_chern_classes_are_invariant(g, n):
    chern = chern_total_closed(g, n)
    for sigma in permutations(range(n)):
        for c in chern.classes:
            assert permute(sigma, c) == c


@pytest.mark.parametrize("g,n", [(g, n) for g in range(4) for n in range(2, 5)])
def test_euler_characteristic_matches_series(g, n):
    assert euler_char_closed(g, n) == euler_series_coefficient(g, n)


def test_alpha_index():
    assert [alpha_index(2, j) for j in range(1, 6)] == [1, 3, 2, 4, 5]


def test_restriction_examples():
    g, k, n = 2, 1, 2
    power = TensorPower(g=g, n=n)
    algebra = ExtAlgebra(s=4, cut=2)
    assert restrict_punctured(eta(power), g, k, n).is_zero()
    for i in (1, 2):
        image = restrict_punctured(xi(power, i) * xi_prime(power, i), g, k, n)
        assert image == algebra.generator(2 * i - 1) * algebra.generator(2 * i)
    assert restrict_punctured(xi(power, 2), g, k, n) == algebra.generator(3)


def test_restriction_rejects_non_chi_input():
    power = TensorPower(g=1, n=2)
    with pytest.raises(ValueError):
        restrict_punctured(power.monomial((SurfaceClass.gamma(1), UNIT)), 1, 1, 2)
    with pytest.raises(ValueError):
        restrict_punctured(eta(power), 1, 1, 3)


@pytest.mark.parametrize("g,k,n", [(1, 1, 2), (2, 2, 2), (2, 3, 3)])
def test_restriction_follows_factor_images(g, k, n):
    power = TensorPower(g=g, n=n)
    basis = PuncturedBasis(g=g, k=k)
    algebra = ExtAlgebra(s=basis.s, cut=n)
    for a in surface_basis(g):
        image = punctured_restrict(a, basis)
        if a.degree != 1:
            continue
        (mono,) = image.terms
        assert restrict_punctured(chi(a, power), g, k, n) == algebra.generator(alpha_index(g, mono[0]))
    assert punctured_restrict(DELTA, basis).is_zero()
    assert restrict_punctured(chi(DELTA, power), g, k, n).is_zero()


@pytest.mark.parametrize(
    "g,k,n", [(g, k, n) for g in range(4) for k in range(1, 4) for n in range(2, 5)]
)
def test_restriction_consistency(g, k, n):
    assert restrict_punctured(chern_total_closed(g, n).total, g, k, n) == chern_total_punctured(g, k, n).total


def test_punctured_examples():
    for k, n in product(range(1, 4), range(2, 5)):
        assert chern_total_punctured(0, k, n).total == ExtAlgebra(s=k - 1, cut=n).one()

    algebra = ExtAlgebra(s=4, cut=4)
    a = [None] + [algebra.generator(i) for i in range(1, 5)]
    chern = chern_total_punctured(2, 1, 4)
    assert chern.c(1) == -(a[1] * a[2] + a[3] * a[4])
    assert chern.c(2) == a[1] * a[2] * a[3] * a[4]

    small = chern_total_punctured(1, 2, 2)
    b = ExtAlgebra(s=3, cut=2)
    assert small.c(1) == -(b.generator(1) * b.generator(2))
    assert small.c(2).is_zero()


def test_stiefel_whitney_punctured():
    g, k, n = 2, 3, 3
    w = stiefel_whitney(chern_total_punctured(g, k, n))
    assert len(w) == 2 * n
    assert all(w[d - 1].is_zero() for d in (1, 3, 5))
    bar = ExtAlgebra(s=2 * g + k - 1, cut=n).mod2()
    assert w[1] == bar.element({(1, 2): 1, (3, 4): 1})


def test_stiefel_whitney_complex_projective_plane():
    power = TensorPower(g=0, n=2)
    w = stiefel_whitney(chern_total_closed(0, 2))
    assert w[0].is_zero()
    assert w[1] == eta(power).reduce_mod2()
    assert not w[1].is_zero()


def test_pontrjagin_examples():
    assert all(p.is_zero() for p in pontrjagin(chern_total_punctured(2, 1, 4)))

    power = TensorPower(g=0, n=2)
    assert pontrjagin(chern_total_closed(0, 2)) == (eta(power) ** 2 * 3,)

    (p1,) = pontrjagin(chern_total_closed(1, 2))
    assert p1.is_zero()


@pytest.mark.parametrize("g,k,n", [(g, k, n) for g in range(5) for k in range(1, 5) for n in range(2, 6)])
def test_pontrjagin_vanishes_on_punctured(g, k, n):
    classes = pontrjagin(chern_total_punctured(g, k, n))
    assert len(classes) == n // 2
    assert all(p.is_zero() for p in classes)


def test_w2_form_examples():
    assert w2_form(1, 2, 2).to_list() == [[0, 1, 0], [1, 0, 0], [0, 0, 0]]
    assert not w2_form(0, 4, 3).matrix.any()
    block = [[0, 1], [1, 0]]
    expected = np.zeros((4, 4), dtype=np.uint8)
    expected[:2, :2] = block
    expected[2:, 2:] = block
    assert w2_form(2, 1, 2) == AltFormZ2(expected)


def test_w2_form_matches_reduced_c1():
    w = stiefel_whitney(chern_total_punctured(3, 2, 4))[1]
    assert AltFormZ2.from_class(w) == w2_form(3, 2, 4)
    assert w == chern_total_punctured(3, 2, 4).c(1).reduce_mod2()


def test_alt_form_validation():
    with pytest.raises(ValueError):
        AltFormZ2(np.zeros((2, 3)))
    with pytest.raises(ValueError):
        AltFormZ2.from_class(chern_total_punctured(1, 1, 2).c(1))
    assert not AltFormZ2(np.eye(2)).is_alternating()
    assert AltFormZ2(np.array([[0, 3], [1, 0]])).is_alternating()


def test_chi_of_delta_restricts_to_zero():
    power = TensorPower(g=1, n=3)
    assert restrict_punctured(chi(SurfaceClass.delta(), power) * 5, 1, 2, 3).is_zero()

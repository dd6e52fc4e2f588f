from math import comb
from random import Random

import pytest
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DM

from exterior.algebra import ext_dim, ext_new
from skeleton.cellular import ChainComplex, homology, torus_cw, truncate


def test_torus_ranks():
    assert torus_cw(3).ranks == (1, 3, 3, 1)
    assert torus_cw(1).ranks == (1, 1)
    assert torus_cw(4).ranks == (1, 4, 6, 4, 1)
    assert all(d.is_zero_matrix for d in torus_cw(4).differentials)
    with pytest.raises(ValueError):
        torus_cw(0)


def test_truncate():
    assert truncate(torus_cw(3), 2).ranks == (1, 3, 3)
    assert truncate(torus_cw(4), 2).ranks == (1, 4, 6)
    assert truncate(torus_cw(3), 5) == torus_cw(3)
    with pytest.raises(ValueError):
        truncate(torus_cw(3), 0)


def test_two_skeleton_of_three_torus():
    summary = homology(truncate(torus_cw(3), 2))
    assert summary.betti == [1, 3, 3]
    assert summary.is_torsion_free


def test_multiplication_by_two():
    summary = homology(ChainComplex.from_lists([1, 1], [[[2]]]))
    assert summary.betti == [0, 0]
    assert summary.torsion == [[2], []]
    assert not summary.is_torsion_free


def test_ill_formed_complex_rejected():
    c = ChainComplex.from_lists([1, 1, 1], [[[1]], [[1]]])
    assert not c.is_complex()
    with pytest.raises(ValueError):
        homology(c)


def test_shape_mismatch_rejected():
    with pytest.raises(ValueError):
        ChainComplex.from_lists([1, 2], [[[1, 0, 0]]])


def _elementary(rng, size):
    m = [[int(i == j) for j in range(size)] for i in range(size)]
    i, j = rng.sample(range(size), 2)
    m[i][j] = rng.randint(-3, 3)
    return DM(m, ZZ)


def test_homology_invariant_under_unimodular_change_of_basis():
    rng = Random(5)
    base = DM([[2, 0], [0, 3]], ZZ)
    for _ in range(50):
        d2 = base
        for _ in range(3):
            d2 = _elementary(rng, 2).matmul(d2).matmul(_elementary(rng, 2))
        c = ChainComplex(ranks=(1, 2, 2), differentials=(DM([[0, 0]], ZZ), d2))
        summary = homology(c)
        assert summary.betti == [1, 0, 0]
        assert summary.torsion == [[], [6], []]


@pytest.mark.parametrize("s", range(1, 9))
def test_skeleton_agrees_with_exterior_ranks(s):
    for n in range(1, s + 1):
        summary = homology(truncate(torus_cw(s), n))
        assert summary.is_torsion_free
        algebra = ext_new(s, n)
        assert summary.betti == [ext_dim(algebra, q) for q in range(n + 1)]
        assert summary.betti == [comb(s, q) for q in range(n + 1)]

from itertools import product

import numpy as np
import pytest

from charclass.classes import AltFormZ2, w2_form
from classifier.gf2 import gf2_rank
from classifier.service import classify, compare, report, skew_rank
from models import SpaceSpec, Verdict


def spec(g, k, n, N=0):
    return SpaceSpec(g=g, k=k, n=n, N=N)


def test_report_examples():
    r = report(spec(1, 2, 3))
    assert (r.dimension, r.s, r.betti, r.w2_rank) == (6, 3, [1, 3, 3, 1], 2)
    assert r.pontrjagin == "zero"
    assert r.torsion_free
    assert r.pi1_rank == r.homotopy_class == 3
    assert [t.model_dump() for t in r.c1] == [{"monomial": [1, 2], "coeff": -1}]

    r = report(spec(0, 4, 3, 2))
    assert (r.dimension, r.s, r.w2_rank) == (8, 3, 0)
    assert r.c1 == []

    r = report(spec(2, 1, 2))
    assert (r.s, r.w2_rank) == (4, 4)


def test_report_of_contractible_space():
    r = report(spec(0, 1, 3))
    assert r.s == 0
    assert r.betti == [1, 0, 0, 0]
    assert r.torsion_free


def test_spec_validation():
    with pytest.raises(ValueError):
        spec(-1, 2, 3)
    with pytest.raises(ValueError):
        spec(1, 0, 3)
    with pytest.raises(ValueError):
        spec(1, 1, 1)


def test_skew_rank_examples():
    assert skew_rank(w2_form(1, 2, 3)) == 2
    assert skew_rank(AltFormZ2(np.zeros((5, 5)))) == 0
    assert skew_rank(w2_form(3, 1, 2)) == 6
    with pytest.raises(ValueError):
        skew_rank(AltFormZ2(np.eye(3)))


def test_gf2_rank():
    assert gf2_rank(np.array([[1, 1], [1, 1]])) == 1
    assert gf2_rank(np.array([[1, 0, 1], [0, 1, 1], [1, 1, 0]])) == 2
    assert gf2_rank(np.zeros((0, 0))) == 0


@pytest.mark.parametrize("g,k,n", [(g, k, n) for g in range(5) for k in range(1, 5) for n in range(2, 6)])
def test_genus_detection(g, k, n):
    assert skew_rank(w2_form(g, k, n)) == 2 * g


def test_compare_examples():
    a, b = spec(0, 5, 3), spec(1, 3, 3)
    result = classify(a, b)
    assert result.verdict is Verdict.HOMOTOPY_EQUIVALENT_NOT_HOMEOMORPHIC
    assert result.witness == "w2_rank: 0 vs 2"
    assert not result.previously_known

    assert compare(spec(0, 2, 2), spec(0, 3, 2)) is Verdict.NOT_HOMOTOPY_EQUIVALENT
    assert compare(spec(1, 1, 2), spec(1, 1, 2)) is Verdict.HOMEOMORPHIC

    known = classify(spec(2, 1, 2), spec(0, 5, 2))
    assert known.verdict is Verdict.HOMOTOPY_EQUIVALENT_NOT_HOMEOMORPHIC
    assert known.previously_known


def test_cross_n_comparisons():
    # same s, equal dimension through N, Betti vectors agree up to trailing zeros
    assert compare(spec(1, 1, 2, 2), spec(1, 1, 3)) is Verdict.UNDETERMINED
    assert compare(spec(0, 4, 2), spec(0, 4, 3)) is Verdict.NOT_HOMOTOPY_EQUIVALENT


def test_undetermined_cases():
    assert compare(spec(1, 1, 2, 1), spec(1, 1, 2, 3)) is Verdict.UNDETERMINED
    assert compare(spec(0, 3, 2), spec(1, 1, 2, 1)) is Verdict.UNDETERMINED


def test_w2_rank_ignores_euclidean_factor():
    for N in range(4):
        assert report(spec(2, 2, 3, N)).w2_rank == 4
    assert compare(spec(0, 5, 3, 2), spec(1, 3, 3, 2)) is compare(spec(0, 5, 3), spec(1, 3, 3))


def _specs(n):
    return [spec(g, k, n) for g in range(4) for k in range(1, 9) if 2 * g + k - 1 <= 7]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_classification_table(n):
    for a, b in product(_specs(n), repeat=2):
        result = classify(a, b)
        assert compare(b, a) is result.verdict
        if a == b:
            assert result.verdict is Verdict.HOMEOMORPHIC
        elif a.s != b.s:
            assert result.verdict is Verdict.NOT_HOMOTOPY_EQUIVALENT
            assert result.witness.startswith("s: ")
        else:
            assert a.g != b.g
            assert result.verdict is Verdict.HOMOTOPY_EQUIVALENT_NOT_HOMEOMORPHIC
            assert result.witness == f"w2_rank: {2 * a.g} vs {2 * b.g}"
            assert result.previously_known == (2 * max(a.g, b.g) >= n)

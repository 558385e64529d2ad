"""Plat pipeline: rounding to a braid, plat realization, standardization."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotpad.bracket import bracket_pd, bracket_plat, framed_invariant, tl_vafa_exponent
from knotpad.groups import load_preset
from knotpad.homcount import homcount_pd, homcount_plat
from knotpad.pd import DiagramError
from knotpad.plat import PlatDiagram, plat_component_count, plat_to_pd, random_plat
from knotpad.platreduce import (
    BraidWord,
    braid_closure_pd,
    braid_to_plat,
    bridge_distance,
    certificates_for,
    reduce_plat,
    standardize,
    to_braid,
    vafa_pad,
    volume_bounds,
)

# braid words frozen from the rounding algorithm; regular isotopy of the
# closures is separately oracle-checked below
FROZEN_WORDS = {
    "unknot": (1, []),
    "unknot-kink-pos": (2, [1]),
    "trefoil": (2, [-1, -1, -1]),
    "trefoil-mirror": (2, [1, 1, 1]),
    "figure-eight": (3, [1, -2, 1, -2]),
    "5_2": (4, [-2, 1, -2, 3, -2, -2, -1, -2, -3]),
    "6_1": (5, [1, -2, -3, -2, -1, -4, 3, -2, 3, 4, 3, -2]),
    "granny": (3, [-1, 2, -1, -1, -1, -2, -1, -1]),
    "square": (3, [1, 1, -2, -2, -2, 1]),
}


def test_braidword_validation():
    with pytest.raises(DiagramError):
        BraidWord(0, [])
    with pytest.raises(DiagramError):
        BraidWord(2, [2])
    with pytest.raises(DiagramError):
        BraidWord(2, [0])
    assert BraidWord(3, [1, -2, 1]).writhe() == 1


def test_frozen_braid_words(corpus):
    for name, (strands, letters) in FROZEN_WORDS.items():
        beta = to_braid(corpus[name])
        assert (beta.strands, list(beta.letters)) == (strands, letters), name


def test_rounding_preserves_regular_isotopy(corpus):
    for name in ("trefoil", "figure-eight", "5_2", "granny", "square"):
        K = corpus[name]
        C = braid_closure_pd(to_braid(K))
        assert C.writhe() == K.writhe(), name
        assert bracket_pd(C, 12, cap=40) == bracket_pd(K, 12, cap=40), name


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([2, 3]), st.integers(1, 5))
def test_rounding_random_oracle(seed, m, n):
    GC = load_preset("a5/5cycle-a")
    rng = random.Random(seed)
    P = random_plat(rng, m, n, max_coeff=2)
    K = plat_to_pd(P)
    if K.crossing_count() > 14:
        return
    C = braid_closure_pd(to_braid(K))
    assert C.writhe() == K.writhe()
    if C.crossing_count() <= 40:
        assert homcount_pd(C, GC) == homcount_plat(P, GC)


def test_braid_to_plat_exact(corpus):
    for name in ("trefoil", "figure-eight", "granny"):
        K = corpus[name]
        P = braid_to_plat(to_braid(K))
        assert plat_component_count(P) == 1
        assert bracket_plat(P, 12) == bracket_pd(K, 12), name


def test_standardize_shape(corpus):
    for name in ("unknot", "trefoil", "figure-eight", "5_2"):
        P = standardize(braid_to_plat(to_braid(corpus[name])))
        assert P.m >= 3
        assert P.n % 2 == 0
        assert P.n > 4 * P.m * (P.m - 2)
        assert bracket_plat(P, 12) == bracket_pd(corpus[name], 12), name


def test_vafa_pad():
    P = PlatDiagram(3, [[1, -2], [0, 3, -1], [2, 1]])
    N = 12
    T = tl_vafa_exponent(N)
    Q = vafa_pad(P, T)
    assert Q.is_highly_twisted()
    # padded coefficients move away from zero by exactly 2T
    for row, qrow in zip(P.rows, Q.rows):
        for a, b in zip(row, qrow):
            assert b == (a + 2 * T if a >= 0 else a - 2 * T)
    assert bracket_plat(Q, N) == bracket_plat(P, N)


def test_bridge_distance_spots():
    assert bridge_distance(3, 13) == 7
    assert bridge_distance(3, 14) == 7
    assert bridge_distance(4, 33) == 9
    with pytest.raises(DiagramError):
        bridge_distance(2, 50)


def test_volume_bounds():
    lo, hi = volume_bounds(3, 22)
    t = (2 * 3 - 1) * 22 // 2
    assert lo == pytest.approx(1.01494 * (t - 2))
    assert hi == pytest.approx(10 * 1.01494 * (t - 1))
    assert lo > 0


def test_reduce_plat_end_to_end(corpus):
    N = 12
    K = corpus["trefoil"]
    rep = reduce_plat(K, f"tl:{N}")
    assert all(rep.certificates.values())
    assert rep.distance > 2 * rep.m
    assert bracket_plat(rep.output, N) == framed_invariant(K, N)
    assert rep.n == rep.output.n and rep.m == rep.output.m
    obj = rep.to_json_obj()
    assert obj["type"] == "plat-reduction-report"
    assert obj["certificates"]["hyperbolic"]


def test_certificates_for_rejects_weak_plats():
    certs = certificates_for(PlatDiagram(3, [[1, 0], [3, 3, 3]]))
    assert not certs["highly_twisted"]
    assert not certs["n_gt_bound"]
    assert not certs["hyperbolic"]

"""Alternating-side pipeline: flips, nugatory scan, primeness, fallbacks."""

import pytest

from knotpad.alternating import (
    flip_set,
    make_alternating,
    nugatory_crossings,
    prime_decompose,
    recognize_special,
    reduce_alternating,
    remove_nugatory,
    theory_exponent,
    torus_fallback,
)
from knotpad.bracket import (
    framed_invariant,
    framed_invariant_plat,
    tl_vafa_exponent,
    twist_power,
)
from knotpad.pd import DiagramError, kinked_unknot, unknot_diagram
from knotpad.plat import plat_component_count


def test_flip_set(corpus):
    assert flip_set(corpus["trefoil"]) == set()
    assert len(flip_set(corpus["trefoil-switched"])) == 1
    assert len(flip_set(corpus["figure-eight-switched"])) == 1


def test_make_alternating_exact(corpus):
    N = 12
    T = tl_vafa_exponent(N)
    for name in ("trefoil-switched", "figure-eight-switched", "granny-switched"):
        K = corpus[name]
        K2 = make_alternating(K, T)
        assert K2.is_alternating(), name
        # each flip widens to a 2T-1 twist region; invisible to the invariant
        assert framed_invariant(K2, N, cap=32) == framed_invariant(K, N), name


def test_nugatory_scan():
    assert nugatory_crossings(kinked_unknot((1, 1, -1))) != []
    K2, dw, events = remove_nugatory(kinked_unknot((1, 1, -1)))
    assert K2.crossing_count() == 0
    # removing the +, +, - kinks divides the framed invariant by theta
    assert dw == -1
    assert len(events) == 3


def test_prime_decompose(corpus):
    assert prime_decompose(corpus["trefoil"])[0] is not None
    summands, splices = prime_decompose(corpus["granny"])
    assert len(summands) == 2
    assert all(s.crossing_count() == 3 for s in summands)
    summands, _ = prime_decompose(corpus["figure-eight"])
    assert len(summands) == 1
    summands, _ = prime_decompose(unknot_diagram())
    assert summands == []


def test_recognize_special(corpus):
    assert recognize_special(unknot_diagram()) == ("trivial", None)
    assert recognize_special(corpus["trefoil"]) == ("torus", -3)
    assert recognize_special(corpus["trefoil-mirror"]) == ("torus", 3)
    assert recognize_special(corpus["figure-eight"]) == ("hyperbolic", None)
    assert recognize_special(corpus["5_2"]) == ("hyperbolic", None)


def test_torus_fallback_grid(corpus):
    N = 12
    T = tl_vafa_exponent(N)
    for p, name in ((-3, "trefoil"), (3, "trefoil-mirror")):
        P, out = torus_fallback(p, T)
        assert plat_component_count(P) == 1
        assert P.is_highly_twisted()
        assert out.is_alternating()
        # bracket relation: one twist unit times the input torus diagram
        want = framed_invariant(corpus[name], N) * twist_power(N, 1 if p > 0 else -1)
        assert framed_invariant_plat(P, N) == want, p
    with pytest.raises(ValueError):
        torus_fallback(3, 1)
    with pytest.raises(DiagramError):
        torus_fallback(4, 6)


def test_reduce_alternating_branches(corpus):
    N = 12
    T = tl_vafa_exponent(N)
    expected_case = {
        "unknot": "unknot_fallback",
        "unknot-kinks-mixed": "unknot_fallback",
        "trefoil": "torus_fallback",
        "trefoil-mirror": "torus_fallback",
        "figure-eight": "hyperbolic",
        "granny": "hyperbolic",
        "square": "hyperbolic",
        "trefoil-switched": "hyperbolic",
    }
    for name, case in expected_case.items():
        K = corpus[name]
        rep = reduce_alternating(K, T)
        assert rep.case == case, name
        target = rep.plat
        got = (
            framed_invariant_plat(target, N)
            if target is not None
            else framed_invariant(rep.output, N, cap=34)
        )
        assert got == framed_invariant(K, N) * twist_power(N, rep.r), name
        assert rep.output.is_alternating(), name
        assert nugatory_crossings(rep.output) == [], name


def test_reduce_alternating_idempotent(corpus):
    T = 6
    out = reduce_alternating(corpus["granny"], T).output
    rep2 = reduce_alternating(out, T)
    assert rep2.case == "hyperbolic"
    assert rep2.r == 0
    assert rep2.output.crossing_count() == out.crossing_count()


def test_theory_exponent_selector():
    assert theory_exponent("tl:20") == 10
    assert theory_exponent("dw:a5/5cycle-a") == 15
    assert theory_exponent("dw:psl27/7a") == 84
    with pytest.raises(ValueError):
        theory_exponent("su2:3")

"""Bracket invariants: exact cyclotomic arithmetic and both evaluators."""

import cmath
import random
from math import gcd, lcm

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotpad.bracket import (
    bracket_pd,
    bracket_pd_bruteforce,
    bracket_pd_laurent,
    bracket_plat,
    framed_invariant,
    jones_value,
    tl_vafa_exponent,
    tl_vafa_is_exact,
    twist_power,
)
from knotpad.cyclotomic import CyclotomicInt, LaurentZ, loop_value, multiplicative_order
from knotpad.pd import BudgetError, kinked_unknot, unknot_diagram
from knotpad.plat import plat_to_pd, random_plat

# raw normalized brackets of the named corpus, frozen from two independent
# evaluators (skein resolution and the 2^n state sum)
FROZEN_BRACKETS = {
    "trefoil": {7: 1, 3: -1, -5: -1},
    "trefoil-mirror": {5: -1, -3: -1, -7: 1},
    "figure-eight": {8: 1, 4: -1, 0: 1, -4: -1, -8: 1},
    "5_2": {9: 1, 5: -1, 1: 1, -3: -2, -7: 1, -11: -1},
    "6_1": {10: 1, 6: -1, 2: 1, -2: -2, -6: 2, -10: -1, -14: 1},
    "granny": {14: 1, 10: -2, 6: 1, 2: -2, -2: 2, -10: 1},
    "square": {12: -1, 8: 1, 4: -1, 0: 3, -4: -1, -8: 1, -12: -1},
}


def test_cyclotomic_ring_basics():
    N = 12
    one = CyclotomicInt.one(N)
    z = CyclotomicInt.root_power(N, 1)
    assert z ** N == one
    assert z ** (N + 3) == z ** 3
    assert (z + z) * one == z + z
    assert twist_power(N, 1) == CyclotomicInt.root_power(N, 3, -1)
    assert twist_power(N, 2) * twist_power(N, -2) == one


def test_laurent_reduce_mod_matches_direct():
    p = LaurentZ({7: 2, -5: -1, 0: 3})
    for N in (8, 12, 20):
        direct = (
            CyclotomicInt.root_power(N, 7, 2)
            + CyclotomicInt.root_power(N, -5, -1)
            + CyclotomicInt.root_power(N, 0, 3)
        )
        assert p.reduce_mod(N) == direct


def test_frozen_brackets(corpus):
    for name, want in FROZEN_BRACKETS.items():
        assert bracket_pd_laurent(corpus[name]).coeffs == want, name


def test_skein_matches_state_sum(corpus):
    for name, K in corpus.items():
        if K.crossing_count() > 8:
            continue
        for N in (12, 20):
            assert bracket_pd(K, N) == bracket_pd_bruteforce(K, N), (name, N)


def test_jones_kink_invariance():
    for N in (12, 20):
        base = jones_value(unknot_diagram(), N)
        for signs in ((1,), (-1,), (1, 1, -1)):
            assert jones_value(kinked_unknot(signs), N) == base


def test_framed_invariant_kink_twist():
    # each positive kink multiplies the framed invariant by theta
    for N in (12, 20):
        theta = twist_power(N, 1)
        assert framed_invariant(kinked_unknot((1,)), N) == theta
        assert framed_invariant(kinked_unknot((-1, -1)), N) == twist_power(N, -2)


def test_bracket_cap():
    from knotpad.plat import PlatDiagram

    K = plat_to_pd(PlatDiagram(2, [[31]]))
    with pytest.raises(BudgetError):
        bracket_pd(K, 12, cap=26)
    # the skein evaluator absorbs twist regions in linear time
    assert bracket_pd(K, 12, cap=40) is not None


def test_tl_vafa_exponent_frozen():
    assert tl_vafa_exponent(8) == 4
    assert tl_vafa_exponent(12) == 6
    assert tl_vafa_exponent(20) == 10
    assert tl_vafa_exponent(28) == 14
    # exactness flag: at N = 8 the loop value vanishes at the primitive root
    delta8 = sum(
        c * cmath.exp(2j * cmath.pi * k / 8) for k, c in enumerate(loop_value(8).vec)
    )
    assert abs(delta8) < 1e-9
    assert not tl_vafa_is_exact(8)
    assert all(tl_vafa_is_exact(N) for N in (12, 20, 28))


def test_tl_vafa_exponent_eigenvalue_oracle():
    # squared braiding eigenvalues are A^2 and A^-6
    for N in range(4, 40, 2):
        want = lcm(N // gcd(N, 2), N // gcd(N, 6))
        assert tl_vafa_exponent(N) == want
        assert multiplicative_order(N, 2) == N // gcd(N, 2)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([2, 3]), st.integers(1, 4))
def test_plat_sweep_matches_skein(seed, m, n):
    rng = random.Random(seed)
    P = random_plat(rng, m, n, max_coeff=2)
    K = plat_to_pd(P)
    if K.crossing_count() > 20:
        return
    assert bracket_plat(P, 12) == bracket_pd(K, 12, cap=24)

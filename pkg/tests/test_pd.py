"""Diagram core: oriented PD codes, faces, builders, serialization."""

import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotpad.pd import (
    DiagramError,
    NotAKnotError,
    OrientedPDDiagram,
    connect_sum,
    kinked_unknot,
    mirror,
    parse_pd,
    switch_crossing,
    unknot_diagram,
)
from knotpad.plat import PlatDiagram, plat_to_pd, random_plat

TREFOIL = [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]


def test_unknot_diagram():
    U = unknot_diagram()
    assert U.unknotted
    assert U.crossing_count() == 0
    assert U.writhe() == 0
    assert U.is_alternating()


def test_trefoil_structure():
    K = OrientedPDDiagram(TREFOIL)
    assert K.crossing_count() == 3
    assert K.component_count() == 1
    assert K.writhe() == -3
    assert all(K.sign(c) == -1 for c in range(3))
    assert K.is_alternating()
    # Euler: a planar 4-valent map with V crossings has V + 2 faces
    assert len(K.faces) == 5


def test_mirror_and_switch():
    K = OrientedPDDiagram(TREFOIL)
    assert mirror(K).writhe() == 3
    assert mirror(mirror(K)).writhe() == K.writhe()
    S = switch_crossing(K, 0)
    assert S.writhe() == -1
    assert not S.is_alternating()


def test_connect_sum_writhe():
    K = OrientedPDDiagram(TREFOIL)
    G = connect_sum(K, K)
    assert G.crossing_count() == 6
    assert G.writhe() == -6
    assert G.component_count() == 1


def test_kinked_unknot():
    for signs in ((1,), (-1,), (1, 1, -1), (-1, -1, -1, 1)):
        K = kinked_unknot(signs)
        assert K.crossing_count() == len(signs)
        assert K.writhe() == sum(signs)
        assert K.component_count() == 1


def test_serialize_round_trip(corpus):
    for name, K in corpus.items():
        back = parse_pd(K.serialize())
        assert back.crossings == K.crossings, name
        assert back.unknotted == K.unknotted, name


def test_parse_pd_rejects_garbage():
    with pytest.raises(DiagramError):
        parse_pd("{not json")
    with pytest.raises(DiagramError):
        parse_pd(json.dumps({"type": "pd", "crossings": [[1, 2, 3]]}))
    with pytest.raises(DiagramError):
        parse_pd(json.dumps({"type": "plat", "m": 2, "rows": [[1]]}))


def test_two_component_closure_rejected():
    # an even twist region on two cups closes to a two-component link
    with pytest.raises(NotAKnotError):
        plat_to_pd(PlatDiagram(2, [[2]]))


def test_non_planar_code_rejected():
    with pytest.raises(DiagramError):
        # edge identifications that cannot be drawn in the plane
        OrientedPDDiagram([[1, 2, 3, 4], [1, 2, 3, 4]])


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([2, 3]), st.integers(1, 5))
def test_random_plat_pd_invariants(seed, m, n):
    rng = random.Random(seed)
    P = random_plat(rng, m, n)
    K = plat_to_pd(P)
    assert K.component_count() == 1
    if K.crossing_count():
        assert len(K.faces) == K.crossing_count() + 2
        assert K.writhe() == sum(K.sign(c) for c in range(K.crossing_count()))
    back = parse_pd(K.serialize())
    assert back.crossings == K.crossings

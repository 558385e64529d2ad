"""Finite groups with a marked class and the homomorphism-counting oracles."""

import pytest

from knotpad.groups import (
    FiniteGroupWithClass,
    load_preset,
    parse_group,
    preset_names,
)
from knotpad.homcount import (
    dw_vafa_exponent,
    dw_vafa_exponent_full,
    homcount_pd,
    homcount_plat,
)
from knotpad.pd import DiagramError, unknot_diagram
from knotpad.plat import PlatDiagram, plat_to_pd

# homomorphism counts frozen from the Wirtinger backtracker and checked
# against the plat sweep
FROZEN_COUNTS = {
    ("trefoil", "a5/5cycle-a"): 72,
    ("trefoil", "a5/3cycle"): 140,
    ("figure-eight", "psl27/7a"): 360,
    ("5_2", "a5/5cycle-a"): 72,
    ("6_1", "a5/3cycle"): 20,
    ("granny", "a5/5cycle-a"): 432,
    ("square", "a5/5cycle-a"): 432,
}


def test_preset_shapes():
    assert preset_names() == ("a5/3cycle", "a5/5cycle-a", "a5/5cycle-b", "psl27/7a")
    sizes = {"a5/5cycle-a": 12, "a5/5cycle-b": 12, "a5/3cycle": 20, "psl27/7a": 24}
    for name, csize in sizes.items():
        GC = load_preset(name)
        assert GC.order == (168 if name.startswith("psl") else 60)
        assert len(GC.class_indices) == csize


def test_a5_exponent():
    assert load_preset("a5/5cycle-a").exponent() == 30


def test_group_serialization_round_trip():
    GC = load_preset("a5/3cycle")
    back = parse_group(GC.serialize())
    assert back.table == GC.table
    assert back.class_indices == GC.class_indices


def test_group_validation():
    with pytest.raises(DiagramError):
        FiniteGroupWithClass([[0, 1], [1, 1]], [1])  # 1 has no inverse
    with pytest.raises(DiagramError):
        FiniteGroupWithClass([[0, 1], [1, 0]], [])  # empty class
    with pytest.raises(DiagramError):
        parse_group('{"type":"group","table":[[0]],"class":[0],"order":7}')


def test_frozen_homcounts(corpus):
    for (name, preset), want in FROZEN_COUNTS.items():
        assert homcount_pd(corpus[name], load_preset(preset)) == want, (name, preset)


def test_unknot_count_is_class_size():
    for preset in preset_names():
        GC = load_preset(preset)
        assert homcount_pd(unknot_diagram(), GC) == len(GC.class_indices)


def test_pd_and_plat_sweeps_agree(corpus):
    GC = load_preset("a5/5cycle-a")
    # the left trefoil as a 2-plat, and a twisted unknot
    cases = [
        (PlatDiagram(2, [[3]]), corpus["trefoil-mirror"]),
        (PlatDiagram(2, [[-3]]), corpus["trefoil"]),
    ]
    for P, K in cases:
        assert homcount_plat(P, GC) == homcount_pd(K, GC)
    assert homcount_plat(PlatDiagram(2, [[1]]), GC) == len(GC.class_indices)


def test_dw_vafa_exponents_frozen():
    assert dw_vafa_exponent(load_preset("a5/5cycle-a")) == 15
    assert dw_vafa_exponent(load_preset("a5/5cycle-b")) == 15
    assert dw_vafa_exponent(load_preset("a5/3cycle")) == 30
    assert dw_vafa_exponent(load_preset("psl27/7a")) == 42
    # with inverse-class strands included; differs only when C != C^-1
    assert dw_vafa_exponent_full(load_preset("a5/5cycle-a")) == 15
    assert dw_vafa_exponent_full(load_preset("psl27/7a")) == 84


def test_dw_twist_padding_invisible():
    # 2e extra half-twists in any region leave the count unchanged
    GC = load_preset("a5/5cycle-a")
    e = dw_vafa_exponent_full(GC)
    P = PlatDiagram(3, [[-4, 3], [0, -1, -3], [1, -4]])
    base = homcount_plat(P, GC)
    for i, j in ((0, 0), (1, 2), (2, 1)):
        rows = [list(r) for r in P.rows]
        rows[i][j] += 2 * e if rows[i][j] >= 0 else -2 * e
        assert homcount_plat(PlatDiagram(3, rows), GC) == base, (i, j)

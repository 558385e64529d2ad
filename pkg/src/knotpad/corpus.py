"""Bundled test corpus: named small knots plus seeded random plats.

The named diagrams cover every pipeline branch: the trivial diagram and
kinked unknots (unknot fallback), both trefoils (torus fallback), small
hyperbolic knots, granny/square composites (prime decomposition), and a
switched-crossing set that is not alternating as drawn.
"""

from __future__ import annotations

import random

from .pd import (
    OrientedPDDiagram,
    connect_sum,
    kinked_unknot,
    mirror,
    switch_crossing,
    unknot_diagram,
)
from .plat import PlatDiagram, random_plat

# minimal alternating codes; quadruples are CCW from the incoming under edge
TREFOIL = ((1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3))
FIGURE_EIGHT = ((4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8))
FIVE_TWO = ((1, 4, 2, 5), (3, 8, 4, 9), (5, 10, 6, 1), (9, 6, 10, 7), (7, 2, 8, 3))
SIX_ONE = (
    (1, 4, 2, 5),
    (7, 10, 8, 11),
    (3, 9, 4, 8),
    (9, 3, 10, 2),
    (5, 12, 6, 1),
    (11, 6, 12, 7),
)

RANDOM_PLAT_COUNT = 50
RANDOM_PLAT_SEED = 20260823


def named_diagrams() -> dict[str, OrientedPDDiagram]:
    """The named PD corpus, in a fixed order."""
    tref = OrientedPDDiagram(TREFOIL)
    mtref = mirror(tref)
    granny = connect_sum(tref, tref)
    square = connect_sum(tref, mtref)
    out = {
        "unknot": unknot_diagram(),
        "unknot-kink-pos": kinked_unknot((1,)),
        "unknot-kink-neg": kinked_unknot((-1,)),
        "unknot-kinks-mixed": kinked_unknot((1, 1, -1)),
        "trefoil": tref,
        "trefoil-mirror": mtref,
        "figure-eight": OrientedPDDiagram(FIGURE_EIGHT),
        "5_2": OrientedPDDiagram(FIVE_TWO),
        "6_1": OrientedPDDiagram(SIX_ONE),
        "granny": granny,
        "square": square,
        # switched crossings break the alternating pattern without changing
        # the underlying shadow, exercising the flip stage
        "trefoil-switched": switch_crossing(tref, 0),
        "figure-eight-switched": switch_crossing(OrientedPDDiagram(FIGURE_EIGHT), 1),
        "granny-switched": switch_crossing(granny, 0),
    }
    return out


def random_plats(
    count: int = RANDOM_PLAT_COUNT, seed: int = RANDOM_PLAT_SEED
) -> dict[str, PlatDiagram]:
    """Seeded random knot plats, reproducible across runs."""
    rng = random.Random(seed)
    out = {}
    for i in range(count):
        m = rng.choice((2, 3, 3, 4))
        n = rng.randrange(2, 9)
        out[f"rand-plat-{i:02d}"] = random_plat(rng, m, n)
    return out


def corpus_entries() -> dict[str, OrientedPDDiagram | PlatDiagram]:
    """All corpus objects keyed by name; PD diagrams first, then plats."""
    entries: dict[str, OrientedPDDiagram | PlatDiagram] = {}
    entries.update(named_diagrams())
    entries.update(random_plats())
    return entries

"""Counting knot-group homomorphisms with meridians in a marked class.

Two independent algorithms: a Wirtinger arc-coloring backtracker on PD
diagrams, and a deterministic strand sweep on plats.  The sweep colors each
strand position with the image of a fixed-frame meridian (linking the strand
positively with respect to the upward direction); in that frame every
half-twist acts as a bijection on the pair of colors, so the state count
never exceeds the |C|^m cup seeds.

Fixed-frame rules per half-twist on positions (i, j), with bottom colors
(x, y): a box +1 twist sends them to (x y x^-1, x); a box -1 twist to
(y, y^-1 x y).  A cup emits (g, g^-1) with g in C on its upward leg.
"""

from __future__ import annotations

import numpy as np

from .groups import FiniteGroupWithClass
from .pd import BudgetError, NotAKnotError, OrientedPDDiagram
from .plat import PlatDiagram, plat_component_count

DEFAULT_ARC_CAP = 60
DEFAULT_STATE_BUDGET = 4_000_000


def _pd_arcs(K: OrientedPDDiagram):
    """Wirtinger arcs: edges merged through over passes.

    Returns (arc id per edge label, list of relations (in, over, out, sign)).
    """
    parent = {e: e for e in K.edge_ends}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for c, quad in enumerate(K.crossings):
        oin = K.over_in[c]
        a, b = quad[oin], quad[(oin + 2) % 4]
        parent[find(a)] = find(b)
    relations = []
    for c, quad in enumerate(K.crossings):
        relations.append((find(quad[0]), find(quad[1]), find(quad[2]), K.sign(c)))
    return {e: find(e) for e in K.edge_ends}, relations


def homcount_pd(
    K: OrientedPDDiagram, GC: FiniteGroupWithClass, arc_cap: int = DEFAULT_ARC_CAP
) -> int:
    """Count colorings of Wirtinger arcs by elements of C.

    At each crossing the over arc g rewrites the under arc: out = g in g^-1
    at a positive crossing and g^-1 in g at a negative one.  Backtracking
    with forced propagation: once the in and over arcs of a relation are
    colored, the out arc is determined.
    """
    if K.unknotted:
        return len(GC.class_indices)
    arc_of, relations = _pd_arcs(K)
    arcs = sorted(set(arc_of.values()))
    if len(arcs) > arc_cap:
        raise BudgetError(f"arc cap exceeded: {len(arcs)} arcs > {arc_cap}")
    cls = GC.class_indices
    mul, inv = GC.table, GC.inv

    def apply_rel(g, h, sign):
        # out = g h g^-1 at positive crossings, g^-1 h g at negative ones
        if sign > 0:
            return mul[mul[g][h]][inv[g]]
        return mul[mul[inv[g]][h]][g]

    def propagate(assign):
        # forward (in + over => out) and backward (out + over => in);
        # returns newly forced arcs, or None on contradiction
        forced = []
        changed = True
        while changed:
            changed = False
            for hin, g, hout, sign in relations:
                if g not in assign:
                    continue
                if hin in assign:
                    val = apply_rel(assign[g], assign[hin], sign)
                    tgt = hout
                elif hout in assign:
                    val = apply_rel(assign[g], assign[hout], -sign)
                    tgt = hin
                else:
                    continue
                if tgt in assign:
                    if assign[tgt] != val:
                        for a in forced:
                            del assign[a]
                        return None
                else:
                    assign[tgt] = val
                    forced.append(tgt)
                    changed = True
        return forced

    def pick_free(assign):
        # prefer an over arc of a relation with a colored endpoint: its
        # assignment immediately forces the other endpoint
        for hin, g, hout, _sign in relations:
            if g not in assign and (hin in assign or hout in assign):
                return g
        return next((a for a in arcs if a not in assign), None)

    def count(assign):
        free = pick_free(assign)
        if free is None:
            return 1
        total = 0
        for g in cls:
            assign[free] = g
            forced = propagate(assign)
            if forced is not None:
                total += count(assign)
                for a in forced:
                    del assign[a]
            del assign[free]
        return total

    return count({})


# ---------------------------------------------------------------------------
# Plat strand sweep
# ---------------------------------------------------------------------------


def _plat_leg_directions(P: PlatDiagram) -> list[bool]:
    """For each bottom position (0-based), True when the knot runs upward there.

    Traces the single component through the grid permutation.
    """
    if plat_component_count(P) != 1:
        raise NotAKnotError("plat closure is not a knot")
    width = 2 * P.m
    perm = list(range(width))  # bottom position -> top position
    for i, row in enumerate(P.rows, start=1):
        for (p, q), a in zip(P.row_pairs(i), row):
            if a % 2 != 0:
                ip, iq = perm.index(p - 1), perm.index(q - 1)
                perm[ip], perm[iq] = perm[iq], perm[ip]
    inv_perm = [0] * width
    for b, t in enumerate(perm):
        inv_perm[t] = b
    bottom_partner = {}
    top_partner = {}
    for a, b in P.bottom_matching():
        bottom_partner[a - 1] = b - 1
        bottom_partner[b - 1] = a - 1
    for a, b in P.top_matching():
        top_partner[a - 1] = b - 1
        top_partner[b - 1] = a - 1
    up = [False] * width
    pos, going_up = 0, True
    for _ in range(2 * width):
        if going_up:
            up[pos] = True
            pos = top_partner[perm[pos]]
            going_up = False
        else:
            pos = bottom_partner[inv_perm[pos]]
            going_up = True
            if pos == 0:
                break
    return up


def homcount_plat(
    P: PlatDiagram,
    GC: FiniteGroupWithClass,
    state_budget: int = DEFAULT_STATE_BUDGET,
) -> int:
    """Count class-C colorings by sweeping fixed-frame colors up the plat."""
    csize = len(GC.class_indices)
    if csize**P.m > state_budget:
        raise BudgetError(
            f"state budget exceeded: |C|^m = {csize}^{P.m} > {state_budget}"
        )
    up = _plat_leg_directions(P)
    n = GC.order
    mul = np.array(GC.table, dtype=np.int32)
    inv = np.array(GC.inv, dtype=np.int32)
    # conj[x, y] = x y x^-1
    conj = np.empty((n, n), dtype=np.int32)
    for x in range(GC.order):
        conj[x] = mul[mul[x], inv[x]]

    # one half-twist as a permutation of color pairs x*n + y, so a twist
    # region of coefficient a costs one gather instead of |a| sweeps
    xs, ys = np.divmod(np.arange(n * n, dtype=np.int64), n)
    tw_pos = conj[xs, ys].astype(np.int64) * n + xs
    tw_neg = ys * n + conj[inv[ys], xs].astype(np.int64)

    def twist_perm(a: int) -> np.ndarray:
        step = tw_pos if a > 0 else tw_neg
        perm = step
        for _ in range(abs(a) - 1):
            perm = step[perm]
        return perm

    cls = np.array(GC.class_indices, dtype=np.int32)
    seeds_per_cup = []
    for k in range(P.m):
        left_up = up[2 * k]
        g = cls if left_up else inv[cls]
        seeds_per_cup.append((g, inv[g]))
    S = csize**P.m
    state = np.empty((S, 2 * P.m), dtype=np.int32)
    for k, (g, ginv) in enumerate(seeds_per_cup):
        reps_outer = csize**k
        reps_inner = S // (csize ** (k + 1))
        col = np.repeat(np.tile(g, reps_outer), reps_inner)
        state[:, 2 * k] = col
        state[:, 2 * k + 1] = np.repeat(np.tile(ginv, reps_outer), reps_inner)
    for i, row in enumerate(P.rows, start=1):
        for (p, q), a in zip(P.row_pairs(i), row):
            if a == 0:
                continue
            xi, xj = p - 1, q - 1
            out = twist_perm(a)[state[:, xi].astype(np.int64) * n + state[:, xj]]
            state[:, xi], state[:, xj] = out // n, out % n
    keep = np.ones(S, dtype=bool)
    for a, b in P.top_matching():
        keep &= mul[state[:, a - 1], state[:, b - 1]] == GC.identity
    return int(np.count_nonzero(keep))


def _squared_braiding_order(GC: FiniteGroupWithClass, cls) -> int:
    from math import lcm

    mul, inv = GC.table, GC.inv

    def step(a, b):
        w = mul[a][b]
        wi = inv[w]
        return mul[mul[w][a]][wi], mul[mul[w][b]][wi]

    seen = set()
    e = 1
    for a in cls:
        for b in cls:
            if (a, b) in seen:
                continue
            # cycle of (a, b) under the squared braiding
            cyc = []
            x = (a, b)
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = step(*x)
            e = lcm(e, len(cyc))
    return e


def dw_vafa_exponent(GC: FiniteGroupWithClass) -> int:
    """Order of the squared braiding (a,b) -> ((ab)a(ab)^-1, (ab)b(ab)^-1) on C x C."""
    return _squared_braiding_order(GC, GC.class_indices)


def dw_vafa_exponent_full(GC: FiniteGroupWithClass) -> int:
    """Squared-braiding order over C together with its inverse class.

    Strands running downward carry inverses of class elements, so twist
    padding is exact for every knot only at this (possibly larger) order.
    It coincides with dw_vafa_exponent whenever C is closed under inversion,
    as for the A5 presets; the reduction pipelines use this variant.
    """
    cls = sorted(set(GC.class_indices) | {GC.inv[x] for x in GC.class_indices})
    return _squared_braiding_order(GC, cls)

"""Kauffman bracket evaluation over exact cyclotomic integers.

Two independent algorithms are provided: a skein-resolution evaluator on PD
diagrams (with eager absorption of free circles and kinks, so long twist
regions cost linear time), and a Temperley-Lieb transfer sweep on plat
diagrams.  Their agreement on random plats is part of the acceptance suite.

Conventions: <unknot> = 1; each extra circle multiplies by
delta = -A^2 - A^-2; a positive kink multiplies by theta = -A^3.
"""

from __future__ import annotations

from functools import lru_cache
from math import lcm

from .cyclotomic import (
    CyclotomicInt,
    LaurentZ,
    loop_value,
    loop_value_laurent,
    multiplicative_order,
    twist_power,
)
from .pd import BudgetError, OrientedPDDiagram
from .plat import PlatDiagram

DEFAULT_PD_CAP = 26

# smoothing pairings in the PD slot frame (under diagonal {0,2}):
# the A-smoothing joins the corners swept counterclockwise from the
# incoming under strand
_A_PAIRING = ((0, 1), (2, 3))
_B_PAIRING = ((0, 3), (1, 2))


def _smooth(conn, c, pairing):
    """Remove crossing c, rejoining its wires along the smoothing arcs.

    Returns the new wire dict and the number of free circles created.
    """
    out = {p: q for p, q in conn.items() if p[0] != c and q[0] != c}
    nb = {s: conn[(c, s)] for s in range(4)}
    portal = {}
    for a, b in pairing:
        portal[(c, a)] = (c, b)
        portal[(c, b)] = (c, a)
    visited = set()
    for s in range(4):
        start_q = nb[s]
        if start_q[0] == c or (c, s) in visited:
            continue
        visited.add((c, s))
        cur = portal[(c, s)]
        visited.add(cur)
        q = nb[cur[1]]
        while q[0] == c:
            visited.add(q)
            cur = portal[q]
            visited.add(cur)
            q = nb[cur[1]]
        out[start_q] = q
        out[q] = start_q
    loops = 0
    for s in range(4):
        p = (c, s)
        if p in visited:
            continue
        loops += 1
        cur = p
        while cur not in visited:
            visited.add(cur)
            nxt = portal[cur]
            visited.add(nxt)
            cur = nb[nxt[1]]
    return out, loops


_THETA = LaurentZ({3: -1})
_THETA_INV = LaurentZ({-3: -1})


def _resolve(conn, crossings) -> LaurentZ:
    """Raw bracket (with delta per circle, including the last) by skein resolution."""
    delta = loop_value_laurent()
    factor = LaurentZ.one()
    conn = dict(conn)
    crossings = set(crossings)
    # eagerly absorb kinks: a crossing with a wire joining adjacent slots
    changed = True
    while changed:
        changed = False
        for c in sorted(crossings):
            for s in range(4):
                t = (s + 1) % 4
                if conn.get((c, s)) == (c, t):
                    kink_factor = _THETA if (s, t) in ((0, 1), (2, 3)) else _THETA_INV
                    # the loop sits on one smoothing's arc pair; removing the
                    # crossing leaves the through strand
                    conn, loops = _smooth(
                        conn, c, _A_PAIRING if (s, t) in ((0, 1), (2, 3)) else _B_PAIRING
                    )
                    # the kink's own loop closes one circle, already priced
                    # into the kink factor; any further circles are free
                    if loops < 1:
                        raise AssertionError("kink absorption expected a circle")
                    factor = factor * kink_factor * (delta ** (loops - 1))
                    crossings.discard(c)
                    changed = True
                    break
            if changed:
                break
    if not crossings:
        # every circle was counted when its last crossing dissolved
        if conn:
            raise AssertionError("dangling wires after resolution")
        return factor

    # prefer a crossing with a bigon (two wires to one partner): its
    # A/B children simplify immediately, keeping twist regions linear
    def bigon_score(c):
        partners = {}
        for s in range(4):
            q = conn[(c, s)]
            partners[q[0]] = partners.get(q[0], 0) + 1
        return max(partners.values())

    c = max(sorted(crossings), key=bigon_score)
    rest = crossings - {c}
    conn_a, loops_a = _smooth(conn, c, _A_PAIRING)
    conn_b, loops_b = _smooth(conn, c, _B_PAIRING)
    va = _resolve(conn_a, rest) * (delta ** loops_a)
    vb = _resolve(conn_b, rest) * (delta ** loops_b)
    return factor * (LaurentZ.monomial(1) * va + LaurentZ.monomial(-1) * vb)


def bracket_pd_laurent(K: OrientedPDDiagram, cap: int | None = DEFAULT_PD_CAP) -> LaurentZ:
    """Normalized Kauffman bracket as an exact Laurent polynomial in A."""
    if K.unknotted:
        return LaurentZ.one()
    if cap is not None and K.crossing_count() > cap:
        raise BudgetError(
            f"bracket_pd cap exceeded: {K.crossing_count()} crossings > {cap}"
        )
    conn = {}
    for a, b in K.edge_ends.values():
        conn[a] = b
        conn[b] = a
    raw = _resolve(conn, range(K.crossing_count()))
    # raw carries one delta factor per circle; normalize <unknot> = 1
    return raw.exact_divide(loop_value_laurent())


def bracket_pd(K: OrientedPDDiagram, N: int, cap: int | None = DEFAULT_PD_CAP) -> CyclotomicInt:
    """Normalized Kauffman bracket at A = zeta_N, exact."""
    return bracket_pd_laurent(K, cap=cap).reduce_mod(N)


def bracket_pd_bruteforce(K: OrientedPDDiagram, N: int, cap: int = 14) -> CyclotomicInt:
    """Plain 2^n state sum; an independent oracle for small diagrams."""
    if K.unknotted:
        return CyclotomicInt.one(N)
    n = K.crossing_count()
    if n > cap:
        raise BudgetError(f"state sum cap exceeded: {n} crossings > {cap}")
    total = LaurentZ.zero()
    for mask in range(1 << n):
        # union-find over darts to count circles of the full smoothing
        parent = {}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            parent.setdefault(x, x)
            parent.setdefault(y, y)
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry

        for c in range(n):
            pairing = _A_PAIRING if (mask >> c) & 1 == 0 else _B_PAIRING
            for a, bslot in pairing:
                union((c, a), (c, bslot))
        for a, b in K.edge_ends.values():
            union(a, b)
        circles = len({find(x) for x in list(parent)})
        a_count = n - bin(mask).count("1")
        exponent = a_count - (n - a_count)
        total = total + LaurentZ.monomial(exponent) * (
            loop_value_laurent() ** circles
        )
    return total.exact_divide(loop_value_laurent()).reduce_mod(N)


def framed_invariant(K: OrientedPDDiagram, N: int, cap: int | None = DEFAULT_PD_CAP) -> CyclotomicInt:
    """The framed (regular-isotopy) invariant: the normalized bracket itself."""
    return bracket_pd(K, N, cap=cap)


def jones_value(K: OrientedPDDiagram, N: int, cap: int | None = DEFAULT_PD_CAP) -> CyclotomicInt:
    """Writhe-compensated bracket (-A^3)^{-w} <K>: an ambient-isotopy invariant."""
    w = K.writhe()
    return twist_power(N, -w) * bracket_pd(K, N, cap=cap)


# ---------------------------------------------------------------------------
# Temperley-Lieb sweep on plats
# ---------------------------------------------------------------------------

DEFAULT_PLAT_M_CAP = 7


@lru_cache(maxsize=None)
def planar_matchings(m: int) -> tuple[tuple[int, ...], ...]:
    """All noncrossing perfect matchings of 2m points as partner tuples."""
    if m == 0:
        return (tuple(),)

    def gen(points):
        if not points:
            return [{}]
        first = points[0]
        results = []
        for k in range(1, len(points), 2):
            mate = points[k]
            for left in gen(points[1:k]):
                for right in gen(points[k + 1 :]):
                    d = {first: mate, mate: first}
                    d.update(left)
                    d.update(right)
                    results.append(d)
        return results

    out = [
        tuple(d[i] for i in range(2 * m)) for d in gen(tuple(range(2 * m)))
    ]
    return tuple(sorted(out))


def _cup_matching(m: int) -> tuple[int, ...]:
    partner = {}
    for j in range(m):
        partner[2 * j] = 2 * j + 1
        partner[2 * j + 1] = 2 * j
    return tuple(partner[i] for i in range(2 * m))


def _matching_from_pairs(m: int, pairs) -> tuple[int, ...]:
    partner = {}
    for a, b in pairs:
        partner[a - 1] = b - 1
        partner[b - 1] = a - 1
    return tuple(partner[i] for i in range(2 * m))


def _apply_e(M: tuple[int, ...], i: int):
    """Apply the TL cup-cap generator at positions (i, i+1).

    Returns (new matching, closed_circle) where closed_circle is True when
    M already paired i with i+1 (the generator closes a circle).
    """
    if M[i] == i + 1:
        return M, True
    pi, pj = M[i], M[i + 1]
    out = list(M)
    out[i], out[i + 1] = i + 1, i
    out[pi], out[pj] = pj, pi
    return tuple(out), False


def _twist_coefficients(N: int, a: int) -> tuple[CyclotomicInt, CyclotomicInt]:
    """R^a = alpha * id + beta * e on two strands, exactly.

    R is the box +1 crossing A*id + A^-1*e; alpha = A^a, and beta follows the
    two-term recurrence obtained from e*R = -A^-3 e.
    """
    alpha = CyclotomicInt.root_power(N, a)
    beta = CyclotomicInt.zero(N)
    if a > 0:
        for k in range(1, a + 1):
            # beta_k = A^{k-2} - A^{-3} beta_{k-1}
            beta = CyclotomicInt.root_power(N, k - 2) - (
                CyclotomicInt.root_power(N, -3) * beta
            )
    elif a < 0:
        for k in range(1, -a + 1):
            # mirrored recurrence for R^{-1} = A^-1 id + A e
            beta = CyclotomicInt.root_power(N, -(k - 2)) - (
                CyclotomicInt.root_power(N, 3) * beta
            )
    return alpha, beta


def _closure_loops(M: tuple[int, ...], top: tuple[int, ...]) -> int:
    """Circles formed by gluing matching M to the top matching."""
    seen = set()
    loops = 0
    for start in range(len(M)):
        if start in seen:
            continue
        loops += 1
        x = start
        while x not in seen:
            seen.add(x)
            y = M[x]
            seen.add(y)
            x = top[y]
    return loops


def bracket_plat(P: PlatDiagram, N: int, m_cap: int = DEFAULT_PLAT_M_CAP) -> CyclotomicInt:
    """Kauffman bracket of the plat closure via a Temperley-Lieb sweep."""
    if P.m > m_cap:
        raise BudgetError(f"plat sweep cap exceeded: m={P.m} > {m_cap}")
    delta = loop_value(N)
    state: dict[tuple[int, ...], CyclotomicInt] = {_cup_matching(P.m): CyclotomicInt.one(N)}
    for i, row in enumerate(P.rows, start=1):
        for (p, _q), a in zip(P.row_pairs(i), row):
            if a == 0:
                continue
            alpha, beta = _twist_coefficients(N, a)
            new: dict[tuple[int, ...], CyclotomicInt] = {}
            pos = p - 1  # 0-based left strand of the pair
            for M, amp in state.items():
                eM, closed = _apply_e(M, pos)
                if closed:
                    v = amp * (alpha + beta * delta)
                    new[M] = new.get(M, CyclotomicInt.zero(N)) + v
                else:
                    va = amp * alpha
                    new[M] = new.get(M, CyclotomicInt.zero(N)) + va
                    vb = amp * beta
                    new[eM] = new.get(eM, CyclotomicInt.zero(N)) + vb
            state = new
    top = _matching_from_pairs(P.m, P.top_matching())
    total = CyclotomicInt.zero(N)
    for M, amp in state.items():
        loops = _closure_loops(M, top)
        total = total + amp * (delta ** (loops - 1))
    return total


def framed_invariant_plat(P: PlatDiagram, N: int) -> CyclotomicInt:
    return bracket_plat(P, N)


# ---------------------------------------------------------------------------
# Self-braiding exponent for the Temperley-Lieb theory
# ---------------------------------------------------------------------------


def tl_vafa_exponent(N: int) -> int:
    """Order of the squared TL braiding at A = zeta_N.

    The crossing acts on two strands with eigenvalues {A, -A^-3}, so the
    square has eigenvalues {A^2, A^-6}; the exponent is the lcm of their
    multiplicative orders, verified by brute-force powering.
    """
    if N < 3:
        raise ValueError("root order must be at least 3")
    e = lcm(multiplicative_order(N, 2), multiplicative_order(N, 6))
    # brute-force verification on the eigenvalue pair
    x = CyclotomicInt.one(N)
    y = CyclotomicInt.one(N)
    a2 = CyclotomicInt.root_power(N, 2)
    a6 = CyclotomicInt.root_power(N, -6)
    order = 0
    for k in range(1, e + 1):
        x = x * a2
        y = y * a6
        if x == CyclotomicInt.one(N) and y == CyclotomicInt.one(N):
            order = k
            break
    if order != e:
        raise AssertionError("eigenvalue order disagrees with the lcm formula")
    return e


def tl_vafa_is_exact(N: int) -> bool:
    """Whether R^{2e} is actually the identity TL operator (not just on eigenvalues).

    At root orders where the loop value delta vanishes (N = 8, and N = 3
    trivially small), the squared braiding is a Jordan block and no power of
    it is the identity; twist-padding then fails to preserve the bracket.
    """
    e = tl_vafa_exponent(N)
    alpha, beta = _twist_coefficients(N, 2 * e)
    return alpha == CyclotomicInt.one(N) and beta.is_zero()

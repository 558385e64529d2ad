"""Standard plat diagrams: grids of twist regions with fixed matchings.

A plat on 2m strands is stored as rows of twist coefficients, row 1 at the
bottom.  Odd-indexed rows hold m-1 coefficients acting on strand pairs
(2,3), (4,5), ..., (2m-2,2m-1); even-indexed rows hold m coefficients acting
on (1,2), (3,4), ..., (2m-1,2m).  The bottom matching joins adjacent pairs
{2j-1, 2j}.  The top matching depends on the parity of the row count n:
adjacent pairs for odd n, and {1, 2m} plus {2j, 2j+1} for even n.
"""

from __future__ import annotations

import json
import random

from .pd import DiagramBuilder, DiagramError, NotAKnotError, OrientedPDDiagram, unknot_diagram


class PlatDiagram:
    """Immutable standard plat diagram."""

    def __init__(self, m: int, rows):
        if m < 1:
            raise DiagramError("plat number m must be positive")
        self.m = int(m)
        self.rows: tuple[tuple[int, ...], ...] = tuple(
            tuple(int(a) for a in row) for row in rows
        )
        for i, row in enumerate(self.rows, start=1):
            want = self.m - 1 if i % 2 == 1 else self.m
            if len(row) != want:
                raise DiagramError(
                    f"row {i} has {len(row)} coefficients, expected {want}"
                )

    @property
    def n(self) -> int:
        return len(self.rows)

    def row_pairs(self, i: int) -> list[tuple[int, int]]:
        """Strand pairs (1-based positions) acted on by row i (1-based)."""
        if i % 2 == 1:
            return [(2 * j, 2 * j + 1) for j in range(1, self.m)]
        return [(2 * j - 1, 2 * j) for j in range(1, self.m + 1)]

    def bottom_matching(self) -> list[tuple[int, int]]:
        return [(2 * j - 1, 2 * j) for j in range(1, self.m + 1)]

    def top_matching(self) -> list[tuple[int, int]]:
        if self.n % 2 == 1:
            return [(2 * j - 1, 2 * j) for j in range(1, self.m + 1)]
        caps = [(2 * j, 2 * j + 1) for j in range(1, self.m)]
        caps.append((1, 2 * self.m))
        return caps

    def is_highly_twisted(self) -> bool:
        return all(abs(a) >= 3 for row in self.rows for a in row)

    def total_crossings(self) -> int:
        return sum(abs(a) for row in self.rows for a in row)

    def to_json_obj(self) -> dict:
        return {"type": "plat", "m": self.m, "rows": [list(r) for r in self.rows]}

    def serialize(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":")) + "\n"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PlatDiagram)
            and self.m == other.m
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.m, self.rows))

    def __repr__(self) -> str:
        return f"PlatDiagram(m={self.m}, n={self.n}, crossings={self.total_crossings()})"


def parse_plat(text: str) -> PlatDiagram:
    """Parse a Plat-JSON document."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramError(f"malformed JSON: {exc}") from exc
    if not isinstance(obj, dict) or obj.get("type") != "plat":
        raise DiagramError('expected {"type":"plat",...}')
    if not isinstance(obj.get("m"), int) or not isinstance(obj.get("rows"), list):
        raise DiagramError('plat document needs integer "m" and list "rows"')
    return PlatDiagram(obj["m"], obj["rows"])


def plat_component_count(P: PlatDiagram) -> int:
    """Number of link components of the plat closure.

    Counted on the strand permutation: an odd twist coefficient swaps its
    pair, an even one does not.
    """
    width = 2 * P.m
    parent = list(range(2 * width))  # bottom endpoints 0..w-1, top w..2w-1

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        parent[find(a)] = find(b)

    perm = list(range(width))  # perm[bottom position] = top position (0-based)
    for i, row in enumerate(P.rows, start=1):
        for (p, q), a in zip(P.row_pairs(i), row):
            if a % 2 != 0:
                ip = perm.index(p - 1)
                iq = perm.index(q - 1)
                perm[ip], perm[iq] = perm[iq], perm[ip]
    for bottom, top in enumerate(perm):
        union(bottom, width + top)
    for a, b in P.bottom_matching():
        union(a - 1, b - 1)
    for a, b in P.top_matching():
        union(width + a - 1, width + b - 1)
    return len({find(x) for x in range(2 * width)})


def plat_to_pd(P: PlatDiagram, require_knot: bool = True) -> OrientedPDDiagram:
    """Expand a plat into a PD diagram with one crossing per half-twist."""
    b = DiagramBuilder()
    width = 2 * P.m
    current: list = [None] * (width + 1)  # 1-based positions
    for j in range(1, P.m + 1):
        cup = b.add_junction()
        current[2 * j - 1] = b.jport(cup, 0)
        current[2 * j] = b.jport(cup, 1)
    for i, row in enumerate(P.rows, start=1):
        for (p, q), a in zip(P.row_pairs(i), row):
            if a == 0:
                continue
            bl, br, tl, tr = b.twist_chain(a)
            b.connect(current[p], bl)
            b.connect(current[q], br)
            current[p] = tl
            current[q] = tr
    for a, c in P.top_matching():
        b.connect(current[a], current[c])
    try:
        return b.to_diagram(require_knot=require_knot)
    except NotAKnotError:
        raise NotAKnotError(
            f"plat closure has {plat_component_count(P)} components, not a knot"
        )


def random_plat(
    rng: random.Random,
    m: int,
    n: int,
    max_coeff: int = 3,
    require_knot: bool = True,
    max_tries: int = 400,
) -> PlatDiagram:
    """Random plat with coefficients in [-max_coeff, max_coeff].

    When ``require_knot`` is set, resamples until the closure is a knot.
    """
    for _ in range(max_tries):
        rows = []
        for i in range(1, n + 1):
            count = m - 1 if i % 2 == 1 else m
            rows.append([rng.randint(-max_coeff, max_coeff) for _ in range(count)])
        P = PlatDiagram(m, rows)
        if not require_knot or (
            plat_component_count(P) == 1 and P.total_crossings() > 0
        ):
            return P
    raise RuntimeError("could not sample a knot plat")
